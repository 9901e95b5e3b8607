#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homvec.hpp"

namespace homvec::suites {

struct SuiteReport {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool passed() const { return failed_ == 0; }
    std::string summary(const std::string& extra) const {
        std::ostringstream out;
        out << checks_ << " checks, " << failed_ << " failed";
        if (!extra.empty()) out << "; " << extra;
        for (const auto& f : failures_) out << "; FAIL " << f;
        return out.str();
    }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

inline std::string g6(const Graph& g) { return write_graph6(g); }

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 7);
    return make_rational(num(rng), den(rng));
}

/// Uniformly random labelled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 1) return independent(1);
    std::vector<Vertex> seq(n - 2);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (auto& s : seq) s = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (auto s : seq) ++degree[s];
    std::vector<Edge> edges;
    for (auto s : seq) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, s);
        --degree[leaf];
        --degree[s];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Graph(n, edges);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// I_m (+) P_2^{(+)n}
inline Graph vertices_and_edges(std::size_t m, std::size_t n) {
    return disjoint_union(n_fold_union(independent(1), m), n_fold_union(path(2), n));
}

inline Polynomial xm1() { return Polynomial::x() - Polynomial::constant(1); }

}  // namespace detail

/// hom(D, G) = sum_E sur(D, E) inj(E, G) / aut(E) over all ordered pairs of
/// types on at most 4 vertices.
inline SuiteReport decomposition() {
    detail::Checker c;
    const auto types = enumerate_graphs(4);
    c.expect(types.size() == 18, "18 types on <= 4 vertices");
    for (const auto& d : types)
        for (const auto& g : types) {
            try {
                auto r = decomposition_check(d, g);
                c.expect(r.lhs == r.rhs, "lhs = rhs for D=" + detail::g6(d) + " G=" + detail::g6(g));
            } catch (const InvariantError& e) {
                c.expect(false, e.what());
            }
        }
    return {1, "decomposition", c.passed(), c.summary(std::to_string(types.size() * types.size()) + " pairs"), 0};
}

/// Every pair of non-isomorphic graphs on <= 5 vertices is separated by both
/// the left and the right vector over all graphs on <= 5 vertices.
inline SuiteReport vector_completeness() {
    detail::Checker c;
    const auto graphs = enumerate_graphs(5);
    const auto cls = ClassSpec::named(NamedClass::all, 5);
    std::vector<std::vector<BigCount>> left, right;
    for (const auto& g : graphs) {
        left.push_back(left_vector(g, cls).counts());
        right.push_back(right_vector(g, cls).counts());
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            ++pairs;
            c.expect(left[i] != left[j], "left distinguisher for " + detail::g6(graphs[i]) + " vs " + detail::g6(graphs[j]));
            c.expect(right[i] != right[j], "right distinguisher for " + detail::g6(graphs[i]) + " vs " + detail::g6(graphs[j]));
        }
    return {2, "vector-completeness", c.passed(), c.summary(std::to_string(pairs) + " non-isomorphic pairs"), 0};
}

/// Colour refinement and the exact LP agree; G_n, H_n are fractionally
/// isomorphic and 2-WL separates G_3 from H_3.
inline SuiteReport fractional_isomorphism() {
    detail::Checker c;
    for (std::size_t n : {3u, 4u}) {
        auto [g, h] = gen_frac_pair(n);
        c.expect(wl_equivalent(g, h, 1), "1-WL(G_n,H_n) n=" + std::to_string(n));
        c.expect(fractional_isomorphism_lp(g, h).has_value(), "LP(G_n,H_n) n=" + std::to_string(n));
    }
    auto [g3, h3] = gen_frac_pair(3);
    c.expect(!wl_equivalent(g3, h3, 2), "2-WL separates G_3, H_3");
    std::size_t pairs = 0, equivalent = 0;
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto& level = graphs_on(k);
        for (std::size_t i = 0; i < level.size(); ++i)
            for (std::size_t j = i; j < level.size(); ++j) {
                bool wl = wl_equivalent(level[i], level[j], 1);
                bool lp = fractional_isomorphism_lp(level[i], level[j]).has_value();
                ++pairs;
                equivalent += wl;
                c.expect(wl == lp, "deciders agree on " + detail::g6(level[i]) + " " + detail::g6(level[j]));
            }
    }
    return {3, "fractional-isomorphism", c.passed(),
            c.summary(std::to_string(pairs) + " equal-size pairs, " + std::to_string(equivalent) + " equivalent"), 0};
}

/// hom(G_n, D) > 0 iff K_n in D; hom(H_n, D) > 0 iff K_{n-1} in D.
inline SuiteReport clique_detection() {
    detail::Checker c;
    const auto targets = enumerate_graphs(6);
    for (std::size_t n : {3u, 4u}) {
        auto [g, h] = gen_frac_pair(n);
        for (const auto& d : targets) {
            c.expect((count_hom(g, d) > 0) == contains_clique_subgraph(d, n), "hom(G_n,D) n=" + std::to_string(n) + " D=" + detail::g6(d));
            c.expect((count_hom(h, d) > 0) == contains_clique_subgraph(d, n - 1),
                     "hom(H_n,D) n=" + std::to_string(n) + " D=" + detail::g6(d));
        }
    }
    return {4, "clique-detection", c.passed(), c.summary(std::to_string(targets.size()) + " targets"), 0};
}

/// Characteristic polynomial equality coincides with equality of cycle
/// homomorphism counts (degenerate cycles included); 2-WL implies cospectral.
inline SuiteReport cospectrality() {
    detail::Checker c;
    Graph a = disjoint_union(cycle(4), independent(1)), b = star(4);
    Polynomial expected = Polynomial::x().pow(5) - Polynomial::constant(4) * Polynomial::x().pow(3);
    c.expect(characteristic_polynomial(a) == expected, "p(C4+I1) = x^5 - 4x^3");
    c.expect(characteristic_polynomial(b) == expected, "p(K_{1,4}) = x^5 - 4x^3");
    for (std::size_t k = 1; k <= 5; ++k)
        c.expect(count_hom_cycle(k, a) == count_hom_cycle(k, b), "cycle hom k=" + std::to_string(k));
    const auto graphs = enumerate_graphs(5);
    std::vector<Polynomial> charpolys;
    for (const auto& g : graphs) charpolys.push_back(characteristic_polynomial(g));
    std::size_t cospectral_pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            const auto& g = graphs[i];
            const auto& h = graphs[j];
            bool same_poly = charpolys[i] == charpolys[j];
            std::size_t kmax = std::max(g.vertex_count(), h.vertex_count());
            bool same_cycles = true;
            for (std::size_t k = 1; k <= kmax && same_cycles; ++k) same_cycles = count_hom_cycle(k, g) == count_hom_cycle(k, h);
            c.expect(same_poly == same_cycles, "charpoly vs cycle vector " + detail::g6(g) + " " + detail::g6(h));
            if (wl_equivalent(g, h, 2)) c.expect(same_poly, "2-WL => cospectral " + detail::g6(g) + " " + detail::g6(h));
            cospectral_pairs += (i != j && same_poly);
        }
    return {5, "cospectrality", c.passed(), c.summary(std::to_string(cospectral_pairs) + " non-isomorphic cospectral pairs"), 0};
}

/// Closed forms, the X_1/X_2 and C_8 / C_4+C_4 examples, hom counts into
/// cliques and agreement of addition-contraction with interpolation.
inline SuiteReport chromatic() {
    detail::Checker c;
    using P = Polynomial;
    for (unsigned n = 1; n <= 8; ++n) {
        c.expect(chromatic_polynomial(independent(n)) == P::x().pow(n), "chi(I_n) n=" + std::to_string(n));
        c.expect(chromatic_polynomial(clique(n)) == falling_factorial(n), "chi(K_n) n=" + std::to_string(n));
    }
    for (unsigned n = 3; n <= 8; ++n) {
        P closed = detail::xm1().pow(n) + P::constant(n % 2 == 0 ? 1 : -1) * detail::xm1();
        c.expect(chromatic_polynomial(cycle(n)) == closed, "chi(C_n) n=" + std::to_string(n));
    }
    auto [x1, x2] = gen_chrom_pair();
    P x2xm1 = P::x().pow(2) * detail::xm1().pow(2);
    c.expect(chromatic_polynomial(x1) == x2xm1, "chi(X1) = x^2(x-1)^2");
    c.expect(chromatic_polynomial(x2) == x2xm1, "chi(X2) = x^2(x-1)^2");
    P c8 = detail::xm1().pow(8) + detail::xm1();
    P c44 = (detail::xm1().pow(4) + detail::xm1()).pow(2);
    c.expect(chromatic_polynomial(cycle(8)) == c8, "chi(C8) = (x-1)^8 + (x-1)");
    c.expect(chromatic_polynomial(disjoint_union(cycle(4), cycle(4))) == c44, "chi(C4+C4) = ((x-1)^4 + (x-1))^2");
    c.expect(!(c8 == c44), "chi(C8) != chi(C4+C4)");
    for (const auto& g : enumerate_graphs(5)) {
        P chi = chromatic_polynomial(g);
        c.expect(chi.eval(Rational(0)) == 0, "chi(G,0) = 0 for " + detail::g6(g));
        for (std::size_t k = 1; k <= 5; ++k)
            c.expect(chi.eval(Rational(k)) == Rational(count_hom(g, clique(k))),
                     "chi(G,k) = hom(G,K_k) G=" + detail::g6(g) + " k=" + std::to_string(k));
        c.expect(chi == chromatic_polynomial_by_interpolation(g), "addition-contraction = interpolation " + detail::g6(g));
    }
    return {6, "chromatic", c.passed(), c.summary(""), 0};
}

/// hom(F, X_1) >= hom(F, X_2) with equality exactly for non-bipartite F and
/// for F = I_m (+) P_2^n; hom(F, C_8) = hom(F, C_4 + C_4) = 8^m 16^n.
inline SuiteReport x1_x2_domination() {
    detail::Checker c;
    auto [x1, x2] = gen_chrom_pair();
    const auto graphs = enumerate_graphs(6);
    std::size_t equal_cases = 0;
    for (const auto& f : graphs) {
        BigCount a = count_hom(f, x1), b = count_hom(f, x2);
        c.expect(a >= b, "hom(F,X1) >= hom(F,X2) F=" + detail::g6(f));
        std::size_t maxdeg = 0;
        for (Vertex v = 0; v < f.vertex_count(); ++v) maxdeg = std::max(maxdeg, f.degree(v));
        bool vertices_and_edges = maxdeg <= 1;
        bool predicted_equal = !is_bipartite(f) || vertices_and_edges;
        c.expect((a == b) == predicted_equal, "equality characterisation F=" + detail::g6(f));
        equal_cases += (a == b);
    }
    Graph c8 = cycle(8), c44 = disjoint_union(cycle(4), cycle(4));
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; m + n <= 3; ++n) {
            if (m + n == 0) continue;
            Graph f = detail::vertices_and_edges(m, n);
            BigCount expected = boost::multiprecision::pow(BigCount(8), static_cast<unsigned>(m)) *
                                boost::multiprecision::pow(BigCount(16), static_cast<unsigned>(n));
            c.expect(count_hom(f, c8) == expected, "hom(F,C8) = 8^m 16^n m=" + std::to_string(m) + " n=" + std::to_string(n));
            c.expect(count_hom(f, c44) == expected, "hom(F,C4+C4) = 8^m 16^n m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    return {7, "x1-x2-domination", c.passed(),
            c.summary(std::to_string(graphs.size()) + " graphs, " + std::to_string(equal_cases) + " with equal counts"), 0};
}

/// CEP and independence polynomial against weighted homomorphism counts.
inline SuiteReport semiring_identities(std::uint64_t seed = 20240613) {
    detail::Checker c;
    std::mt19937_64 rng(seed);
    RationalSemiring q;
    for (const auto& g : enumerate_graphs(5)) {
        Polynomial cep = cluster_expansion_polynomial(g);
        Polynomial chi = chromatic_polynomial(g);
        for (long k = 1; k <= 4; ++k)
            c.expect(cep.eval(Rational(k), Rational(-1)) == chi.eval(Rational(k)),
                     "CEP(G;k,-1) = chi(G,k) G=" + detail::g6(g) + " k=" + std::to_string(k));
        if (g.vertex_count() <= 4) {
            std::uniform_int_distribution<long> kd(1, 4);
            for (int s = 0; s < 3; ++s) {
                long k = kd(rng);
                Rational y = detail::random_rational(rng);
                c.expect(cep.eval(Rational(k), y) == count_hom_weighted(g, gen_weighted_clique(k, y), q),
                         "CEP(G;k,y) = hom(G,K_{k,y}) G=" + detail::g6(g));
            }
        }
        Polynomial ind = independence_polynomial(g);
        for (int s = 0; s < 3; ++s) {
            Rational x = detail::random_rational(rng), y = detail::random_rational(rng);
            c.expect(ind.eval(x, y) == count_hom_weighted(g, gen_lollipop(x, y), q),
                     "I(G;x,y) = hom(G,L_{x,y}) G=" + detail::g6(g));
        }
    }
    return {8, "semiring", c.passed(), c.summary("seed " + std::to_string(seed)), 0};
}

/// chi_f and omega_f from independent primal and dual solves.
inline SuiteReport fractional_parameters() {
    detail::Checker c;
    c.expect(fractional_chromatic_number(cycle(5)) == make_rational(5, 2), "chi_f(C5) = 5/2");
    for (long n : {2L, 3L})
        c.expect(fractional_chromatic_number(cycle(2 * n + 1)) == make_rational(2 * n + 1, n),
                 "chi_f(C_{2n+1}) = 2 + 1/n, n=" + std::to_string(n));
    std::size_t count = 0;
    for (const auto& g : enumerate_graphs(6)) {
        Rational chif = fractional_chromatic_number(g);
        Rational omegaf = fractional_clique_number(g);
        c.expect(chif == omegaf, "omega_f = chi_f for " + detail::g6(g));
        c.expect(Rational(clique_number(g)) <= chif && chif <= Rational(chromatic_number(g)),
                 "omega <= chi_f <= chi for " + detail::g6(g));
        ++count;
    }
    Graph c5 = cycle(5);
    Rational chif = fractional_chromatic_number(c5);
    c.expect(Rational(clique_number(c5)) < chif && chif < Rational(chromatic_number(c5)), "strict on C5");
    c.expect(kneser_colorable(c5, 5, 2), "C5 -> K_{5:2}");
    c.expect(!kneser_colorable(c5, 2, 1), "C5 -/-> K_{2:1}");
    return {9, "fractional-parameters", c.passed(), c.summary(std::to_string(count) + " graphs"), 0};
}

/// Odd cycles map to odd cycles of length at most their own; D x K_2 is
/// bipartite and maps onto D by projection.
inline SuiteReport boolean_facts() {
    detail::Checker c;
    for (std::size_t l = 1; l <= 4; ++l)
        for (std::size_t m = 1; m <= 4; ++m)
            c.expect(hom_exists(cycle(2 * l + 1), cycle(2 * m + 1)) == (m <= l),
                     "C_{2l+1} -> C_{2m+1} iff m <= l, l=" + std::to_string(l) + " m=" + std::to_string(m));
    std::size_t gadgets = 0;
    for (const auto& d : enumerate_graphs(5)) {
        if (d.edge_count() == 0) continue;
        Graph f = tensor_product(d, clique(2));
        c.expect(is_bipartite(f), "D x K2 bipartite D=" + detail::g6(d));
        c.expect(hom_exists(f, d), "D x K2 -> D, D=" + detail::g6(d));
        std::vector<Vertex> projection(f.vertex_count());
        for (Vertex v = 0; v < f.vertex_count(); ++v) projection[v] = v / 2;
        c.expect(is_homomorphism(f, d, projection), "projection certificate D=" + detail::g6(d));
        ++gadgets;
    }
    return {10, "boolean", c.passed(), c.summary(std::to_string(gadgets) + " gadgets"), 0};
}

/// Tree DP and trace fast paths: agreement with backtracking on small
/// instances and wall-clock limits of one second.
inline SuiteReport performance(std::uint64_t seed = 7) {
    detail::Checker c;
    std::mt19937_64 rng(seed);
    using clock = std::chrono::steady_clock;
    for (int trial = 0; trial < 5; ++trial) {
        Graph t = detail::random_tree(7, rng);
        Graph g = detail::random_graph(12, 0.3, rng);
        c.expect(count_hom_tree_dp(t, g) == count_hom(t, g), "tree DP = backtracking, trial " + std::to_string(trial));
        Graph small = detail::random_graph(9, 0.4, rng);
        for (std::size_t k = 1; k <= 7; ++k)
            c.expect(count_hom_cycle(k, small) == count_hom(cycle(k), small), "cycle trace = backtracking k=" + std::to_string(k));
    }
    Graph tree = detail::random_tree(20, rng);
    Graph big = detail::random_graph(200, 0.05, rng);
    auto start = clock::now();
    BigCount trees = count_hom_tree_dp(tree, big);
    double tree_seconds = std::chrono::duration<double>(clock::now() - start).count();
    c.expect(trees > 0 && tree_seconds < 1.0, "tree DP 20 -> 200 under 1 s (" + std::to_string(tree_seconds) + " s)");
    Graph hundred = detail::random_graph(100, 0.1, rng);
    start = clock::now();
    for (std::size_t k = 1; k <= 12; ++k) (void)count_hom_cycle(k, hundred);
    double cycle_seconds = std::chrono::duration<double>(clock::now() - start).count();
    c.expect(cycle_seconds < 1.0, "cycles k=1..12 on 100 vertices under 1 s (" + std::to_string(cycle_seconds) + " s)");
    std::ostringstream extra;
    extra << "tree " << tree_seconds << " s, cycles " << cycle_seconds << " s";
    return {11, "performance", c.passed(), c.summary(extra.str()), 0};
}

struct SuiteEntry {
    std::string name;
    std::function<SuiteReport()> run;
};

inline const std::vector<SuiteEntry>& all_suites() {
    static const std::vector<SuiteEntry> entries{
        {"decomposition", [] { return decomposition(); }},
        {"vector-completeness", [] { return vector_completeness(); }},
        {"fractional-isomorphism", [] { return fractional_isomorphism(); }},
        {"clique-detection", [] { return clique_detection(); }},
        {"cospectrality", [] { return cospectrality(); }},
        {"chromatic", [] { return chromatic(); }},
        {"x1-x2-domination", [] { return x1_x2_domination(); }},
        {"semiring", [] { return semiring_identities(); }},
        {"fractional-parameters", [] { return fractional_parameters(); }},
        {"boolean", [] { return boolean_facts(); }},
        {"performance", [] { return performance(); }},
    };
    return entries;
}

/// Runs one suite and records its wall-clock time.
inline SuiteReport run_timed(const SuiteEntry& entry) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport r = entry.run();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string format_report(const SuiteReport& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s): " << r.detail;
    return out.str();
}

}  // namespace homvec::suites
