#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "graph_polynomials.hpp"
#include "guards.hpp"
#include "homcount.hpp"
#include "io.hpp"
#include "lp.hpp"
#include "structure.hpp"

namespace homvec {

/// Stable k-WL colouring. For k = 1 `colors` is indexed by vertex; for k >= 2
/// by tuple index sum_i t_i * n^(k-1-i). Colour ids come from sorted
/// refinement signatures, so `histogram` is invariant under relabelling.
struct ColorPartition {
    unsigned k = 1;
    std::size_t vertex_count = 0;
    std::vector<std::uint32_t> colors;
    std::vector<std::pair<std::uint32_t, std::size_t>> histogram;
    std::size_t rounds = 0;

    std::size_t class_count() const { return histogram.size(); }
};

namespace detail {

using Signature = std::vector<std::uint32_t>;

/// Initial colouring: 1-WL is monochromatic; k >= 2 uses the ordered atomic
/// type of each tuple (equalities and adjacencies between coordinates).
inline Signature initial_signature(const Graph& g, unsigned k, std::size_t index) {
    if (k == 1) return {};
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> t(k);
    for (unsigned i = k; i-- > 0;) {
        t[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
    Signature s;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) s.push_back(t[i] == t[j] ? 2u : (g.adjacent(t[i], t[j]) ? 1u : 0u));
    return s;
}

/// Refinement signature of one vertex/tuple given the current colours.
/// k = 1: own colour then sorted neighbour colours. k >= 2: own colour then
/// the sorted multiset over w of (c(t[1<-w]), ..., c(t[k<-w])).
inline Signature refine_signature(const Graph& g, unsigned k, const std::vector<std::uint32_t>& c, std::size_t index) {
    const std::size_t n = g.vertex_count();
    Signature s{c[index]};
    if (k == 1) {
        Signature nb;
        for (Vertex w : g.neighbors(static_cast<Vertex>(index))) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        return s;
    }
    std::vector<std::size_t> place(k, 1);
    for (unsigned i = k - 1; i-- > 0;) place[i] = place[i + 1] * n;
    std::vector<std::size_t> digit(k);
    for (unsigned i = 0; i < k; ++i) digit[i] = (index / place[i]) % n;
    std::vector<Signature> rows;
    rows.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        Signature row(k);
        for (unsigned i = 0; i < k; ++i) row[i] = c[index - digit[i] * place[i] + w * place[i]];
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows) s.insert(s.end(), row.begin(), row.end());
    return s;
}

inline void check_wl_guards(const Graph& g, unsigned k) {
    if (k == 0) throw ValidationError("WL dimension must be at least 1");
    enforce_guard(Guard::wl_dimension, k);
    if (k >= 2) enforce_guard(Guard::wl_vertices, g.vertex_count());
}

/// Refines all graphs simultaneously with one shared colour palette (the
/// refinement of the disjoint union of their tuple spaces).
inline std::vector<ColorPartition> wl_refine_jointly(const std::vector<const Graph*>& graphs, unsigned k) {
    for (const Graph* g : graphs) check_wl_guards(*g, k);
    std::vector<std::size_t> sizes;
    for (const Graph* g : graphs) {
        std::size_t s = 1;
        for (unsigned i = 0; i < k; ++i) s *= g->vertex_count();
        if (g->vertex_count() == 0) s = 0;
        sizes.push_back(s);
    }
    auto assign = [&](auto&& sig_of, std::vector<std::vector<std::uint32_t>>& out) {
        std::map<Signature, std::uint32_t> ids;
        std::vector<std::vector<Signature>> sigs(graphs.size());
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (std::size_t t = 0; t < sizes[gi]; ++t) {
                sigs[gi].push_back(sig_of(gi, t));
                ids.emplace(sigs[gi].back(), 0);
            }
        std::uint32_t next = 0;
        for (auto& [sig, id] : ids) id = next++;
        out.assign(graphs.size(), {});
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (const auto& sig : sigs[gi]) out[gi].push_back(ids.at(sig));
        return ids.size();
    };
    std::vector<std::vector<std::uint32_t>> colors;
    std::size_t classes =
        assign([&](std::size_t gi, std::size_t t) { return initial_signature(*graphs[gi], k, t); }, colors);
    std::size_t rounds = 0;
    while (true) {
        std::vector<std::vector<std::uint32_t>> next;
        std::size_t refined = assign(
            [&](std::size_t gi, std::size_t t) { return refine_signature(*graphs[gi], k, colors[gi], t); }, next);
        ++rounds;
        colors = std::move(next);
        if (refined == classes) break;
        classes = refined;
    }
    std::vector<ColorPartition> out;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        ColorPartition p{k, graphs[gi]->vertex_count(), colors[gi], {}, rounds};
        std::map<std::uint32_t, std::size_t> hist;
        for (auto c : colors[gi]) ++hist[c];
        p.histogram.assign(hist.begin(), hist.end());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

/// Stable colouring of G under k-WL (k = 1: colour refinement; k = 2, 3:
/// tuple refinement from atomic types).
inline ColorPartition wl_refine(const Graph& g, unsigned k) {
    return detail::wl_refine_jointly({&g}, k).front();
}

/// Whether k-WL fails to distinguish G and H: equal stable colour
/// histograms in a shared palette.
inline bool wl_equivalent(const Graph& g, const Graph& h, unsigned k) {
    if (g.vertex_count() != h.vertex_count()) {
        detail::check_wl_guards(g, k);
        detail::check_wl_guards(h, k);
        return false;
    }
    auto parts = detail::wl_refine_jointly({&g, &h}, k);
    return parts[0].histogram == parts[1].histogram;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline bool is_fractional_isomorphism(const Graph& g, const Graph& h, const RationalMatrix& x);

/// Feasibility of A X = X B, X e = e, e^T X = e^T, X >= 0 (A = A_G, B = A_H)
/// by exact simplex. Returns the verified doubly stochastic X when feasible.
inline std::optional<RationalMatrix> fractional_isomorphism_lp(const Graph& g, const Graph& h) {
    const std::size_t n = g.vertex_count();
    if (h.vertex_count() != n) return std::nullopt;
    auto var = [n](std::size_t u, std::size_t v) { return u * n + v; };
    LpProgram p;
    p.sense = Sense::feasibility;
    p.objective.assign(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LpRow row{std::vector<Rational>(n * n, Rational(0)), Relation::eq, 0};
            for (Vertex l : g.neighbors(static_cast<Vertex>(i))) row.coefficients[var(l, j)] += 1;
            for (Vertex l : h.neighbors(static_cast<Vertex>(j))) row.coefficients[var(i, l)] -= 1;
            if (std::any_of(row.coefficients.begin(), row.coefficients.end(), [](const Rational& r) { return r != 0; }))
                p.rows.push_back(std::move(row));
        }
    for (std::size_t i = 0; i < n; ++i) {
        LpRow rs{std::vector<Rational>(n * n, Rational(0)), Relation::eq, 1};
        LpRow cs{std::vector<Rational>(n * n, Rational(0)), Relation::eq, 1};
        for (std::size_t j = 0; j < n; ++j) {
            rs.coefficients[var(i, j)] = 1;
            cs.coefficients[var(j, i)] = 1;
        }
        p.rows.push_back(std::move(rs));
        p.rows.push_back(std::move(cs));
    }
    auto sol = solve_lp(p);
    if (sol.status != LpStatus::optimal) return std::nullopt;
    RationalMatrix x(n, std::vector<Rational>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) x[u][v] = sol.values[var(u, v)];
    if (!is_fractional_isomorphism(g, h, x)) throw InvariantError("LP returned a matrix that is not a fractional isomorphism");
    return x;
}

/// Exact check that X >= 0 is doubly stochastic with A_G X = X A_H.
inline bool is_fractional_isomorphism(const Graph& g, const Graph& h, const RationalMatrix& x) {
    const std::size_t n = g.vertex_count();
    if (h.vertex_count() != n || x.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].size() != n) return false;
        Rational row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[i][j] < 0) return false;
            row += x[i][j];
            col += x[j][i];
        }
        if (row != 1 || col != 1) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational ax = 0, xb = 0;
            for (Vertex l : g.neighbors(static_cast<Vertex>(i))) ax += x[l][j];
            for (Vertex l : h.neighbors(static_cast<Vertex>(j))) xb += x[i][l];
            if (ax != xb) return false;
        }
    return true;
}

inline bool cospectral(const Graph& g, const Graph& h) {
    return characteristic_polynomial(g) == characteristic_polynomial(h);
}

inline bool chromatically_equivalent(const Graph& g, const Graph& h) {
    return chromatic_polynomial(g) == chromatic_polynomial(h);
}

/// Homomorphisms exist in both directions.
inline bool hom_equivalent(const Graph& g, const Graph& h) {
    return hom_exists(g, h) && hom_exists(h, g);
}

/// Least k with a homomorphism G -> K_k.
inline std::size_t chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("chromatic number of the empty graph");
    for (std::size_t k = 1;; ++k)
        if (hom_exists(g, clique(k))) return k;
}

inline std::size_t clique_number(const Graph& g) {
    std::size_t k = 0;
    while (k < g.vertex_count() && contains_clique_subgraph(g, k + 1)) ++k;
    return k;
}

/// min sum x_U  s.t.  sum_{U containing v} x_U >= 1 for every v, x >= 0,
/// over all independent sets U (the empty set included).
inline LpProgram fractional_chromatic_lp(const Graph& g) {
    const auto sets = independent_sets(g);
    LpProgram p;
    p.sense = Sense::minimize;
    p.objective.assign(sets.size(), Rational(1));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        LpRow row{std::vector<Rational>(sets.size(), Rational(0)), Relation::ge, 1};
        for (std::size_t s = 0; s < sets.size(); ++s)
            if (sets[s] >> v & 1) row.coefficients[s] = 1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

/// max sum y_v  s.t.  sum_{v in U} y_v <= 1 for every independent set U, y >= 0.
inline LpProgram fractional_clique_lp(const Graph& g) {
    const auto sets = independent_sets(g);
    const std::size_t n = g.vertex_count();
    LpProgram p;
    p.sense = Sense::maximize;
    p.objective.assign(n, Rational(1));
    for (std::uint64_t u : sets) {
        LpRow row{std::vector<Rational>(n, Rational(0)), Relation::le, 1};
        for (Vertex v = 0; v < n; ++v)
            if (u >> v & 1) row.coefficients[v] = 1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

inline Rational fractional_chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("fractional chromatic number of the empty graph");
    auto sol = solve_lp(fractional_chromatic_lp(g));
    if (sol.status != LpStatus::optimal) throw InvariantError("covering LP has no optimum");
    return sol.objective;
}

inline Rational fractional_clique_number(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("fractional clique number of the empty graph");
    auto sol = solve_lp(fractional_clique_lp(g));
    if (sol.status != LpStatus::optimal) throw InvariantError("packing LP has no optimum");
    return sol.objective;
}

/// Whether G maps to the Kneser graph K_{a:b}.
inline bool kneser_colorable(const Graph& g, std::size_t a, std::size_t b) {
    if (b == 0 || a < 2 * b) throw ValidationError("kneser_colorable needs b >= 1 and a >= 2b");
    BigCount vertices = 1;
    for (std::size_t i = 0; i < b; ++i) vertices = vertices * (a - i) / (i + 1);
    if (vertices > guard_limit(Guard::kneser_vertices))
        throw GuardError("kneser-vertices", static_cast<std::size_t>(std::min<BigCount>(vertices, BigCount(SIZE_MAX))),
                         guard_limit(Guard::kneser_vertices));
    return hom_exists(g, gen_kneser(a, b));
}

}  // namespace homvec
