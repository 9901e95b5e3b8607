#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "guards.hpp"
#include "homcount.hpp"
#include "polynomial.hpp"
#include "structure.hpp"

namespace homvec {

namespace detail {

inline bool is_complete(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

/// Addition-contraction: chi(G) = chi(G + uv) + chi(G / uv) for a
/// non-adjacent pair, bottoming out at cliques; multiplicative over
/// components; memoised on canonical codes.
inline Polynomial chromatic_rec(const Graph& g, std::map<CanonicalCode, Polynomial>& memo) {
    auto comps = component_vertices(g);
    if (comps.size() > 1) {
        Polynomial p = Polynomial::constant(1);
        for (const auto& c : comps) p = p * chromatic_rec(induced_subgraph(g, c), memo);
        return p;
    }
    if (is_complete(g)) return falling_factorial(static_cast<unsigned>(g.vertex_count()));
    auto code = canonical_form(g);
    if (auto it = memo.find(code); it != memo.end()) return it->second;

    // u: highest degree among vertices with a non-neighbour; v: the
    // non-neighbour of u sharing most neighbours with it.
    const std::size_t n = g.vertex_count();
    Vertex u = 0;
    std::size_t best_deg = 0;
    bool found = false;
    for (Vertex x = 0; x < n; ++x)
        if (g.degree(x) + 1 < n && (!found || g.degree(x) > best_deg)) {
            u = x;
            best_deg = g.degree(x);
            found = true;
        }
    Vertex v = 0;
    std::size_t best_common = 0;
    found = false;
    for (Vertex y = 0; y < n; ++y) {
        if (y == u || g.adjacent(u, y)) continue;
        std::size_t common = (g.neighbor_set(u) & g.neighbor_set(y)).count();
        if (!found || common > best_common) {
            v = y;
            best_common = common;
            found = true;
        }
    }
    Polynomial p = chromatic_rec(add_edge(g, u, v), memo) + chromatic_rec(contract(g, u, v), memo);
    memo.emplace(code, p);
    return p;
}

}  // namespace detail

/// chi(G, x); monic of degree |V(G)|.
inline Polynomial chromatic_polynomial(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("chromatic polynomial of the empty graph");
    enforce_guard(Guard::chromatic_vertices, g.vertex_count());
    std::map<CanonicalCode, Polynomial> memo;
    return detail::chromatic_rec(g, memo);
}

/// chi(G, x) rebuilt by interpolating hom(G, K_k) for k = 0..|V(G)|.
inline Polynomial chromatic_polynomial_by_interpolation(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("chromatic polynomial of the empty graph");
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<Rational, Rational>> points;
    points.emplace_back(0, 0);
    for (std::size_t k = 1; k <= n; ++k) points.emplace_back(Rational(k), Rational(count_hom(g, clique(k))));
    return poly_interpolate(points, static_cast<unsigned>(n));
}

/// det(xI - A_G) from the power sums trace(A^k) via Newton's identities.
inline Polynomial characteristic_polynomial(const Graph& g) {
    const std::size_t n = g.vertex_count();
    enforce_guard(Guard::charpoly_vertices, n);
    auto traces = adjacency_traces(g, n);
    // e_k: elementary symmetric functions of the eigenvalues
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            Rational term = e[k - i] * Rational(traces[i - 1]);
            s += (i % 2 == 1) ? term : Rational(-term);
        }
        e[k] = s / Rational(k);
        if (!is_integer(e[k])) throw InvariantError("non-integral characteristic polynomial coefficient");
    }
    Polynomial p(1);
    for (std::size_t k = 0; k <= n; ++k)
        p.add_term({static_cast<unsigned>(n - k), 0}, k % 2 == 0 ? e[k] : Rational(-e[k]));
    return p;
}

/// Sum over edge subsets A of x^{c(A)} y^{|A|}, c(A) the number of
/// components of (V(G), A).
inline Polynomial cluster_expansion_polynomial(const Graph& g) {
    const std::size_t m = g.edge_count(), n = g.vertex_count();
    enforce_guard(Guard::cep_edges, m);
    if (m > 40) throw GuardError("cep-edges", m, 40);
    std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(m + 1, 0));
    std::vector<Vertex> parent(n);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::iota(parent.begin(), parent.end(), Vertex{0});
        std::size_t comps = n, size = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            ++size;
            Vertex a = find(g.edges()[i].first), b = find(g.edges()[i].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        ++counts[comps][size];
    }
    Polynomial p(2);
    for (unsigned c = 0; c <= n; ++c)
        for (unsigned s = 0; s <= m; ++s)
            if (counts[c][s]) p.add_term({c, s}, Rational(BigCount(counts[c][s])));
    return p;
}

/// Sum over independent sets U of x^{|U|} y^{|V \ U|}.
inline Polynomial independence_polynomial(const Graph& g) {
    const auto n = static_cast<unsigned>(g.vertex_count());
    Polynomial p(2);
    for (std::uint64_t u : independent_sets(g)) {
        auto k = static_cast<unsigned>(std::popcount(u));
        p.add_term({k, n - k}, 1);
    }
    return p;
}

}  // namespace homvec
