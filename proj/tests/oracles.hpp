#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include <homvec/homvec.hpp>

namespace oracle {

using homvec::BigCount;
using homvec::Graph;
using homvec::Rational;
using homvec::Vertex;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

/// Calls visit(map) for every function V(G) -> V(H).
template <class Visit>
void all_maps(std::size_t n, std::size_t m, Visit&& visit) {
    std::vector<Vertex> f(n, 0);
    if (n > 0 && m == 0) return;
    while (true) {
        visit(f);
        std::size_t i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) return;
    }
}

enum class Kind { hom, inj, sur };

inline BigCount count_maps(const Graph& g, const Graph& h, Kind kind) {
    auto ah = adjacency(h);
    BigCount total = 0;
    all_maps(g.vertex_count(), h.vertex_count(), [&](const std::vector<Vertex>& f) {
        for (auto [u, v] : g.edges())
            if (!ah[f[u]][f[v]]) return;
        if (kind == Kind::inj) {
            std::vector<Vertex> s = f;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) return;
        }
        if (kind == Kind::sur) {
            std::vector<int> hit(h.vertex_count(), 0);
            for (auto x : f) hit[x] = 1;
            if (std::count(hit.begin(), hit.end(), 0) != 0) return;
            for (auto [a, b] : h.edges()) {
                bool covered = false;
                for (auto [u, v] : g.edges())
                    if ((f[u] == a && f[v] == b) || (f[u] == b && f[v] == a)) covered = true;
                if (!covered) return;
            }
        }
        ++total;
    });
    return total;
}

inline std::vector<std::vector<Vertex>> all_permutations(std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Vertex>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto ah = adjacency(h);
    for (const auto& p : all_permutations(g.vertex_count())) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!ah[p[u]][p[v]]) ok = false;
        if (ok) return true;
    }
    return false;
}

inline BigCount automorphisms(const Graph& g) {
    auto a = adjacency(g);
    BigCount count = 0;
    for (const auto& p : all_permutations(g.vertex_count())) {
        bool ok = true;
        for (std::size_t u = 0; u < g.vertex_count() && ok; ++u)
            for (std::size_t v = 0; v < g.vertex_count() && ok; ++v)
                if (a[u][v] != a[p[u]][p[v]]) ok = false;
        count += ok;
    }
    return count;
}

/// Proper colourings with colours {0..k-1}.
inline BigCount proper_colorings(const Graph& g, std::size_t k) {
    BigCount count = 0;
    all_maps(g.vertex_count(), k, [&](const std::vector<Vertex>& c) {
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) return;
        ++count;
    });
    return count;
}

inline std::size_t chromatic_number(const Graph& g) {
    std::size_t k = 1;
    while (proper_colorings(g, k) == 0) ++k;
    return k;
}

inline std::size_t clique_number(const Graph& g) {
    auto a = adjacency(g);
    std::size_t n = g.vertex_count(), best = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) vs.push_back(i);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!a[vs[i]][vs[j]]) clique = false;
        if (clique) best = std::max(best, vs.size());
    }
    return best;
}

/// Sum over all maps V(G) -> V(W) of vertex and edge weight products.
inline Rational weighted_hom(const Graph& g, const homvec::WeightedGraph& w) {
    auto m = w.weight_matrix();
    Rational total = 0;
    all_maps(g.vertex_count(), w.vertex_count(), [&](const std::vector<Vertex>& f) {
        Rational value = 1;
        for (auto x : f) value *= w.vertex_weights()[x];
        for (auto [u, v] : g.edges()) {
            if (!m[f[u]][f[v]]) return;
            value *= *m[f[u]][f[v]];
        }
        total += value;
    });
    return total;
}

/// tr(A^k) by repeated integer matrix multiplication.
inline BigCount trace_power(const Graph& g, std::size_t k) {
    std::size_t n = g.vertex_count();
    auto a = adjacency(g);
    std::vector<std::vector<BigCount>> p(n, std::vector<BigCount>(n, 0));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    for (std::size_t step = 0; step < k; ++step) {
        std::vector<std::vector<BigCount>> q(n, std::vector<BigCount>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (p[i][l] != 0)
                    for (std::size_t j = 0; j < n; ++j)
                        if (a[l][j]) q[i][j] += p[i][l];
        p = std::move(q);
    }
    BigCount t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i][i];
    return t;
}

/// det(xI - A) by the Leibniz expansion, one polynomial product per permutation.
inline homvec::Polynomial leibniz_charpoly(const Graph& g) {
    using homvec::Polynomial;
    auto a = adjacency(g);
    std::size_t n = g.vertex_count();
    Polynomial total;
    for (const auto& p : all_permutations(n)) {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Polynomial term = Polynomial::constant(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            Polynomial entry = Polynomial::constant(-a[i][p[i]]);
            if (p[i] == i) entry = entry + Polynomial::x();
            term = term * entry;
        }
        total = total + term;
    }
    return total;
}

/// Solves the square system M y = r exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> r) {
    std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(r[pivot], r[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            r[row] -= f * r[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) r[i] /= m[i][i];
    return r;
}

/// Optimum of a bounded LP with zero lower bounds by enumerating every basic
/// point: choose n tight constraints among rows and nonnegativity bounds.
inline std::optional<Rational> vertex_enumeration_optimum(const homvec::LpProgram& p) {
    using homvec::Relation;
    std::size_t n = p.variable_count();
    std::vector<std::vector<Rational>> planes;
    std::vector<Rational> rhs;
    for (const auto& row : p.rows) {
        planes.push_back(row.coefficients);
        rhs.push_back(row.rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, 0);
        e[j] = 1;
        planes.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    std::vector<bool> chosen(planes.size(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(n), true);
    do {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> r;
        for (std::size_t i = 0; i < planes.size(); ++i)
            if (chosen[i]) {
                m.push_back(planes[i]);
                r.push_back(rhs[i]);
            }
        auto x = solve_square(m, r);
        if (!x || !homvec::lp_feasible_point(p, *x)) continue;
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) value += p.objective[j] * (*x)[j];
        bool better = !best || (p.sense == homvec::Sense::maximize ? value > *best : value < *best);
        if (better) best = value;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return best;
}

/// Colour refinement on the disjoint union, compared class by class.
inline bool color_refinement_equivalent(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    Graph u = homvec::disjoint_union(g, h);
    std::size_t n = u.vertex_count();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t round = 0; round <= n; ++round) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> nb;
            for (auto w : u.neighbors(static_cast<Vertex>(v))) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            auto key = std::make_pair(color[v], nb);
            auto it = ids.emplace(key, ids.size()).first;
            next[v] = it->second;
        }
        color = next;
    }
    std::map<std::size_t, long> balance;
    for (std::size_t v = 0; v < n; ++v) balance[color[v]] += v < g.vertex_count() ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace oracle
