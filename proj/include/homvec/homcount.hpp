#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "arith.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "guards.hpp"
#include "semiring.hpp"
#include "structure.hpp"

namespace homvec {

/// A total map V(G) -> V(H) as an index array.
using HomAssignment = std::vector<Vertex>;

namespace detail {

/// Vertex visiting order for backtracking plus, for each position, the
/// earlier positions adjacent to it.
struct SearchPlan {
    std::vector<Vertex> order;
    std::vector<std::vector<std::size_t>> back;
};

/// BFS from a maximum-degree vertex, one component after another (components
/// in order of their smallest vertex).
inline SearchPlan make_plan(const Graph& g, std::span<const Vertex> component) {
    SearchPlan plan;
    std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
    std::vector<int> in_scope(g.vertex_count(), 0);
    for (Vertex v : component) in_scope[v] = 1;
    std::vector<Vertex> pending(component.begin(), component.end());
    std::sort(pending.begin(), pending.end());
    for (Vertex seed : pending) {
        if (pos[seed] != SIZE_MAX) continue;
        // component of seed restricted to scope
        std::vector<Vertex> comp{seed};
        std::vector<int> seen(g.vertex_count(), 0);
        seen[seed] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (in_scope[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        Vertex start = *std::max_element(comp.begin(), comp.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a > b;
        });
        std::queue<Vertex> q;
        q.push(start);
        pos[start] = plan.order.size();
        plan.order.push_back(start);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (!in_scope[w] || pos[w] != SIZE_MAX) continue;
                pos[w] = plan.order.size();
                plan.order.push_back(w);
                q.push(w);
            }
        }
    }
    plan.back.resize(plan.order.size());
    for (std::size_t i = 0; i < plan.order.size(); ++i)
        for (Vertex w : g.neighbors(plan.order[i]))
            if (in_scope[w] && pos[w] < i) plan.back[i].push_back(pos[w]);
    return plan;
}

inline SearchPlan make_plan(const Graph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return make_plan(g, all);
}

/// Backtracking over homomorphisms G -> H following `plan`. `visit` is
/// called with the image array (indexed by plan position) at every leaf and
/// returns false to stop the search. With `injective` set, images are
/// pairwise distinct.
template <class Visit>
bool backtrack_homs(const Graph& h, const SearchPlan& plan, bool injective, Visit&& visit) {
    const std::size_t depth = plan.order.size();
    const std::size_t m = h.vertex_count();
    std::vector<Vertex> image(depth);
    if (depth == 0) return visit(image);
    VertexSet used(m);
    VertexSet all(m);
    all.set();
    auto rec = [&](auto&& self, std::size_t level) -> bool {
        VertexSet cand = all;
        for (std::size_t b : plan.back[level]) cand &= h.neighbor_set(image[b]);
        if (injective) cand -= used;
        for (auto x = cand.find_first(); x != VertexSet::npos; x = cand.find_next(x)) {
            image[level] = static_cast<Vertex>(x);
            if (level + 1 == depth) {
                if (!visit(image)) return false;
                continue;
            }
            if (injective) used.set(x);
            bool go_on = self(self, level + 1);
            if (injective) used.reset(x);
            if (!go_on) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

/// Number of homomorphisms of the part of G covered by `plan` (leaf level
/// counted by popcount).
inline BigCount count_plan(const Graph& h, const SearchPlan& plan) {
    const std::size_t depth = plan.order.size();
    if (depth == 0) return 1;
    const std::size_t m = h.vertex_count();
    std::vector<Vertex> image(depth);
    std::vector<VertexSet> cand(depth, VertexSet(m));
    std::uint64_t small = 0;
    BigCount total = 0;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        VertexSet& c = cand[level];
        c.set();
        for (std::size_t b : plan.back[level]) c &= h.neighbor_set(image[b]);
        if (level + 1 == depth) {
            small += c.count();
            if (small > (std::uint64_t{1} << 62)) {
                total += small;
                small = 0;
            }
            return;
        }
        for (auto x = c.find_first(); x != VertexSet::npos; x = c.find_next(x)) {
            image[level] = static_cast<Vertex>(x);
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return total + small;
}

}  // namespace detail

/// hom(G, H). hom(empty, H) = 1.
inline BigCount count_hom(const Graph& g, const Graph& h) {
    BigCount result = 1;
    for (const auto& comp : component_vertices(g)) {
        BigCount c = detail::count_plan(h, detail::make_plan(g, comp));
        if (c == 0) return 0;
        result *= c;
    }
    return result;
}

/// Whether some homomorphism G -> H exists; stops at the first one.
inline bool hom_exists(const Graph& g, const Graph& h) {
    for (const auto& comp : component_vertices(g)) {
        bool found = false;
        detail::backtrack_homs(h, detail::make_plan(g, comp), false, [&](const std::vector<Vertex>&) {
            found = true;
            return false;
        });
        if (!found) return false;
    }
    return true;
}

/// Whether `map` (indexed by vertex of G) sends every edge of G to an edge of H.
inline bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map) {
    if (map.size() != g.vertex_count()) return false;
    for (Vertex x : map)
        if (x >= h.vertex_count()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return h.adjacent(map[e.first], map[e.second]); });
}

/// Injective homomorphisms G -> H.
inline BigCount count_inj(const Graph& g, const Graph& h) {
    if (g.vertex_count() > h.vertex_count()) return 0;
    std::uint64_t count = 0;
    detail::backtrack_homs(h, detail::make_plan(g), true, [&](const std::vector<Vertex>&) {
        ++count;
        return true;
    });
    return count;
}

/// Homomorphisms G -> H whose image graph is H: every vertex and every edge
/// of H is hit.
inline BigCount count_sur(const Graph& g, const Graph& h) {
    const std::size_t n = g.vertex_count(), m = h.vertex_count();
    if (n == 0) return m == 0 ? 1 : 0;
    if (m > n || h.edge_count() > g.edge_count()) return 0;
    const auto plan = detail::make_plan(g);
    std::vector<std::size_t> edge_id(m * m, SIZE_MAX);
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
        auto [u, v] = h.edges()[i];
        edge_id[u * m + v] = edge_id[v * m + u] = i;
    }
    std::vector<std::size_t> vhits(m, 0), ehits(h.edge_count(), 0);
    std::size_t vdistinct = 0, edistinct = 0;
    std::vector<Vertex> image(n);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == n) {
            if (vdistinct == m && edistinct == h.edge_count()) ++count;
            return;
        }
        if (m - vdistinct > n - level) return;
        VertexSet cand(m);
        cand.set();
        for (std::size_t b : plan.back[level]) cand &= h.neighbor_set(image[b]);
        for (auto x = cand.find_first(); x != VertexSet::npos; x = cand.find_next(x)) {
            image[level] = static_cast<Vertex>(x);
            if (vhits[x]++ == 0) ++vdistinct;
            for (std::size_t b : plan.back[level])
                if (ehits[edge_id[image[b] * m + x]]++ == 0) ++edistinct;
            self(self, level + 1);
            for (std::size_t b : plan.back[level])
                if (--ehits[edge_id[image[b] * m + x]] == 0) --edistinct;
            if (--vhits[x] == 0) --vdistinct;
        }
    };
    rec(rec, 0);
    return count;
}

/// Automorphisms: bijections V(G) -> V(G) preserving edges and non-edges.
inline BigCount count_aut(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 1;
    const auto plan = detail::make_plan(g);
    std::vector<Vertex> image(n);
    VertexSet used(n);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == n) {
            ++count;
            return;
        }
        const Vertex v = plan.order[level];
        for (Vertex x = 0; x < n; ++x) {
            if (used.test(x) || g.degree(x) != g.degree(v)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < level && ok; ++j)
                ok = g.adjacent(plan.order[j], v) == g.adjacent(image[j], x);
            if (!ok) continue;
            image[level] = x;
            used.set(x);
            self(self, level + 1);
            used.reset(x);
        }
    };
    rec(rec, 0);
    return count;
}

/// Semiring-weighted homomorphism count into the looped shape of `w`: sum
/// over homomorphisms h of prod_u w(h(u)) * prod_{uv in E(G)} w(h(u)h(v)).
/// Edges of G may land on loops. The empty graph gives one().
template <Semiring S>
typename S::value_type count_hom_weighted(const Graph& g, const WeightedGraph& w, const S& s) {
    using T = typename S::value_type;
    const std::size_t m = w.vertex_count();
    std::vector<T> vweight;
    for (const auto& r : w.vertex_weights()) vweight.push_back(s.embed(r));
    const auto rational_matrix = w.weight_matrix();
    std::vector<std::vector<std::optional<T>>> eweight(m, std::vector<std::optional<T>>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (rational_matrix[a][b]) eweight[a][b] = s.embed(*rational_matrix[a][b]);

    T result = s.one();
    for (const auto& comp : component_vertices(g)) {
        const auto plan = detail::make_plan(g, comp);
        const std::size_t depth = plan.order.size();
        std::vector<Vertex> image(depth);
        T total = s.zero();
        auto rec = [&](auto&& self, std::size_t level, const T& partial) -> void {
            if (level == depth) {
                total = s.add(total, partial);
                return;
            }
            for (Vertex x = 0; x < m; ++x) {
                T value = s.mul(partial, vweight[x]);
                bool ok = true;
                for (std::size_t b : plan.back[level]) {
                    const auto& ew = eweight[image[b]][x];
                    if (!ew) {
                        ok = false;
                        break;
                    }
                    value = s.mul(value, *ew);
                }
                if (!ok) continue;
                image[level] = x;
                self(self, level + 1, value);
            }
        };
        rec(rec, 0, s.one());
        result = s.mul(result, total);
    }
    return result;
}

/// hom(T, G) for a tree T by rooted dynamic programming:
/// f_t(v) = prod over children c of sum_{u in N(v)} f_c(u).
inline BigCount count_hom_tree_dp(const Graph& t, const Graph& g) {
    if (!is_tree(t)) throw ValidationError("count_hom_tree_dp needs a tree on the left");
    const std::size_t n = t.vertex_count(), m = g.vertex_count();
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(n, 0);
    std::vector<int> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : t.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[i];
                order.push_back(w);
            }
    std::vector<std::vector<BigCount>> f(n, std::vector<BigCount>(m, BigCount(1)));
    for (std::size_t i = n; i-- > 1;) {
        Vertex c = order[i];
        auto& fp = f[parent[c]];
        for (Vertex v = 0; v < m; ++v) {
            BigCount s = 0;
            for (Vertex u : g.neighbors(v)) s += f[c][u];
            fp[v] *= s;
        }
        f[c].clear();
        f[c].shrink_to_fit();
    }
    BigCount total = 0;
    for (const auto& x : f[0]) total += x;
    return total;
}

namespace detail {

/// trace(A^k) for k = 1..kmax via walk-count matrices, in integer type T.
template <class T>
std::vector<BigCount> traces_as(const Graph& g, std::size_t kmax) {
    const std::size_t n = g.vertex_count();
    std::vector<BigCount> out;
    if (kmax == 0) return out;
    std::vector<T> walk(n * n, T(0)), next(n * n, T(0));
    for (auto [u, v] : g.edges()) walk[u * n + v] = walk[v * n + u] = T(1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        T tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += walk[i * n + i];
        if constexpr (std::is_same_v<T, BigCount>) {
            out.push_back(tr);
        } else {
            // unsigned __int128 -> BigCount via two 64-bit halves
            BigCount hi = static_cast<std::uint64_t>(tr >> 64), lo = static_cast<std::uint64_t>(tr);
            out.push_back((hi << 64) + lo);
        }
        if (k == kmax) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                T s = 0;
                for (Vertex l : g.neighbors(static_cast<Vertex>(j))) s += walk[i * n + l];
                next[i * n + j] = s;
            }
        std::swap(walk, next);
    }
    return out;
}

}  // namespace detail

/// trace(A_G^k) for k = 1..kmax (closed walks of length k).
inline std::vector<BigCount> adjacency_traces(const Graph& g, std::size_t kmax) {
    std::size_t maxdeg = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    // entries of A^k are at most maxdeg^(k-1); traces at most n * maxdeg^(k-1)
    double bits = static_cast<double>(kmax) * std::log2(static_cast<double>(maxdeg) + 1.0) +
                  std::log2(static_cast<double>(g.vertex_count()) + 1.0);
    if (bits < 120.0) return detail::traces_as<unsigned __int128>(g, kmax);
    return detail::traces_as<BigCount>(g, kmax);
}

/// hom(C_k, G), degenerate cycles included: C_1 = I_1, C_2 = K_2.
inline BigCount count_hom_cycle(std::size_t k, const Graph& g) {
    if (k == 0) throw ValidationError("cycle length must be at least 1");
    if (k == 1) return g.vertex_count();
    if (k == 2) return 2 * g.edge_count();
    return adjacency_traces(g, k).back();
}

/// One nonzero term sur(D,E) * inj(E,G) / aut(E) of the decomposition sum.
struct DecompositionTerm {
    Graph type;
    BigCount sur;
    BigCount inj;
    BigCount aut;
    BigCount value;
};

struct DecompositionResult {
    BigCount lhs;
    BigCount rhs;
    std::vector<DecompositionTerm> terms;
};

/// lhs = hom(D, G); rhs = sum over isomorphism types E on at most |V(D)|
/// vertices of sur(D, E) * inj(E, G) / aut(E).
inline DecompositionResult decomposition_check(const Graph& d, const Graph& g) {
    enforce_guard(Guard::decomposition_vertices, d.vertex_count());
    enforce_guard(Guard::decomposition_vertices, g.vertex_count());
    if (d.vertex_count() == 0) throw ValidationError("decomposition needs a nonempty D");
    DecompositionResult r{count_hom(d, g), 0, {}};
    for (const auto& e : enumerate_graphs(d.vertex_count())) {
        BigCount sur = count_sur(d, e);
        if (sur == 0) continue;
        BigCount inj = count_inj(e, g);
        if (inj == 0) continue;
        BigCount aut = count_aut(e);
        if (inj % aut != 0) throw InvariantError("inj(E, G) not divisible by aut(E) for E = " + write_graph6(e));
        BigCount value = sur * (inj / aut);
        r.rhs += value;
        r.terms.push_back({e, sur, inj, aut, value});
    }
    return r;
}

}  // namespace homvec
