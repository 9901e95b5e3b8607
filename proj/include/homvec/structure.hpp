#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"
#include "guards.hpp"

namespace homvec {

/// Connected components as vertex lists, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> component_vertices(const Graph& g) {
    std::vector<int> seen(g.vertex_count(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& c : component_vertices(g)) out.push_back(induced_subgraph(g, c));
    return out;
}

/// The empty graph is not connected.
inline bool is_connected(const Graph& g) {
    return g.vertex_count() > 0 && component_vertices(g).size() == 1;
}

inline bool is_forest(const Graph& g) {
    return g.edge_count() + component_vertices(g).size() == g.vertex_count();
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

/// Two-colouring if one exists (colour 0 on the smallest vertex of each component).
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Length of a shortest cycle; nullopt for forests (infinite girth).
inline std::optional<std::size_t> girth(const Graph& g) {
    std::optional<std::size_t> best;
    const std::size_t n = g.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, SIZE_MAX);
        std::vector<Vertex> parent(n, s);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    std::size_t len = dist[u] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

namespace detail {

inline bool extend_clique(const Graph& g, const VertexSet& candidates, std::size_t needed) {
    if (needed == 0) return true;
    if (candidates.count() < needed) return false;
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
        VertexSet next = candidates & g.neighbor_set(static_cast<Vertex>(v));
        // only look forward to avoid revisiting the same clique
        for (auto w = next.find_first(); w != VertexSet::npos && w <= v; w = next.find_next(w)) next.reset(w);
        if (extend_clique(g, next, needed - 1)) return true;
    }
    return false;
}

}  // namespace detail

/// Whether K_k is a subgraph of g.
inline bool contains_clique_subgraph(const Graph& g, std::size_t k) {
    if (k == 0) return true;
    VertexSet all(g.vertex_count());
    all.set();
    return detail::extend_clique(g, all, k);
}

/// Exact treewidth by dynamic programming over elimination prefixes
/// (subset memoisation). Returns -1 for the empty graph.
inline int treewidth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    enforce_guard(Guard::treewidth_vertices, n);
    if (n == 0) return -1;
    if (n > 30) throw GuardError("treewidth-vertices", n, 30);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    // q(S, v): vertices outside S + v reachable from v through S.
    auto q = [&](std::uint32_t s, Vertex v) {
        std::uint32_t reached = 1u << v, frontier = 1u << v, outside = 0;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) {
                auto u = static_cast<Vertex>(std::countr_zero(f));
                std::uint32_t nb = adj[u] & ~reached;
                outside |= nb & ~s;
                next |= nb & s;
                reached |= nb & s;
            }
            frontier = next;
        }
        outside &= ~(1u << v);
        return std::popcount(outside);
    };
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    std::vector<int> tw(std::size_t{full} + 1, 0);
    tw[0] = -1;
    for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
        int best = INT32_MAX;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(rest));
            std::uint32_t prev = s & ~(1u << v);
            best = std::min(best, std::max(tw[prev], q(prev, v)));
        }
        tw[s] = best;
        if (s == full) break;
    }
    return tw[full];
}

/// All independent sets (including the empty set) as vertex bitmasks,
/// ordered by size then numeric value. Guarded by Guard::independent_sets.
inline std::vector<std::uint64_t> independent_sets(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 64) throw GuardError("independent-sets-vertices", n, 64);
    const std::size_t limit = guard_limit(Guard::independent_sets);
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    std::vector<std::uint64_t> out;
    // allowed: vertices above the last chosen one with no chosen neighbour
    auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t allowed) -> void {
        out.push_back(chosen);
        if (out.size() > limit) throw GuardError("independent-sets", out.size(), limit);
        for (std::uint64_t a = allowed; a; a &= a - 1) {
            int v = std::countr_zero(a);
            std::uint64_t above = (v == 63) ? 0 : (~std::uint64_t{0} << (v + 1));
            self(self, chosen | (std::uint64_t{1} << v), allowed & above & ~adj[v]);
        }
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    rec(rec, 0, all);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

}  // namespace homvec
