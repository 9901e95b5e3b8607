#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace homvec {

enum class StandardKind { clique, cycle, path, independent };

/// K_n, C_n, P_n or I_n. Cycles on one and two vertices are the degenerate
/// cycles I_1 and K_2.
inline Graph gen_standard(StandardKind kind, std::size_t n) {
    if (n == 0) throw ValidationError("generators need at least one vertex");
    std::vector<Edge> edges;
    switch (kind) {
    case StandardKind::clique:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        break;
    case StandardKind::cycle:
        for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
        if (n >= 3) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
        break;
    case StandardKind::path:
        for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
        break;
    case StandardKind::independent:
        break;
    }
    return Graph(n, edges);
}

inline Graph clique(std::size_t n) { return gen_standard(StandardKind::clique, n); }
inline Graph cycle(std::size_t n) { return gen_standard(StandardKind::cycle, n); }
inline Graph path(std::size_t n) { return gen_standard(StandardKind::path, n); }
inline Graph independent(std::size_t n) { return gen_standard(StandardKind::independent, n); }

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

/// Kneser graph K_{a:b}: b-subsets of {1..a}, adjacent when disjoint.
/// Vertices are numbered in lexicographic order of the sorted subsets.
inline Graph gen_kneser(std::size_t a, std::size_t b) {
    if (b == 0 || a < 2 * b)
        throw ValidationError("kneser graph needs b >= 1 and a >= 2b (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    if (a > 63) throw ValidationError("kneser graph ground set too large");
    std::vector<std::uint64_t> subsets;
    std::vector<std::size_t> pick(b);
    for (std::size_t i = 0; i < b; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (auto i : pick) mask |= std::uint64_t{1} << i;
        subsets.push_back(mask);
        std::size_t i = b;
        while (i > 0 && pick[i - 1] == a - b + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < b; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < subsets.size(); ++u)
        for (Vertex v = u + 1; v < subsets.size(); ++v)
            if ((subsets[u] & subsets[v]) == 0) edges.emplace_back(u, v);
    return Graph(subsets.size(), edges);
}

/// (G_n, H_n): G_n = K_n (+) K_n on vertices A = 0..n-1, B = n..2n-1. H_n drops
/// the first edge of each copy, (0,1) and (n,n+1), and adds (0,n), (1,n+1).
inline std::pair<Graph, Graph> gen_frac_pair(std::size_t n) {
    if (n < 3) throw ValidationError("fractional-isomorphism pair needs n >= 3");
    Graph g = disjoint_union(clique(n), clique(n));
    auto a1 = Vertex{0}, a2 = Vertex{1}, b1 = static_cast<Vertex>(n), b2 = static_cast<Vertex>(n + 1);
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != Edge{a1, a2} && e != Edge{b1, b2}) edges.push_back(e);
    edges.emplace_back(a1, b1);
    edges.emplace_back(a2, b2);
    return {g, Graph(2 * n, edges)};
}

/// (X_1, X_2) = (I_1 (+) P_3, P_2 (+) P_2).
inline std::pair<Graph, Graph> gen_chrom_pair() {
    return {disjoint_union(independent(1), path(3)), disjoint_union(path(2), path(2))};
}

/// K_{k,y}: k-clique with a loop at every vertex; vertices and edges weigh 1,
/// loops weigh 1 + y.
inline WeightedGraph gen_weighted_clique(std::size_t k, const Rational& y) {
    if (k == 0) throw ValidationError("weighted clique needs k >= 1");
    Graph kk = clique(k);
    std::vector<Vertex> loops;
    for (Vertex v = 0; v < k; ++v) loops.push_back(v);
    return WeightedGraph(k, kk.edges(), loops, std::vector<Rational>(k, Rational(1)),
                         std::vector<Rational>(kk.edge_count(), Rational(1)), std::vector<Rational>(k, Rational(1 + y)));
}

/// L_{x,y}: vertex a = 0 (weight x), vertex b = 1 (weight y), edge ab and
/// loop bb of weight 1.
inline WeightedGraph gen_lollipop(const Rational& x, const Rational& y) {
    return WeightedGraph(2, {Edge{0, 1}}, {Vertex{1}}, {x, y}, {Rational(1)}, {Rational(1)});
}

}  // namespace homvec
