#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "arith.hpp"
#include "errors.hpp"

namespace homvec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable; edges are
/// stored normalized (u < v), sorted and unique.
class Graph {
public:
    /// The empty graph (no vertices).
    Graph() = default;

    Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adjacency_(n, VertexSet(n)), neighbors_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                                      std::to_string(n) + " vertices");
            if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (auto [u, v] : edges_) {
            adjacency_[u].set(v);
            adjacency_[v].set(u);
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
        for (auto& list : neighbors_) std::sort(list.begin(), list.end());
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return n_ == 0; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
    const VertexSet& neighbor_set(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }

    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < n_; ++v) d.push_back(degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::vector<Vertex>> neighbors_;
};

/// Validating constructor: rejects self-loops and out-of-range endpoints,
/// silently drops duplicate edges.
inline Graph make_graph(std::size_t n, std::span<const Edge> edges) {
    return Graph(n, edges);
}
inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return Graph(n, edges);
}

/// Graph with loops and rational weights on vertices, edges and loops.
/// Non-loop edges are normalized u < v; `edge_weights` is parallel to
/// `edges()`, `loop_weights` to `loops()`.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> loops, std::vector<Rational> vertex_weights,
                  std::vector<Rational> edge_weights, std::vector<Rational> loop_weights)
        : n_(n), vertex_weights_(std::move(vertex_weights)) {
        if (vertex_weights_.size() != n) throw ValidationError("vertex weight count differs from vertex count");
        if (edge_weights.size() != edges.size()) throw ValidationError("edge weight count differs from edge count");
        if (loop_weights.size() != loops.size()) throw ValidationError("loop weight count differs from loop count");
        std::vector<std::pair<Edge, Rational>> e;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u >= n || v >= n) throw ValidationError("weighted edge endpoint out of range");
            if (u == v) throw ValidationError("loops belong in the loop list");
            if (u > v) std::swap(u, v);
            e.emplace_back(Edge{u, v}, edge_weights[i]);
        }
        std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i].first == e[i - 1].first) throw ValidationError("duplicate weighted edge");
        std::vector<std::pair<Vertex, Rational>> l;
        for (std::size_t i = 0; i < loops.size(); ++i) {
            if (loops[i] >= n) throw ValidationError("loop vertex out of range");
            l.emplace_back(loops[i], loop_weights[i]);
        }
        std::sort(l.begin(), l.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i].first == l[i - 1].first) throw ValidationError("duplicate loop");
        for (auto& [edge, w] : e) {
            edges_.push_back(edge);
            edge_weights_.push_back(w);
        }
        for (auto& [v, w] : l) {
            loops_.push_back(v);
            loop_weights_.push_back(w);
        }
    }

    /// Unit-weight lift of a simple graph.
    static WeightedGraph lift(const Graph& g) {
        return WeightedGraph(g.vertex_count(), g.edges(), {}, std::vector<Rational>(g.vertex_count(), Rational(1)),
                             std::vector<Rational>(g.edge_count(), Rational(1)), {});
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& loops() const { return loops_; }
    const std::vector<Rational>& vertex_weights() const { return vertex_weights_; }
    const std::vector<Rational>& edge_weights() const { return edge_weights_; }
    const std::vector<Rational>& loop_weights() const { return loop_weights_; }

    /// Dense n x n table of edge/loop weights; absent entries mean no edge.
    std::vector<std::vector<std::optional<Rational>>> weight_matrix() const {
        std::vector<std::vector<std::optional<Rational>>> m(n_, std::vector<std::optional<Rational>>(n_));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            m[u][v] = m[v][u] = edge_weights_[i];
        }
        for (std::size_t i = 0; i < loops_.size(); ++i) m[loops_[i]][loops_[i]] = loop_weights_[i];
        return m;
    }

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> loops_;
    std::vector<Rational> vertex_weights_;
    std::vector<Rational> edge_weights_;
    std::vector<Rational> loop_weights_;
};

// ---------------------------------------------------------------------------
// Graph operations

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    auto shift = static_cast<Vertex>(g.vertex_count());
    for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(g.vertex_count() + h.vertex_count(), edges);
}

/// G^{(+)0} is the empty graph.
inline Graph n_fold_union(const Graph& g, std::size_t n) {
    Graph result;
    for (std::size_t i = 0; i < n; ++i) result = disjoint_union(result, g);
    return result;
}

/// Categorical (tensor) product; vertex (u, a) has index u * |V(H)| + a.
inline Graph tensor_product(const Graph& g, const Graph& h) {
    std::size_t m = h.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : h.edges()) {
            edges.emplace_back(static_cast<Vertex>(u * m + a), static_cast<Vertex>(v * m + b));
            edges.emplace_back(static_cast<Vertex>(u * m + b), static_cast<Vertex>(v * m + a));
        }
    }
    return Graph(g.vertex_count() * m, edges);
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw ValidationError("add_edge needs distinct vertices");
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw ValidationError("add_edge vertex out of range");
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

/// Merges non-adjacent u and v into one vertex (kept at index min(u, v));
/// vertices above max(u, v) shift down by one.
inline Graph contract(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw ValidationError("contract needs distinct vertices");
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw ValidationError("contract vertex out of range");
    if (g.adjacent(u, v)) throw ValidationError("contract is only defined for non-adjacent vertices");
    if (u > v) std::swap(u, v);
    auto remap = [u, v](Vertex w) -> Vertex { return w == v ? u : (w > v ? w - 1 : w); };
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        Vertex x = remap(a), y = remap(b);
        if (x != y) edges.emplace_back(x, y);
    }
    return Graph(g.vertex_count() - 1, edges);
}

/// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) throw ValidationError("permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), edges);
}

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(g.vertex_count(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1)) edges.emplace_back(index[u], index[v]);
    return Graph(vertices.size(), edges);
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

}  // namespace homvec
