#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace homvec {

/// Byte string identifying an isomorphism type: the graph6 encoding of the
/// canonically relabelled graph.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}
    const std::string& bytes() const { return bytes_; }
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    std::string bytes_;
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

/// Refines an ordered partition to the coarsest equitable one. Split cells
/// stay in place; their fragments are ordered by neighbour-count signature,
/// so the result depends only on the graph and the input partition.
inline void refine_equitable(const Graph& g, Cells& cells) {
    std::vector<std::size_t> cell_of(g.vertex_count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[v] = c;
        Cells next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig;
            for (Vertex v : cell) {
                std::vector<std::size_t> counts(cells.size(), 0);
                for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            std::vector<Vertex> current{sig[0].second};
            for (std::size_t i = 1; i < sig.size(); ++i) {
                if (sig[i].first != sig[i - 1].first) {
                    next.push_back(std::move(current));
                    current.clear();
                    changed = true;
                }
                current.push_back(sig[i].second);
            }
            next.push_back(std::move(current));
        }
        cells = std::move(next);
    }
}

inline bool are_twins(const Graph& g, Vertex a, Vertex b) {
    VertexSet na = g.neighbor_set(a), nb = g.neighbor_set(b);
    na.reset(b);
    nb.reset(a);
    return na == nb;
}

/// Individualisation-refinement search; keeps the lexicographically smallest
/// leaf encoding. Twin vertices of the target cell yield identical subtrees
/// and are explored once.
inline void canonical_search(const Graph& g, Cells cells, std::string& best, std::vector<Vertex>& best_order) {
    refine_equitable(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        std::vector<Vertex> label(g.vertex_count());
        for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<Vertex>(i);
        std::string code = write_graph6(permute(g, label));
        if (best.empty() || code < best) {
            best = std::move(code);
            best_order = std::move(label);
        }
        return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return are_twins(g, v, w); })) continue;
        tried.push_back(v);
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != t) {
                child.push_back(cells[i]);
                continue;
            }
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : cell)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
        }
        canonical_search(g, std::move(child), best, best_order);
    }
}

}  // namespace detail

/// Canonical relabelling: result[v] is the canonical index of vertex v.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    detail::Cells cells(1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) cells[0].push_back(v);
    std::string best;
    std::vector<Vertex> order;
    detail::canonical_search(g, std::move(cells), best, order);
    return order;
}

inline CanonicalCode canonical_form(const Graph& g) {
    if (g.vertex_count() == 0) return CanonicalCode(write_graph6(g));
    return CanonicalCode(write_graph6(permute(g, canonical_labeling(g))));
}

inline Graph canonical_graph(const Graph& g) {
    return permute(g, canonical_labeling(g));
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_form(g) == canonical_form(h);
}

/// Isomorphism-type order: vertex count, then edge count, then canonical code.
inline bool type_order_less(const Graph& a, const CanonicalCode& ca, const Graph& b, const CanonicalCode& cb) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return ca < cb;
}

}  // namespace homvec
