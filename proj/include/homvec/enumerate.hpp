#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "canonical.hpp"
#include "generators.hpp"
#include "guards.hpp"
#include "structure.hpp"

namespace homvec {

namespace detail {

using TypeList = std::vector<Graph>;

/// Sorted by edge count then canonical code; members are canonical graphs.
inline TypeList sort_types(std::map<CanonicalCode, Graph> found) {
    std::vector<std::pair<CanonicalCode, Graph>> items(found.begin(), found.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return type_order_less(a.second, a.first, b.second, b.first);
    });
    TypeList out;
    for (auto& item : items) out.push_back(std::move(item.second));
    return out;
}

/// Every graph on k vertices is a one-vertex extension of one on k - 1.
inline TypeList build_graphs_on(std::size_t k, const TypeList& smaller) {
    std::map<CanonicalCode, Graph> found;
    for (const auto& base : smaller) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
            std::vector<Edge> edges = base.edges();
            for (Vertex v = 0; v + 1 < k; ++v)
                if (mask >> v & 1) edges.emplace_back(v, static_cast<Vertex>(k - 1));
            Graph g(k, edges);
            auto code = canonical_form(g);
            if (!found.count(code)) found.emplace(code, parse_graph6(code.bytes()));
        }
    }
    return sort_types(std::move(found));
}

/// Every tree on k >= 2 vertices is a tree on k - 1 plus a leaf.
inline TypeList build_trees_on(std::size_t k, const TypeList& smaller) {
    std::map<CanonicalCode, Graph> found;
    for (const auto& base : smaller) {
        for (Vertex v = 0; v + 1 < k; ++v) {
            std::vector<Edge> edges = base.edges();
            edges.emplace_back(v, static_cast<Vertex>(k - 1));
            Graph g(k, edges);
            auto code = canonical_form(g);
            if (!found.count(code)) found.emplace(code, parse_graph6(code.bytes()));
        }
    }
    return sort_types(std::move(found));
}

template <class Build>
const TypeList& cached_level(std::map<std::size_t, TypeList>& cache, std::mutex& mutex, std::size_t k, Build build) {
    std::lock_guard lock(mutex);
    for (std::size_t level = 1; level <= k; ++level) {
        if (cache.count(level)) continue;
        if (level == 1) {
            cache[1] = TypeList{independent(1)};
        } else {
            cache[level] = build(level, cache.at(level - 1));
        }
    }
    return cache.at(k);
}

}  // namespace detail

/// Isomorphism types on exactly k >= 1 vertices, in type order.
inline const std::vector<Graph>& graphs_on(std::size_t k) {
    enforce_guard(Guard::all_graphs_vertices, k);
    if (k == 0) throw ValidationError("graphs_on needs k >= 1");
    static std::map<std::size_t, detail::TypeList> cache;
    static std::mutex mutex;
    return detail::cached_level(cache, mutex, k, detail::build_graphs_on);
}

/// Tree types on exactly k >= 1 vertices, in type order.
inline const std::vector<Graph>& trees_on(std::size_t k) {
    enforce_guard(Guard::trees_vertices, k);
    if (k == 0) throw ValidationError("trees_on needs k >= 1");
    static std::map<std::size_t, detail::TypeList> cache;
    static std::mutex mutex;
    return detail::cached_level(cache, mutex, k, detail::build_trees_on);
}

/// One representative per isomorphism type on 1..n vertices.
inline std::vector<Graph> enumerate_graphs(std::size_t n) {
    enforce_guard(Guard::all_graphs_vertices, n);
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& level = graphs_on(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<Graph> enumerate_trees(std::size_t n) {
    enforce_guard(Guard::trees_vertices, n);
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& level = trees_on(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Types on 1..n vertices with treewidth at most w.
inline std::vector<Graph> enumerate_treewidth_le(int w, std::size_t n) {
    enforce_guard(Guard::treewidth_vertices, n);
    std::vector<Graph> out;
    for (auto& g : enumerate_graphs(n))
        if (treewidth(g) <= w) out.push_back(std::move(g));
    return out;
}

}  // namespace homvec
