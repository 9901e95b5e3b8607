#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include <boost/rational.hpp>

#include "errors.hpp"

namespace homvec {

/// Named size limits. Every limit is multiplied by the rational read from
/// HOMVEC_GUARD_SCALE (default 1) the first time any guard is consulted.
enum class Guard {
    all_graphs_vertices,     // enumerate_graphs
    trees_vertices,          // enumerate_trees
    treewidth_vertices,      // exact treewidth
    chromatic_vertices,      // addition-contraction
    charpoly_vertices,       // Newton identities
    cep_edges,               // edge-subset enumeration
    independent_sets,        // independence polynomial, fractional chromatic LP
    wl_vertices,             // k-WL for k >= 2
    wl_dimension,            // largest k
    decomposition_vertices,  // sum over isomorphism types
    kneser_vertices,         // kneser_colorable target size
};

namespace detail {

inline const char* guard_name(Guard g) {
    switch (g) {
    case Guard::all_graphs_vertices: return "all-graphs-vertices";
    case Guard::trees_vertices: return "trees-vertices";
    case Guard::treewidth_vertices: return "treewidth-vertices";
    case Guard::chromatic_vertices: return "chromatic-vertices";
    case Guard::charpoly_vertices: return "charpoly-vertices";
    case Guard::cep_edges: return "cep-edges";
    case Guard::independent_sets: return "independent-sets";
    case Guard::wl_vertices: return "wl-vertices";
    case Guard::wl_dimension: return "wl-dimension";
    case Guard::decomposition_vertices: return "decomposition-vertices";
    case Guard::kneser_vertices: return "kneser-vertices";
    }
    return "unknown";
}

inline std::size_t guard_base(Guard g) {
    switch (g) {
    case Guard::all_graphs_vertices: return 8;
    case Guard::trees_vertices: return 12;
    case Guard::treewidth_vertices: return 10;
    case Guard::chromatic_vertices: return 12;
    case Guard::charpoly_vertices: return 16;
    case Guard::cep_edges: return 20;
    case Guard::independent_sets: return std::size_t{1} << 15;
    case Guard::wl_vertices: return 10;
    case Guard::wl_dimension: return 3;
    case Guard::decomposition_vertices: return 5;
    case Guard::kneser_vertices: return 2000;
    }
    return 0;
}

inline boost::rational<long long> read_guard_scale() {
    const char* env = std::getenv("HOMVEC_GUARD_SCALE");
    if (env == nullptr || *env == '\0') return 1;
    std::string text(env);
    try {
        auto slash = text.find('/');
        long long num = std::stoll(text.substr(0, slash));
        long long den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
        if (num <= 0 || den <= 0) return 1;
        return {num, den};
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace detail

/// Scaled limit for `g`. The dimension guard for k-WL is never scaled.
inline std::size_t guard_limit(Guard g) {
    static const boost::rational<long long> scale = detail::read_guard_scale();
    std::size_t base = detail::guard_base(g);
    if (g == Guard::wl_dimension) return base;
    auto scaled = boost::rational<long long>(static_cast<long long>(base)) * scale;
    return static_cast<std::size_t>(boost::rational_cast<long long>(scaled));
}

inline void enforce_guard(Guard g, std::size_t requested) {
    std::size_t limit = guard_limit(g);
    if (requested > limit) throw GuardError(detail::guard_name(g), requested, limit);
}

}  // namespace homvec
