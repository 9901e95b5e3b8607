#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "generators.hpp"
#include "homcount.hpp"
#include "io.hpp"

namespace homvec {

enum class NamedClass { all, trees, cycles, paths, cliques, independents, treewidth_le };

/// A graph class: either a named family cut off at `bound` vertices, or an
/// explicit finite list (deduplicated up to isomorphism).
class ClassSpec {
public:
    static ClassSpec named(NamedClass kind, std::size_t bound, int width = 0) {
        ClassSpec c;
        c.kind_ = kind;
        c.bound_ = bound;
        c.width_ = width;
        return c;
    }
    static ClassSpec explicit_list(std::vector<Graph> members) {
        ClassSpec c;
        std::size_t bound = 0;
        for (const auto& g : members) bound = std::max(bound, g.vertex_count());
        c.bound_ = bound;
        c.members_ = std::move(members);
        return c;
    }

    bool is_named() const { return kind_.has_value(); }
    std::size_t bound() const { return bound_; }

    /// Members in type order: vertex count, edge count, canonical code.
    std::vector<Graph> expand() const {
        if (!kind_) {
            std::vector<std::pair<CanonicalCode, Graph>> typed;
            for (const auto& g : members_) {
                auto code = canonical_form(g);
                if (std::none_of(typed.begin(), typed.end(), [&](const auto& t) { return t.first == code; }))
                    typed.emplace_back(code, g);
            }
            std::stable_sort(typed.begin(), typed.end(), [](const auto& a, const auto& b) {
                return type_order_less(a.second, a.first, b.second, b.first);
            });
            std::vector<Graph> out;
            for (auto& t : typed) out.push_back(std::move(t.second));
            return out;
        }
        std::vector<Graph> out;
        switch (*kind_) {
        case NamedClass::all: return enumerate_graphs(bound_);
        case NamedClass::trees: return enumerate_trees(bound_);
        case NamedClass::treewidth_le: return enumerate_treewidth_le(width_, bound_);
        case NamedClass::cycles:
            for (std::size_t k = 1; k <= bound_; ++k) out.push_back(cycle(k));
            break;
        case NamedClass::paths:
            for (std::size_t k = 1; k <= bound_; ++k) out.push_back(path(k));
            break;
        case NamedClass::cliques:
            for (std::size_t k = 1; k <= bound_; ++k) out.push_back(clique(k));
            break;
        case NamedClass::independents:
            for (std::size_t k = 1; k <= bound_; ++k) out.push_back(independent(k));
            break;
        }
        return out;
    }

private:
    std::optional<NamedClass> kind_;
    std::size_t bound_ = 0;
    int width_ = 0;
    std::vector<Graph> members_;
};

enum class Side { left, right };

struct HomVectorEntry {
    Graph member;
    CanonicalCode code;
    BigCount count;
};

/// Left vector: entry i = hom(F_i, anchor). Right vector: hom(anchor, F_i).
struct HomVector {
    Side side;
    CanonicalCode anchor;
    std::vector<HomVectorEntry> entries;

    std::vector<BigCount> counts() const {
        std::vector<BigCount> out;
        for (const auto& e : entries) out.push_back(e.count);
        return out;
    }
};

/// hom(F, G), using the tree and cycle fast paths when F qualifies.
inline BigCount count_hom_from(const Graph& f, const Graph& g) {
    if (f.vertex_count() > 1 && is_tree(f)) return count_hom_tree_dp(f, g);
    if (f.vertex_count() >= 3 && is_connected(f) && f.edge_count() == f.vertex_count()) {
        bool two_regular = true;
        for (Vertex v = 0; v < f.vertex_count() && two_regular; ++v) two_regular = f.degree(v) == 2;
        if (two_regular) return count_hom_cycle(f.vertex_count(), g);
    }
    return count_hom(f, g);
}

inline BigCount side_count(Side side, const Graph& member, const Graph& anchor) {
    return side == Side::left ? count_hom_from(member, anchor) : count_hom(anchor, member);
}

inline HomVector make_vector(Side side, const Graph& g, const ClassSpec& c) {
    HomVector v{side, canonical_form(g), {}};
    for (auto& f : c.expand()) {
        BigCount count = side_count(side, f, g);
        auto code = canonical_form(f);
        v.entries.push_back({std::move(f), std::move(code), std::move(count)});
    }
    return v;
}

inline HomVector left_vector(const Graph& g, const ClassSpec& c) { return make_vector(Side::left, g, c); }
inline HomVector right_vector(const Graph& g, const ClassSpec& c) { return make_vector(Side::right, g, c); }

struct Distinguisher {
    Graph member;
    BigCount first;
    BigCount second;
};

/// First class member (in type order) whose count differs between G and H.
inline std::optional<Distinguisher> first_distinguisher(const Graph& g, const Graph& h, Side side, const ClassSpec& c) {
    for (const auto& f : c.expand()) {
        BigCount a = side_count(side, f, g);
        BigCount b = side_count(side, f, h);
        if (a != b) return Distinguisher{f, std::move(a), std::move(b)};
    }
    return std::nullopt;
}

/// G in Inj(F): G maps injectively into some member.
inline bool inj_closure_member(const std::vector<Graph>& family, const Graph& g) {
    return std::any_of(family.begin(), family.end(), [&](const Graph& f) { return count_inj(g, f) > 0; });
}

/// G in Sur(F): some member maps onto G (vertices and edges).
inline bool sur_closure_member(const std::vector<Graph>& family, const Graph& g) {
    return std::any_of(family.begin(), family.end(), [&](const Graph& f) { return count_sur(f, g) > 0; });
}

/// G in Ext(F) = Sur(F) and Inj(F).
inline bool ext_member(const std::vector<Graph>& family, const Graph& g) {
    return sur_closure_member(family, g) && inj_closure_member(family, g);
}

/// Bounded check of Ext(F) = F: every graph on at most bound() vertices that
/// lies in Ext of the expanded class is isomorphic to a member.
inline bool ext_closed_check(const ClassSpec& c) {
    const auto members = c.expand();
    std::vector<CanonicalCode> codes;
    for (const auto& f : members) codes.push_back(canonical_form(f));
    for (const auto& g : enumerate_graphs(c.bound())) {
        if (!ext_member(members, g)) continue;
        if (std::find(codes.begin(), codes.end(), canonical_form(g)) == codes.end()) return false;
    }
    return true;
}

/// CSV with header "member_graph6,count".
inline std::string vector_to_csv(const HomVector& v) {
    std::ostringstream out;
    out << "member_graph6,count\n";
    for (const auto& e : v.entries) out << write_graph6(e.member) << ',' << e.count << '\n';
    return out.str();
}

}  // namespace homvec
