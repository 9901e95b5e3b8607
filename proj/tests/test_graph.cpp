#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace homvec;

TEST(Graph, MakeGraph) {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(k3, clique(3));
    EXPECT_EQ(make_graph(2, {}), independent(2));
    Graph dedup = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(dedup.edge_count(), 1u);
    EXPECT_THROW(make_graph(3, {{1, 1}}), ValidationError);
    EXPECT_THROW(make_graph(3, {{0, 3}}), ValidationError);
}

TEST(Graph, StandardFamilies) {
    EXPECT_EQ(cycle(1), independent(1));
    EXPECT_EQ(cycle(2), clique(2));
    EXPECT_EQ(clique(4).edge_count(), 6u);
    EXPECT_EQ(cycle(7).edge_count(), 7u);
    EXPECT_EQ(path(5).edge_count(), 4u);
    EXPECT_THROW(gen_standard(StandardKind::path, 0), ValidationError);
}

TEST(Graph, Kneser) {
    Graph petersen = gen_kneser(5, 2);
    EXPECT_EQ(petersen.vertex_count(), 10u);
    EXPECT_EQ(petersen.edge_count(), 15u);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
    EXPECT_EQ(gen_kneser(2, 1), clique(2));
    Graph matching = gen_kneser(4, 2);
    EXPECT_EQ(matching.vertex_count(), 6u);
    EXPECT_EQ(matching.edge_count(), 3u);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(matching.degree(v), 1u);
    EXPECT_THROW(gen_kneser(3, 2), ValidationError);
}

TEST(Graph, FractionalPair) {
    auto [g3, h3] = gen_frac_pair(3);
    EXPECT_TRUE(oracle::isomorphic(g3, disjoint_union(clique(3), clique(3))));
    EXPECT_TRUE(oracle::isomorphic(h3, cycle(6)));
    auto [g4, h4] = gen_frac_pair(4);
    for (const Graph* g : {&g4, &h4}) {
        EXPECT_EQ(g->vertex_count(), 8u);
        EXPECT_EQ(g->edge_count(), 12u);
        for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g->degree(v), 3u);
    }
    EXPECT_THROW(gen_frac_pair(2), ValidationError);
}

TEST(Graph, ChromaticPair) {
    auto [x1, x2] = gen_chrom_pair();
    auto isolated = [](const Graph& g) {
        std::size_t count = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 0;
        return count;
    };
    EXPECT_EQ(isolated(x1), 1u);
    auto comps = components(x2);
    ASSERT_EQ(comps.size(), 2u);
    for (const auto& c : comps) EXPECT_EQ(c, clique(2));
    EXPECT_FALSE(is_isomorphic(x1, x2));
    EXPECT_EQ(disjoint_union(clique(2), clique(2)), x2);
}

TEST(Graph, WeightedGenerators) {
    auto w = gen_weighted_clique(2, -1);
    for (const auto& lw : w.loop_weights()) EXPECT_EQ(lw, 0);
    auto one = gen_weighted_clique(1, 3);
    EXPECT_EQ(one.vertex_count(), 1u);
    EXPECT_EQ(one.loop_weights(), std::vector<Rational>{4});
    auto half = gen_weighted_clique(3, make_rational(1, 2));
    EXPECT_EQ(half.loop_weights(), std::vector<Rational>(3, make_rational(3, 2)));
    EXPECT_EQ(half.edge_weights(), std::vector<Rational>(3, Rational(1)));
    auto unit = gen_lollipop(1, 1);
    EXPECT_EQ(unit.vertex_weights(), std::vector<Rational>(2, Rational(1)));
    EXPECT_EQ(gen_lollipop(0, 1).vertex_weights()[0], 0);
    auto given = gen_lollipop(make_rational(2, 3), 5);
    EXPECT_EQ(given.vertex_weights(), (std::vector<Rational>{make_rational(2, 3), Rational(5)}));
    EXPECT_EQ(given.loops(), std::vector<Vertex>{1});
}

TEST(Graph, UnionsAndProducts) {
    EXPECT_EQ(n_fold_union(path(2), 0).vertex_count(), 0u);
    Graph c44 = disjoint_union(cycle(4), cycle(4));
    EXPECT_EQ(c44.vertex_count(), 8u);
    EXPECT_EQ(c44.edge_count(), 8u);
    EXPECT_TRUE(oracle::isomorphic(tensor_product(clique(3), clique(2)), cycle(6)));
    EXPECT_EQ(tensor_product(cycle(5), independent(1)), independent(5));
    Graph c4k2 = tensor_product(cycle(4), clique(2));
    EXPECT_EQ(c4k2.vertex_count(), 8u);
    EXPECT_TRUE(is_bipartite(c4k2));
}

TEST(Graph, UnionIsCommutativeAndAssociativeUpToIsomorphism) {
    const auto graphs = enumerate_graphs(3);
    for (const auto& a : graphs)
        for (const auto& b : graphs) {
            EXPECT_TRUE(is_isomorphic(disjoint_union(a, b), disjoint_union(b, a)));
            for (const auto& c : graphs)
                EXPECT_TRUE(is_isomorphic(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c))));
        }
}

TEST(Graph, TensorProjectionsAreHomomorphisms) {
    for (const auto& g : enumerate_graphs(4))
        for (const auto& h : enumerate_graphs(4)) {
            Graph p = tensor_product(g, h);
            std::vector<Vertex> first(p.vertex_count()), second(p.vertex_count());
            for (Vertex v = 0; v < p.vertex_count(); ++v) {
                first[v] = static_cast<Vertex>(v / h.vertex_count());
                second[v] = static_cast<Vertex>(v % h.vertex_count());
            }
            EXPECT_TRUE(is_homomorphism(p, g, first));
            EXPECT_TRUE(is_homomorphism(p, h, second));
        }
}

TEST(Graph, ContractAndAddEdge) {
    EXPECT_EQ(contract(path(3), 0, 2), clique(2));
    EXPECT_EQ(add_edge(independent(2), 0, 1), clique(2));
    EXPECT_EQ(contract(independent(2), 0, 1), independent(1));
    EXPECT_THROW(contract(path(3), 0, 1), ValidationError);
    EXPECT_THROW(contract(path(3), 1, 1), ValidationError);
    for (const auto& g : enumerate_graphs(5))
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                if (g.adjacent(u, v)) continue;
                EXPECT_EQ(contract(g, u, v).vertex_count() + 1, g.vertex_count());
                EXPECT_EQ(add_edge(g, u, v).edge_count(), g.edge_count() + 1);
            }
}

TEST(Canonical, KnownCases) {
    EXPECT_TRUE(is_isomorphic(cycle(6), tensor_product(clique(3), clique(2))));
    EXPECT_FALSE(is_isomorphic(clique(3), path(3)));
    EXPECT_TRUE(is_isomorphic(gen_kneser(5, 2), gen_kneser(5, 2)));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
    std::vector<Graph> all;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); mask += (n == 5 ? 7 : 1)) {
            std::vector<Edge> edges;
            std::size_t bit = 0;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) edges.emplace_back(u, v);
            all.emplace_back(n, edges);
        }
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 3000; ++i) {
        const Graph& a = all[pick(rng)];
        const Graph& b = all[pick(rng)];
        EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b)) << write_graph6(a) << " " << write_graph6(b);
    }
}

TEST(Canonical, InvariantUnderRandomPermutations) {
    std::mt19937_64 rng(29);
    for (const auto& g : enumerate_graphs(5)) {
        auto code = canonical_form(g);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Vertex> perm(g.vertex_count());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(canonical_form(permute(g, perm)), code);
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        Graph petersen = gen_kneser(5, 2);
        std::vector<Vertex> perm(10);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(permute(petersen, perm)), canonical_form(petersen));
    }
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_graphs(4).size(), 18u);
    EXPECT_EQ(graphs_on(4).size(), 11u);
    const std::vector<std::size_t> per_size{1, 2, 4, 11, 34, 156};
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(graphs_on(k).size(), per_size[k - 1]);
    const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (std::size_t k = 1; k <= 9; ++k) EXPECT_EQ(trees_on(k).size(), trees[k - 1]);
    EXPECT_THROW(enumerate_graphs(guard_limit(Guard::all_graphs_vertices) + 1), GuardError);
}

TEST(Enumerate, DistinctCodesInTypeOrder) {
    auto graphs = enumerate_graphs(5);
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
        auto a = canonical_form(graphs[i]), b = canonical_form(graphs[i + 1]);
        EXPECT_TRUE(type_order_less(graphs[i], a, graphs[i + 1], b));
    }
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
    auto again = enumerate_graphs(5);
    EXPECT_EQ(graphs, again);
}

TEST(Enumerate, TreewidthOneIsForests) {
    std::vector<Graph> forests;
    for (const auto& g : enumerate_graphs(4))
        if (is_forest(g)) forests.push_back(g);
    EXPECT_EQ(enumerate_treewidth_le(1, 4), forests);
    for (const auto& t : enumerate_trees(6)) EXPECT_TRUE(is_tree(t));
}

TEST(Structure, Predicates) {
    EXPECT_EQ(girth(gen_kneser(5, 2)), 5u);
    EXPECT_FALSE(girth(path(4)).has_value());
    EXPECT_FALSE(is_bipartite(cycle(7)));
    EXPECT_TRUE(is_bipartite(cycle(8)));
    auto [g3, h3] = gen_frac_pair(3);
    EXPECT_TRUE(contains_clique_subgraph(g3, 3));
    EXPECT_FALSE(contains_clique_subgraph(h3, 3));
    EXPECT_FALSE(is_connected(g3));
    EXPECT_TRUE(is_connected(h3));
    EXPECT_EQ(components(g3).size(), 2u);
}

TEST(Structure, Treewidth) {
    EXPECT_EQ(treewidth(clique(5)), 4);
    EXPECT_EQ(treewidth(cycle(6)), 2);
    EXPECT_EQ(treewidth(path(4)), 1);
    EXPECT_EQ(treewidth(independent(3)), 0);
    EXPECT_EQ(treewidth(gen_kneser(5, 2)), 4);
}

TEST(Io, Graph6) {
    EXPECT_EQ(write_graph6(independent(1)), "@");
    EXPECT_EQ(write_graph6(clique(2)), "A_");
    for (const auto& g : enumerate_graphs(5)) EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    Graph big = cycle(70);
    EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Io, Graph6Errors) {
    auto offset_of = [](const std::string& text) -> long {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    EXPECT_EQ(offset_of(""), 0);
    EXPECT_EQ(offset_of("!"), 0);
    EXPECT_EQ(offset_of("A_x"), 2);
    EXPECT_EQ(offset_of("A"), 1);
    EXPECT_EQ(offset_of("A~"), 1);
}

TEST(Io, WeightedJson) {
    for (const auto& w : {gen_lollipop(1, 1), gen_lollipop(make_rational(2, 3), -5), gen_weighted_clique(3, make_rational(1, 2))})
        EXPECT_EQ(parse_weighted_json(write_weighted_json(w)), w);
    EXPECT_THROW(parse_weighted_json("{\"n\": 2"), ParseError);
    EXPECT_THROW(parse_weighted_json(R"({"n":1,"edges":[],"loops":[],"vw":["1/0"],"ew":[],"lw":[]})"), ParseError);
    EXPECT_THROW(parse_weighted_json(R"({"n":1,"edges":[[0,3]],"loops":[],"vw":["1"],"ew":["1"],"lw":[]})"), ValidationError);
}
