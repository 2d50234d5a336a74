#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/constructions.hpp"
#include "gnorm/symmetry.hpp"
#include "support.hpp"

#include <set>

using namespace gnorm;
using namespace testutil;

TEST_CASE("group order matches brute force") {
    CHECK(automorphisms(cycle_graph(4), true).group_order == 8);
    CHECK(automorphisms(cycle_graph(6), false).group_order == 6);
    CHECK(automorphisms(complete_bipartite(2, 3), true).group_order == 12);

    std::vector<BipartiteGraph> gs{cycle_graph(4), cycle_graph(6), cycle_graph(8), complete_bipartite(2, 3),
                                   complete_bipartite(3, 3), path_graph(4), hypercube(3)};
    for (const auto &g : gs)
        for (bool swap : {true, false})
            CHECK(automorphisms(g, swap).group_order == brute_automorphism_count(g, swap));
}

TEST_CASE("generators close to the reported order") {
    for (const auto &g : {cycle_graph(6), hypercube(3), complete_bipartite(2, 3)}) {
        auto rep = automorphisms(g, true);
        std::vector<Permutation> gens;
        for (const auto &a : rep.generators) {
            gens.push_back(a.vertex_map);
            // edge map is a permutation consistent with the vertex map
            std::set<int> seen(a.edge_map.begin(), a.edge_map.end());
            CHECK(seen.size() == static_cast<std::size_t>(g.num_edges()));
            for (int e = 0; e < g.num_edges(); ++e) {
                int img = g.edge_between(a.vertex_map[g.edge_left(e)], a.vertex_map[g.edge_right(e)]);
                CHECK(img == a.edge_map[e]);
            }
        }
        CHECK(group_order_by_closure(g.num_vertices(), gens, 100000) == rep.group_order);
    }
}

TEST_CASE("edge transitivity") {
    CHECK(is_edge_transitive(hypercube(3)));
    CHECK_FALSE(is_edge_transitive(path_graph(3)));
    CHECK(is_edge_transitive(set_inclusion_graph(4, 2, 1).graph));
}

TEST_CASE("self-conjugacy") {
    CHECK(is_self_conjugate(cycle_graph(4), alternating(4)).value);
    // two antipodal 2-paths coloured 0 on C8
    auto fig = colouring_from_string("00110011");
    auto sc = is_self_conjugate(cycle_graph(8), fig);
    CHECK_FALSE(sc.value);
    CHECK_FALSE(sc.balanced);
    CHECK_FALSE(is_self_conjugate(cycle_graph(6), mono(6)).value);
}

TEST_CASE("transitive colourings") {
    for (int len : {4, 6, 8})
        CHECK(is_transitive_colouring(cycle_graph(len), alternating(len)));
    CHECK_FALSE(is_transitive_colouring(cycle_graph(4), mono(4)));
    CHECK(is_transitive_colouring(hypercube(4), hypercube_alpha(4)));
}

TEST_CASE("transitive existence") {
    auto c6 = exists_transitive_colouring(cycle_graph(6));
    REQUIRE(c6.colouring);
    CHECK((*c6.colouring == alternating(6) || *c6.colouring == conjugate(alternating(6))));
    CHECK(c6.exhaustive);
    CHECK_FALSE(exists_transitive_colouring(complete_bipartite(1, 3)).colouring);
    auto q4 = exists_transitive_colouring(hypercube(4));
    REQUIRE(q4.colouring);
    CHECK(is_transitive_colouring(hypercube(4), *q4.colouring));
    CHECK(is_edge_transitive(hypercube(4)));
}

TEST_CASE("transitive implies self-conjugate implies balanced") {
    auto g = hypercube(3);
    for (const auto &a : all_colourings(g.num_edges())) {
        if (!is_balanced(g, a))
            continue;
        bool t = is_transitive_colouring(g, a);
        bool s = is_self_conjugate(g, a).value;
        CHECK((!t || s));
    }
    for (const auto &a : all_colourings(8)) {
        bool s = is_self_conjugate(cycle_graph(8), a).value;
        CHECK((!s || is_balanced(cycle_graph(8), a)));
    }
}

TEST_CASE("coloured isomorphism") {
    auto c4 = cycle_graph(4);
    CHECK(coloured_isomorphic(c4, colouring_from_string("1010"), c4, colouring_from_string("0101")));
    CHECK_FALSE(coloured_isomorphic(c4, colouring_from_string("1010"), c4, colouring_from_string("1100")));
    auto q4 = hypercube(4);
    CHECK(coloured_isomorphic(q4, hypercube_alpha(4), q4, conjugate(hypercube_alpha(4))));
}

TEST_CASE("coloured isomorphism is an equivalence on C6") {
    auto g = cycle_graph(6);
    auto all = all_colourings(6);
    std::vector<Colouring> sample(all.begin(), all.begin() + 24);
    for (const auto &x : sample) {
        CHECK(coloured_isomorphic(g, x, g, x));
        for (const auto &y : sample) {
            bool xy = coloured_isomorphic(g, x, g, y);
            CHECK(xy == coloured_isomorphic(g, y, g, x));
            if (!xy)
                continue;
            for (const auto &z : sample)
                if (coloured_isomorphic(g, y, g, z))
                    CHECK(coloured_isomorphic(g, x, g, z));
        }
    }
}

TEST_CASE("side swap matters for unequal orientation") {
    auto k12 = complete_bipartite(1, 2);
    BipartiteGraph k21(2, 1, std::vector<Edge>{{0, 0}, {1, 0}});
    CHECK(graphs_isomorphic(k12, k21, true));
    CHECK_FALSE(graphs_isomorphic(k12, k21, false));
}

TEST_CASE("automorphism cap") {
    Caps caps;
    caps.vertices = 4;
    CHECK_THROWS_AS(automorphisms(hypercube(3), true, caps), Error);
}
