#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/constructions.hpp"
#include "gnorm/graph.hpp"
#include "support.hpp"

using namespace gnorm;
using namespace testutil;

TEST_CASE("eulerian") {
    CHECK(is_eulerian(cycle_graph(4)));
    CHECK_FALSE(is_eulerian(hypercube(3)));
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j)
                e.push_back({i, j});
    CHECK(is_eulerian(BipartiteGraph(5, 5, e)));
}

TEST_CASE("biregular") {
    CHECK(is_biregular(complete_bipartite(2, 3)));
    // star with a pendant path hung off one leaf
    BipartiteGraph star(2, 3, std::vector<Edge>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    CHECK_FALSE(is_biregular(star));
    auto inc = set_inclusion_graph(4, 2, 1);
    CHECK(is_biregular(inc.graph));
    CHECK(inc.graph.degree(0) == 2);
    CHECK(inc.graph.degree(inc.graph.right_vertex(0)) == 3);
}

TEST_CASE("girth") {
    CHECK(girth(cycle_graph(6)) == 6);
    CHECK(girth(hypercube(4)) == 4);
    CHECK_FALSE(girth(complete_bipartite(1, 3)).has_value());
    for (int len : {4, 6, 8, 10})
        CHECK(*girth(cycle_graph(len)) % 2 == 0);
}

TEST_CASE("disjoint union") {
    auto c4 = cycle_graph(4);
    auto [g, a] = disjoint_union({{c4, alternating(4)}, {c4, alternating(4)}});
    CHECK(g.num_vertices() == 8);
    CHECK(a.size() == 8);
    CHECK(is_balanced(g, a));
    auto k12 = complete_bipartite(1, 2);
    auto [h, b] = disjoint_union({{k12, colouring_from_string("10")}, {k12, colouring_from_string("01")}});
    CHECK(to_string(b) == "1001");
    CHECK(h.num_edges() == 4);
    auto [m, c] = disjoint_union({{c4, mono(4)}, {c4, mono(4)}, {c4, mono(4)}});
    CHECK(m.num_edges() == 12);
    CHECK(c.size() == 12);
}

TEST_CASE("degree stats") {
    auto c4 = cycle_graph(4);
    auto s = degree_stats(c4, alternating(4));
    for (int v = 0; v < 4; ++v) {
        CHECK(s.d_plus[v] == 1);
        CHECK(s.d_minus[v] == 1);
    }
    CHECK(s.c1 == 2);
    CHECK(s.c2 == 2);
    CHECK(s.d1 == 0);
    CHECK(s.d2 == 0);
    auto m = degree_stats(c4, mono(4));
    CHECK(m.d_plus[0] == 2);
    CHECK(m.d_minus[0] == 0);
    CHECK(m.c1 == 0);
    CHECK(m.c2 == 0);
    auto one = degree_stats(complete_bipartite(1, 1), mono(1));
    CHECK(one.c1 + one.c2 + one.d1 + one.d2 == 0);
}

TEST_CASE("degree stats identity per vertex") {
    auto g = hypercube(3);
    for (const auto &a : all_colourings(g.num_edges())) {
        if (a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 1) {
            auto s = degree_stats(g, a);
            for (int v = 0; v < g.num_vertices(); ++v) {
                int d = g.degree(v), p = s.d_plus[v], q = s.d_minus[v];
                CHECK(p + q == d);
                CHECK(d * (d - 1) / 2 == p * (p - 1) / 2 + q * (q - 1) / 2 + p * q);
            }
        }
    }
}

TEST_CASE("balanced") {
    auto c4 = cycle_graph(4);
    CHECK(is_balanced(c4, alternating(4)));
    CHECK_FALSE(is_balanced(c4, mono(4)));
    CHECK(is_balanced(hypercube(4), hypercube_beta(4)));
    for (const auto &a : all_colourings(6))
        CHECK(is_balanced(cycle_graph(6), a) == is_balanced(cycle_graph(6), conjugate(a)));
}

TEST_CASE("balanced enumeration") {
    CHECK(enumerate_balanced_colourings(cycle_graph(4)).size() == 2);
    CHECK(enumerate_balanced_colourings(complete_bipartite(1, 3)).empty());

    auto k44 = complete_bipartite(4, 4);
    std::vector<Colouring> brute;
    for (const auto &a : all_colourings(16))
        if (is_balanced(k44, a))
            brute.push_back(a);
    auto got = enumerate_balanced_colourings(k44);
    CHECK(got == brute);
    CHECK(got.size() == 90);
    CHECK(got.size() % 2 == 0);
    for (const auto &a : got)
        CHECK(std::binary_search(got.begin(), got.end(), conjugate(a)));
}

TEST_CASE("balanced enumeration respects the cap") {
    Caps caps;
    caps.balanced_edges = 8;
    CHECK_THROWS_AS(enumerate_balanced_colourings(hypercube(4), caps), Error);
    try {
        enumerate_balanced_colourings(hypercube(4), caps);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("construction rejects bad graphs") {
    auto kind_of = [](auto f) {
        try {
            f();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::OutOfRange;
    };
    CHECK(kind_of([] { BipartiteGraph(1, 1, std::vector<Edge>{{0, 0}, {0, 0}}); }) == ErrorKind::InvalidGraph);
    CHECK(kind_of([] { BipartiteGraph(2, 1, std::vector<Edge>{{0, 0}}); }) == ErrorKind::InvalidGraph);
    CHECK(kind_of([] {
              BipartiteGraph({"x"}, {"x"}, std::vector<std::pair<std::string, std::string>>{{"x", "x"}});
          }) == ErrorKind::InvalidGraph);
    CHECK(kind_of([] { check_aligned(cycle_graph(4), Colouring(3, 0)); }) != ErrorKind::OutOfRange);
}

TEST_CASE("usual equality ignores orientation of the edge list") {
    auto c4 = cycle_graph(4);
    std::vector<Edge> rev(c4.edges().rbegin(), c4.edges().rend());
    BipartiteGraph r(2, 2, rev);
    CHECK_FALSE(r == c4);
    CHECK(same_usual_graph(r, c4));
}

TEST_CASE("components") {
    auto [g, a] = disjoint_union({{cycle_graph(4), mono(4)}, {cycle_graph(6), mono(6)}});
    int count = 0;
    connected_components(g, &count);
    CHECK(count == 2);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(cycle_graph(6)));
}

TEST_CASE("colouring strings") {
    auto a = colouring_from_string("1100");
    CHECK(to_string(a) == "1100");
    CHECK(to_string(conjugate(a)) == "0011");
    CHECK(weight(a) == 2);
}
