#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/constructions.hpp"
#include "gnorm/cycles.hpp"
#include "gnorm/symmetry.hpp"
#include "support.hpp"

using namespace gnorm;
using namespace testutil;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

// Directed cycles through distinct vertex tuples, divided by the rotations.
long long brute_cycles(const Tournament &t, int m) {
    int n = t.n();
    long long count = 0;
    std::vector<int> v(m);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            if (t.arc(v[m - 1], v[0]))
                ++count;
            return;
        }
        for (int x = 0; x < n; ++x) {
            bool used = false;
            for (int i = 0; i < depth; ++i)
                used |= v[i] == x;
            if (used || (depth > 0 && !t.arc(v[depth - 1], x)))
                continue;
            v[depth] = x;
            rec(depth + 1);
        }
    };
    rec(0);
    return count / m;
}

} // namespace

TEST_CASE("hypercubes") {
    auto q2 = hypercube(2);
    CHECK(graphs_isomorphic(q2, cycle_graph(4)));
    auto q3 = hypercube(3);
    CHECK(q3.num_edges() == 12);
    for (int v = 0; v < q3.num_vertices(); ++v)
        CHECK(q3.degree(v) == 3);
    auto q4 = hypercube(4);
    CHECK(q4.num_edges() == 32);
    CHECK(girth(q4) == 4);
    Caps caps;
    caps.hypercube_dim = 3;
    CHECK(kind_of([&] { hypercube(4, caps); }) == ErrorKind::CapExceeded);
}

TEST_CASE("hypercube colourings") {
    CHECK(coloured_isomorphic(hypercube(2), hypercube_alpha(2), cycle_graph(4), alternating(4)));
    CHECK(coloured_isomorphic(hypercube(2), hypercube_beta(2), cycle_graph(4), alternating(4)));
    for (int d : {2, 4, 6}) {
        auto g = hypercube(d);
        CHECK(is_balanced(g, hypercube_alpha(d)));
        CHECK(is_balanced(g, hypercube_beta(d)));
        CHECK(classify_4cycles(g, hypercube_beta(d)).c2 == 0);
    }
    CHECK(classify_4cycles(hypercube(4), hypercube_alpha(4)) == FourCycleProfile{16, 8, 0, 0});
    CHECK(kind_of([] { hypercube_alpha(3); }) == ErrorKind::OddDimension);
    CHECK(kind_of([] { hypercube_beta(5); }) == ErrorKind::OddDimension);
}

TEST_CASE("beta formula reads the same from both ends of an edge") {
    // names list coordinates 1..d left to right
    int d = 4, m = 2;
    auto g = hypercube(d);
    auto b = hypercube_beta(d);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto &x = g.name(g.edge_left(e));
        const auto &y = g.name(g.edge_right(e));
        int j = 1;
        while (x[j - 1] == y[j - 1])
            ++j;
        auto formula = [&](const std::string &z) {
            int w = static_cast<int>(std::count(z.begin(), z.end(), '1'));
            int c = j <= m ? w + (z[j - 1] - '0') + (z[j + m - 1] - '0') : w + (z[j - 1] - '0') + (z[j - m - 1] - '0') + 1;
            return c & 1;
        };
        CHECK(b[e] == formula(x));
        CHECK(formula(x) == formula(y));
    }
}

TEST_CASE("subdivisions") {
    CHECK(graphs_isomorphic(subdivide(complete_graph(3)), cycle_graph(6)));
    CHECK(subdivide(complete_graph(4)).num_edges() == 12);
    auto oct = subdivide(octahedron());
    CHECK(oct.num_left() == 6);
    CHECK(oct.num_right() == 12);
    CHECK(oct.num_edges() == 24);
}

TEST_CASE("tournaments from colourings") {
    auto k3 = complete_graph(3);
    auto c6 = subdivide(k3);
    auto bal = enumerate_balanced_colourings(c6);
    REQUIRE(!bal.empty());
    auto t = as_tournament(tournament_from_colouring(c6, bal[0], k3));
    CHECK(count_directed_cycles(t, 3) == 1);

    auto k5 = complete_graph(5);
    auto s5 = subdivide(k5);
    auto five = enumerate_balanced_colourings(s5);
    REQUIRE(!five.empty());
    for (std::size_t i = 0; i < five.size(); i += 37) {
        auto tt = as_tournament(tournament_from_colouring(s5, five[i], k5));
        CHECK(tt.is_regular());
        for (int v = 0; v < 5; ++v)
            CHECK(tt.out_degree(v) == 2);
    }
    CHECK(kind_of([&] { tournament_from_colouring(s5, mono(20), k5); }) == ErrorKind::NotBalanced);
}

TEST_CASE("tournament round trip") {
    for (int n : {3, 5, 7}) {
        auto t = clockwise_tournament(n);
        auto [g, a] = colouring_from_tournament(t);
        CHECK(is_balanced(g, a));
        auto back = as_tournament(tournament_from_colouring(g, a, complete_graph(n)));
        CHECK(back == t);
    }
}

TEST_CASE("clockwise and residue tournaments") {
    CHECK(count_directed_cycles(clockwise_tournament(3), 3) == 1);
    CHECK(count_directed_cycles(clockwise_tournament(5), 3) == 5);
    CHECK(count_directed_cycles(clockwise_tournament(7), 4) == 28);
    CHECK(kind_of([] { clockwise_tournament(6); }) == ErrorKind::EvenOrder);

    auto q3 = quadratic_residue_tournament(3);
    CHECK(q3 == clockwise_tournament(3));
    auto q7 = quadratic_residue_tournament(7);
    for (int x = 0; x < 7; ++x)
        for (int d : {1, 2, 4})
            CHECK(q7.arc(x, (x + d) % 7));
    CHECK(count_directed_cycles(q7, 3) == 14);
    CHECK(count_directed_cycles(q7, 4) == 21);
    CHECK(is_arc_transitive(q7));
    CHECK_FALSE(is_arc_transitive(clockwise_tournament(7)));
    CHECK(kind_of([] { quadratic_residue_tournament(9); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { quadratic_residue_tournament(5); }) == ErrorKind::WrongResidueClass);
}

TEST_CASE("cycle counts against brute force and the subdivision") {
    for (int n : {3, 5, 7}) {
        for (const auto &t : regular_tournaments(n)) {
            int d = (n - 1) / 2;
            CHECK(count_directed_cycles(t, 3) == n * d * (d + 1) / 6);
            if (n == 7)
                break;
        }
    }
    for (std::uint64_t i = 0; i < 6; ++i) {
        auto t = sample_regular_tournament(9, 1234, i);
        CHECK(t.is_regular());
        CHECK(count_directed_cycles(t, 3) == 9 * 4 * 5 / 6);
        CHECK(count_directed_cycles(t, 4) == brute_cycles(t, 4));
    }
    auto fives = regular_tournaments(5);
    CHECK(fives.size() == 24);
    for (const auto &t : fives) {
        auto [g, a] = colouring_from_tournament(t);
        CHECK(kappa_alternating(g, a, 6) == count_directed_cycles(t, 3));
        CHECK(kappa_alternating(g, a, 8) == count_directed_cycles(t, 4));
        CHECK(count_directed_cycles(t, 4) == brute_cycles(t, 4));
    }
}

TEST_CASE("regular tournaments on seven vertices") {
    auto sevens = regular_tournaments(7);
    CHECK(sevens.size() == 2640);
    for (std::size_t i = 0; i < sevens.size(); i += 97) {
        CHECK(count_directed_cycles(sevens[i], 4) == brute_cycles(sevens[i], 4));
        auto [g, a] = colouring_from_tournament(sevens[i]);
        CHECK(kappa_alternating(g, a, 8) == count_directed_cycles(sevens[i], 4));
    }
}

TEST_CASE("set inclusion graphs") {
    CHECK(graphs_isomorphic(set_inclusion_graph(3, 2, 1).graph, cycle_graph(6)));
    auto i431 = set_inclusion_graph(4, 3, 1).graph;
    CHECK(is_biregular(i431));
    CHECK(i431.degree(0) == 3);
    CHECK(i431.degree(i431.right_vertex(0)) == 3);
    for (int n : {4, 5}) {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    e.push_back({i, j});
        CHECK(graphs_isomorphic(set_inclusion_graph(n, n - 1, 1).graph, BipartiteGraph(n, n, e)));
    }
    for (int n = 3; n <= 6; ++n)
        for (int k = 2; k < n; ++k)
            for (int r = 1; r < k; ++r) {
                auto s = set_inclusion_graph(n, k, r);
                CHECK(s.graph.degree(0) == static_cast<int>(binomial_u64(k, r)));
                CHECK(s.graph.degree(s.graph.right_vertex(0)) == static_cast<int>(binomial_u64(n - r, k - r)));
                CHECK(is_biregular(s.graph));
                if (s.graph.num_vertices() <= 40)
                    CHECK(graphs_isomorphic(s.graph, set_inclusion_graph(n, n - r, n - k).graph));
            }
    CHECK(kind_of([] { set_inclusion_graph(3, 3, 1); }) == ErrorKind::DegenerateParameters);
    CHECK(kind_of([] { set_inclusion_graph(4, 2, 0); }) == ErrorKind::DegenerateParameters);
    CHECK(set_name({1, 2}) == "{1,2}");
}

TEST_CASE("bipartite Kneser graphs") {
    CHECK(graphs_isomorphic(bipartite_kneser(3, 1).graph, cycle_graph(6)));
    auto h52 = bipartite_kneser(5, 2).graph;
    CHECK(h52.num_left() == 10);
    CHECK(h52.num_right() == 10);
    for (int v = 0; v < 20; ++v)
        CHECK(h52.degree(v) == 3);
    CHECK(graphs_isomorphic(bipartite_kneser(4, 1).graph, set_inclusion_graph(4, 3, 1).graph));
    CHECK(kind_of([] { bipartite_kneser(4, 2); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("link hypergraphs") {
    auto s = set_inclusion_graph(5, 4, 2);
    auto full = link_hypergraph(s, mono(s.graph.num_edges()), 0);
    CHECK(full.edges.size() == 6);
    CHECK(link_hypergraph(s, mono(s.graph.num_edges(), 0), 0).edges.empty());
    // right degree C(3,2) = 3 is odd, so only the left vertex can be balanced
    CHECK(enumerate_balanced_colourings(s.graph).empty());
    Colouring half(s.graph.num_edges(), 0);
    int ones = 0;
    for (const auto &inc : s.graph.incident(0))
        if (ones < 3) {
            half[inc.edge] = 1;
            ++ones;
        }
    auto link = link_hypergraph(s, half, 0);
    CHECK(link.edges.size() == 3);
    for (const auto &e : link.edges)
        for (int x : e)
            CHECK(std::find(s.ksets[0].begin(), s.ksets[0].end(), x) != s.ksets[0].end());
    CHECK(kind_of([&] { link_hypergraph(s, half, 99); }) == ErrorKind::UnknownVertex);

    auto t = set_inclusion_graph(6, 4, 2, Caps{});
    Colouring tb(t.graph.num_edges(), 0);
    // colour 1 exactly on the pairs of each 4-set that contain its least element
    for (int e = 0; e < t.graph.num_edges(); ++e) {
        const auto &A = t.ksets[t.graph.edge(e).a];
        const auto &B = t.rsets[t.graph.edge(e).b];
        tb[e] = B[0] == A[0] ? 1 : 0;
    }
    CHECK(link_hypergraph(t, tb, 0).edges.size() == 3);
}

TEST_CASE("self-complementary and edge-transitive hypergraphs") {
    auto c5 = make_hypergraph({0, 1, 2, 3, 4}, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(hypergraph_is_self_complementary(c5));
    CHECK(hypergraph_is_edge_transitive(c5));
    for (const auto &[s, c] : codegree_profile(c5))
        CHECK(c == 2);
    auto p4 = make_hypergraph({0, 1, 2, 3}, 2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(hypergraph_is_self_complementary(p4));
    CHECK_FALSE(hypergraph_is_edge_transitive(p4));
    CHECK(complement(complement(p4)).edges == p4.edges);
    auto tri = make_hypergraph({0, 1, 2}, 2, {{0, 1}});
    CHECK_FALSE(hypergraph_is_self_complementary(tri));
}

TEST_CASE("self-complementarity against brute force") {
    // every 2-graph on 4 vertices
    std::vector<std::vector<int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::vector<int>> es;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1)
                es.push_back(pairs[i]);
        auto h = make_hypergraph({0, 1, 2, 3}, 2, es);
        auto comp = complement(h);
        std::vector<int> p{0, 1, 2, 3};
        bool sc = false;
        do {
            std::vector<std::vector<int>> img;
            for (const auto &e : h.edges) {
                std::vector<int> x{p[e[0]], p[e[1]]};
                std::sort(x.begin(), x.end());
                img.push_back(x);
            }
            std::sort(img.begin(), img.end());
            sc |= img == comp.edges;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(hypergraph_is_self_complementary(h) == sc);
    }
}
