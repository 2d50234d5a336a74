#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/certifier.hpp"
#include "gnorm/constructions.hpp"
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

// Membership by search: some edge-transitive self-complementary r-graph on k vertices.
bool class_A_by_search(int k, int r) {
    std::vector<int> ground(k);
    for (int i = 0; i < k; ++i)
        ground[i] = i;
    auto all = k_subsets(ground, r);
    int m = static_cast<int>(all.size());
    if (m % 2)
        return false;
    // choose m/2 of the r-sets; the first r-set may be assumed present by complementation
    std::vector<int> pick{0};
    std::function<bool(int)> rec = [&](int next) {
        if (static_cast<int>(pick.size()) == m / 2) {
            std::vector<std::vector<int>> es;
            for (int i : pick) {
                std::vector<int> e;
                for (int x : all[i])
                    e.push_back(x);
                es.push_back(e);
            }
            auto h = make_hypergraph(ground, r, es);
            return hypergraph_is_self_complementary(h) && hypergraph_is_edge_transitive(h);
        }
        for (int i = next; i < m; ++i) {
            if (m - i < m / 2 - static_cast<int>(pick.size()))
                break;
            pick.push_back(i);
            bool found = rec(i + 1);
            pick.pop_back();
            if (found)
                return true;
        }
        return false;
    };
    return rec(1);
}

bool divides(const BigInt &p, const BigInt &x) { return x % p == 0; }

} // namespace

TEST_CASE("binomials and prime powers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(binomial(4, 7) == 0);
    for (std::uint64_t n : {2, 3, 4, 5, 7, 8, 9, 25, 27, 49, 121, 1024})
        CHECK(is_prime_power(n));
    for (std::uint64_t n : {1, 6, 10, 12, 15, 36, 100})
        CHECK_FALSE(is_prime_power(n));
    Caps caps;
    caps.prime_power_limit = 100;
    CHECK(kind_of([&] { is_prime_power(101, caps); }) == ErrorKind::CapExceeded);
}

TEST_CASE("class A examples") {
    auto a = class_A_membership(4, 1);
    CHECK(a.member);
    CHECK(a.case_no == 1);
    auto b = class_A_membership(5, 2);
    CHECK(b.member);
    CHECK(b.case_no == 2);
    CHECK_FALSE(class_A_membership(7, 2).member);
    CHECK(kind_of([] { class_A_membership(3, 3); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("class A is closed under duality") {
    for (int k = 2; k <= 60; ++k)
        for (int r = 1; r < k; ++r)
            CHECK(class_A_membership(k, r).member == class_A_membership(k, k - r).member);
}

TEST_CASE("class A agrees with exhaustive hypergraph search") {
    for (int k = 2; k <= 6; ++k)
        for (int r = 1; r < k; ++r) {
            CAPTURE(k);
            CAPTURE(r);
            CHECK(class_A_membership(k, r).member == class_A_by_search(k, r));
        }
}

TEST_CASE("literal Kneser list") {
    auto a = kneser_admissible(3, 1);
    CHECK(a.member);
    CHECK(a.case_no == 1);
    CHECK_FALSE(kneser_admissible(4, 1).member);
    auto c = kneser_admissible(9, 3);
    CHECK(c.member);
    CHECK(c.case_no == 3);
    CHECK(kind_of([] { kneser_admissible(4, 2); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("literal list and class A disagree at H(8,3)") {
    CHECK_FALSE(kneser_admissible(8, 3).member);
    CHECK(class_A_membership(5, 3).member);
    auto cert = certify_family("kneser", {8, 3});
    CHECK(cert.obstruction != "KneserInadmissible");
}

TEST_CASE("inadmissible Kneser graphs have no transitive colouring") {
    for (int n = 3; n <= 7; ++n)
        for (int r = 1; 2 * r < n; ++r) {
            if (class_A_membership(n - r, r).member)
                continue;
            auto g = bipartite_kneser(n, r).graph;
            if (g.num_edges() > 32)
                continue;
            CAPTURE(n);
            CAPTURE(r);
            CHECK_FALSE(exists_transitive_colouring(g).colouring);
        }
}

TEST_CASE("primes in range") {
    CHECK(prime_in_range(2).p == 3);
    CHECK(prime_in_range(5).special);
    CHECK(prime_in_range(6).p == 11);
    for (int t = 2; t <= 200; ++t) {
        if (t == 5)
            continue;
        int p = prime_in_range(t).p;
        CHECK(2 * p >= 3 * t);
        CHECK(p < 2 * t);
        CHECK(is_prime(p));
    }
}

TEST_CASE("prime divisor witness") {
    CHECK(prime_divisor_pt(5) == 3);
    CHECK(prime_divisor_pt(2) == 3);
    CHECK(prime_divisor_pt(4) == 7);
    for (int t = 2; t <= 80; ++t) {
        BigInt p = prime_divisor_pt(t);
        CHECK(divides(p, binomial(2 * t - 1, t)));
        CHECK_FALSE(divides(p, binomial(3 * t - 1, t - 1)));
        CHECK_FALSE(divides(p, binomial(3 * t - 1, t)));
    }
}

TEST_CASE("integrality test") {
    auto a = kneser_integrality_test(7, 3);
    CHECK(a.t == 2);
    CHECK(a.k == 4);
    CHECK(a.s == 1);
    CHECK(to_string(a.d) == "100/3");
    CHECK_FALSE(a.integer);
    auto b = kneser_integrality_test(11, 5);
    CHECK(b.t == 3);
    CHECK(b.case_no == 1);
    // 2 C(8,2) C(6,0) C(8,3) / C(5,3)
    CHECK(b.d == BigRational(2 * 28 * 1 * 56, 10));
    CHECK(to_string(b.d) == "1568/5");
    CHECK(kind_of([] { kneser_integrality_test(9, 3); }) == ErrorKind::OutOfScopeParameters);
    auto c = kneser_integrality_test(16, 7);
    CHECK(c.case_no == 2);
}

TEST_CASE("pipeline on small graphs") {
    auto q3 = certify_not_norming(hypercube(3));
    CHECK(q3.verdict == Verdict::NotNorming);
    CHECK(q3.obstruction == "NotEulerian");
    CHECK(q3.provenance == "lem:eulerian");
    CHECK(reverify(q3, nullptr) == false);
    auto g3 = hypercube(3);
    CHECK(reverify(q3, &g3));

    for (int len : {4, 6}) {
        auto g = cycle_graph(len);
        auto c = certify_not_norming(g);
        CHECK(c.verdict == Verdict::NoObstructionFound);
        bool alt = false;
        for (const auto &s : c.survivors)
            alt |= s == alternating(len) || s == conjugate(alternating(len));
        CHECK(alt);
    }

    auto star = certify_not_norming(complete_bipartite(1, 4));
    CHECK(star.verdict == Verdict::SeminormingException);
    auto k14 = complete_bipartite(1, 4);
    CHECK(reverify(star, &k14));

    auto p3 = path_graph(4);
    auto cp = certify_not_norming(p3);
    CHECK(cp.verdict == Verdict::NotNorming);
    CHECK(reverify(cp, &p3));
}

TEST_CASE("pipeline on Q4") {
    auto q4 = hypercube(4);
    auto c = certify_not_norming(q4);
    REQUIRE(c.verdict == Verdict::NotNorming);
    CHECK(c.survivors.empty());
    CHECK(!c.kills.empty());
    CHECK(reverify(c, &q4));
    auto j = certificate_json(c);
    CHECK(j["verdict"] == "NotNorming");
    CHECK(j["automorphism_mode"] == "side_swap");
    CHECK(j["kills"].size() == c.kills.size());
}

TEST_CASE("not biregular") {
    // two 4-cycles sharing a left vertex: Eulerian, left degrees 4 and 2
    BipartiteGraph g(3, 4, std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}, {2, 2}, {2, 3}, {0, 3}});
    auto c = certify_not_norming(g);
    CHECK(c.verdict == Verdict::NotNorming);
    CHECK(c.obstruction == "NotBiregular");
    CHECK(reverify(c, &g));
}

TEST_CASE("family certificates") {
    auto h6 = certify_family("hypercube", {6});
    CHECK(h6.verdict == Verdict::NotNorming);
    CHECK(h6.provenance == "thm:cubes");
    CHECK(reverify(h6, nullptr));

    auto h3 = certify_family("hypercube", {3});
    CHECK(h3.obstruction == "NotEulerian");
    CHECK(reverify(h3, nullptr));

    auto k73 = certify_family("kneser", {7, 3});
    CHECK(k73.verdict == Verdict::NotNorming);
    CHECK(k73.obstruction == "IntegralityFailure");
    CHECK(k73.witness["d"] == "100/3");
    CHECK(reverify(k73, nullptr));

    auto k41 = certify_family("kneser", {4, 1});
    CHECK(k41.obstruction == "KneserInadmissible");
    CHECK(reverify(k41, nullptr));

    auto k31 = certify_family("kneser", {3, 1});
    CHECK(k31.verdict == Verdict::NoObstructionFound);

    auto s5 = certify_family("subdivided-complete", {5});
    CHECK(s5.verdict == Verdict::NotNorming);
    CHECK(s5.obstruction == "NoTransitiveColouring");
    CHECK(reverify(s5, nullptr));

    auto s7 = certify_family("subdivided-complete", {7});
    CHECK(s7.verdict == Verdict::NotNorming);
    CHECK(s7.obstruction == "KappaNotMaximal");
    CHECK(reverify(s7, nullptr));

    auto s4 = certify_family("subdivided-complete", {4});
    CHECK(s4.obstruction == "NotEulerian");
    CHECK(reverify(s4, nullptr));

    auto inc = certify_family("inclusion", {6, 4, 2});
    CHECK(inc.verdict == Verdict::NotNorming);
    CHECK(reverify(inc, nullptr));

    CHECK(kind_of([] { certify_family("inclusion", {3, 3, 1}); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { certify_family("nonsense", {1}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("tampered certificates fail to reverify") {
    auto k73 = certify_family("kneser", {7, 3});
    auto bad = k73;
    bad.witness["d"] = "100/7";
    CHECK_FALSE(reverify(bad, nullptr));

    auto q4 = hypercube(4);
    auto c = certify_not_norming(q4);
    REQUIRE(c.kills.size() > 1);
    auto dropped = c;
    dropped.kills.pop_back();
    CHECK_FALSE(reverify(dropped, &q4));
}

TEST_CASE("cap hits are recorded per stage") {
    Caps caps;
    caps.balanced_edges = 8;
    caps.colouring_edges = 8;
    auto c = certify_not_norming(hypercube(4), std::nullopt, true, caps);
    CHECK(c.verdict == Verdict::NoObstructionFound);
    REQUIRE(c.cap_stage);
    bool seen = false;
    for (const auto &s : c.stages)
        seen |= s.status == "cap-exceeded";
    CHECK(seen);
}
