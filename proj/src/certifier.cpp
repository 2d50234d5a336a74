#include "gnorm/certifier.hpp"

#include "gnorm/constructions.hpp"
#include "gnorm/cycles.hpp"

#include <algorithm>
#include <climits>

namespace gnorm {

using nlohmann::json;

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool is_prime_power(std::uint64_t n, const Caps &caps) {
    if (n > caps.prime_power_limit)
        fail(ErrorKind::CapExceeded, "prime-power test: " + std::to_string(n) + " > cap " +
                                         std::to_string(caps.prime_power_limit));
    if (n < 2)
        return false;
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            p = f;
            break;
        }
    if (p == 0)
        return true;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

std::string CaseLabel::label() const {
    if (!member)
        return "none";
    return "case " + std::to_string(case_no) + (dual ? " (dual)" : "");
}

namespace {

int raw_class_A(int k, int r, const Caps &caps) {
    if (r == 1 && k % 2 == 0)
        return 1;
    if (r == 2 && k % 4 == 1 && is_prime_power(k, caps))
        return 2;
    if (r == 3 && k % 4 == 2 && is_prime_power(k - 1, caps))
        return 3;
    if (r >= 3 && r % 2 == 1 && k == r + 1)
        return 4;
    if (r >= 7 && r % 4 == 3 && (k == r + 2 || k == r + 3) && is_prime_power(r + 2, caps))
        return 5;
    return 0;
}

} // namespace

CaseLabel class_A_membership(int k, int r, const Caps &caps) {
    if (!(k > r && r >= 1))
        fail(ErrorKind::DegenerateParameters, "class A needs k > r >= 1, got (" + std::to_string(k) + "," +
                                                  std::to_string(r) + ")");
    CaseLabel c;
    if (int n = raw_class_A(k, r, caps)) {
        c.member = true;
        c.case_no = n;
    } else if (int m = raw_class_A(k, k - r, caps)) {
        c.member = true;
        c.case_no = m;
        c.dual = true;
    }
    return c;
}

CaseLabel kneser_admissible(int n, int r, const Caps &caps) {
    if (!(r >= 1 && n > 2 * r))
        fail(ErrorKind::DegenerateParameters, "Kneser parameters need n > 2r >= 2, got (" + std::to_string(n) + "," +
                                                  std::to_string(r) + ")");
    CaseLabel c;
    if (r == 1 && n % 2 == 1)
        c.case_no = 1;
    else if (r == 2 && n % 4 == 3 && is_prime_power(n - 2, caps))
        c.case_no = 2;
    else if (r == 3 && n % 4 == 1 && is_prime_power(n - 4, caps))
        c.case_no = 3;
    else if (r >= 3 && r % 2 == 1 && n == 2 * r + 1)
        c.case_no = 4;
    else if (r >= 7 && r % 4 == 3 && (n == 2 * r + 2 || n == 2 * r + 3) && is_prime_power(r + 2, caps))
        c.case_no = 5;
    c.member = c.case_no != 0;
    return c;
}

PrimeInRange prime_in_range(int t) {
    if (t < 2)
        fail(ErrorKind::InvalidArgument, "prime_in_range needs t >= 2");
    if (t == 5)
        return {true, 0};
    for (int p = (3 * t + 1) / 2; p < 2 * t; ++p)
        if (is_prime(static_cast<std::uint64_t>(p)) && p % 2 == 1)
            return {false, p};
    fail(ErrorKind::VerificationFailed, "no prime in [3t/2, 2t) for t = " + std::to_string(t));
}

int prime_divisor_pt(int t) {
    auto pr = prime_in_range(t);
    int p = pr.special ? 3 : pr.p;
    BigInt bp = p;
    bool ok = binomial(2 * t - 1, t) % bp == 0 && binomial(3 * t - 1, t - 1) % bp != 0 &&
              binomial(3 * t - 1, t) % bp != 0;
    if (!ok)
        fail(ErrorKind::VerificationFailed, "prime " + std::to_string(p) + " fails the divisibility pattern at t = " +
                                                std::to_string(t));
    return p;
}

Integrality kneser_integrality_test(int n, int r) {
    if (r < 1 || r % 2 == 0)
        fail(ErrorKind::OutOfScopeParameters, "integrality test needs odd r");
    Integrality x;
    x.n = n;
    x.r = r;
    x.t = (r + 1) / 2;
    if (x.t >= 2 && n == 2 * r + 1)
        x.case_no = 1;
    else if (x.t >= 4 && x.t % 2 == 0 && (n == 2 * r + 2 || n == 2 * r + 3))
        x.case_no = 2;
    else
        fail(ErrorKind::OutOfScopeParameters, "(" + std::to_string(n) + "," + std::to_string(r) +
                                                  ") is outside the integrality test's hypotheses");
    x.k = n - r;
    x.s = x.k - r;
    int t = x.t;
    BigInt num = 2 * binomial(n - t, t - 1) * binomial(x.k, x.s - 1) * binomial(3 * t - 1, t);
    x.d = BigRational(num, binomial(2 * t - 1, t));
    x.integer = denominator(x.d) == 1;
    return x;
}

std::string to_string(const BigRational &q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

const char *verdict_name(Verdict v) {
    switch (v) {
    case Verdict::NotNorming: return "NotNorming";
    case Verdict::NoObstructionFound: return "NoObstructionFound";
    case Verdict::SeminormingException: return "SeminormingException";
    }
    return "?";
}

json certificate_json(const Certificate &c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    j["obstruction"] = c.obstruction.empty() ? json(nullptr) : json(c.obstruction);
    j["provenance"] = c.provenance.empty() ? json(nullptr) : json(c.provenance);
    j["witness"] = c.witness;
    j["verified"] = c.verified;
    j["automorphism_mode"] = c.side_swap ? "side_swap" : "strict";
    if (!c.family.empty()) {
        j["family"] = c.family;
        j["params"] = c.params;
    }
    json st = json::array();
    for (const auto &s : c.stages)
        st.push_back({{"stage", s.name}, {"status", s.status}, {"detail", s.detail}});
    j["stages"] = st;
    json sv = json::array();
    for (const auto &a : c.survivors)
        sv.push_back(to_string(a));
    j["survivors"] = sv;
    json ks = json::array();
    for (const auto &k : c.kills)
        ks.push_back({{"colouring", to_string(k.colouring)},
                      {"obstruction", k.obstruction},
                      {"provenance", k.provenance},
                      {"witness", k.witness}});
    j["kills"] = ks;
    j["cap_stage"] = c.cap_stage ? json(*c.cap_stage) : json(nullptr);
    j["replay"] = c.replay;
    return j;
}

namespace {

struct StarShape {
    bool centre_left = false;
    int leaves = 0;
    bool operator==(const StarShape &) const = default;
};

// mK_{1,1}, mK_{1,2d} or mK_{2d,1} with identical components
bool is_star_exception(const BipartiteGraph &g) {
    if (g.num_edges() == 0)
        return false;
    int nc = 0;
    auto comp = connected_components(g, &nc);
    std::vector<std::vector<int>> members(nc);
    for (int v = 0; v < g.num_vertices(); ++v)
        members[comp[v]].push_back(v);
    std::optional<StarShape> shape;
    for (const auto &m : members) {
        int sz = static_cast<int>(m.size());
        StarShape s;
        if (sz == 2) {
            s.leaves = 1;
        } else {
            int centre = -1;
            for (int v : m)
                if (g.degree(v) == sz - 1)
                    centre = v;
            if (centre < 0)
                return false;
            for (int v : m)
                if (v != centre && g.degree(v) != 1)
                    return false;
            s.centre_left = g.is_left(centre);
            s.leaves = sz - 1;
        }
        if (shape && !(*shape == s))
            return false;
        shape = s;
    }
    return shape->leaves == 1 || shape->leaves % 2 == 0;
}

json names_of(const BipartiteGraph &g, const std::vector<int> &vs) {
    json j = json::array();
    for (int v : vs)
        j.push_back(g.name(v));
    return j;
}

int find_vertex(const BipartiteGraph &g, const std::string &name) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.name(v) == name)
            return v;
    return -1;
}

struct Scores {
    CycleSet girth_cycles;
    CycleSet four_cycles;
    int girth = 0;
};

long long kappa_on(const CycleSet &cs, const Colouring &a) {
    long long k = 0;
    for (const auto &c : cs.cycles)
        k += is_alternating(c, a) ? 1 : 0;
    return k;
}

struct Best {
    long long value = LLONG_MIN;
    Colouring colouring;
    std::string scope;
};

template <class Score>
Best best_over(const std::vector<Colouring> &balanced, Score score) {
    Best b;
    b.scope = "balanced";
    for (const auto &a : balanced) {
        long long s = score(a);
        if (s > b.value) {
            b.value = s;
            b.colouring = a;
        }
    }
    return b;
}

class Pipeline {
  public:
    Pipeline(const BipartiteGraph &g, const std::optional<FamilyHint> &hint, bool side_swap, const Caps &caps)
        : g_(g), hint_(hint), caps_(caps) {
        c_.side_swap = side_swap;
        c_.replay = "gnorm certify graph <file>";
    }

    Certificate run() {
        if (!stage("star-exception", [&] { return star(); }))
            return c_;
        if (!stage("eulerian", [&] { return eulerian(); }))
            return c_;
        if (!stage("biregular", [&] { return biregular(); }))
            return c_;
        if (!stage("edge-transitive", [&] { return edge_transitive(); }))
            return c_;
        if (!stage("balanced-existence", [&] { return balanced(); }))
            return c_;
        if (!stage("family-arithmetic", [&] { return arithmetic(); }))
            return c_;
        if (!stage("transitive-search", [&] { return transitive(); }))
            return c_;
        stage("per-colouring", [&] { return kills(); });
        return c_;
    }

  private:
    // false stops the pipeline
    template <class Fn>
    bool stage(const std::string &name, Fn fn) {
        try {
            return fn();
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::CapExceeded)
                throw;
            c_.stages.push_back({name, "cap-exceeded", e.what()});
            c_.cap_stage = name;
            c_.verdict = Verdict::NoObstructionFound;
            return false;
        }
    }

    void pass(const std::string &name, const std::string &detail = "") {
        c_.stages.push_back({name, "passed", detail});
    }

    bool stop(const std::string &name, Verdict v, const std::string &obstruction, const std::string &prov,
              json witness, const std::string &detail = "") {
        c_.stages.push_back({name, "failed", detail});
        c_.verdict = v;
        c_.obstruction = obstruction;
        c_.provenance = prov;
        c_.witness = std::move(witness);
        return false;
    }

    bool star() {
        if (is_star_exception(g_))
            return stop("star-exception", Verdict::SeminormingException, "StarException", "th:seminorm",
                        {{"components", g_.num_vertices() ? 1 : 0}}, "disjoint union of identical stars");
        pass("star-exception");
        return true;
    }

    bool eulerian() {
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (g_.degree(v) % 2)
                return stop("eulerian", Verdict::NotNorming, "NotEulerian", "lem:eulerian",
                            {{"vertex", g_.name(v)}, {"degree", g_.degree(v)}});
        pass("eulerian");
        return true;
    }

    bool biregular() {
        if (!is_connected(g_)) {
            c_.stages.push_back({"biregular", "not-applicable", "disconnected"});
            return true;
        }
        for (int side = 0; side < 2; ++side) {
            int first = -1;
            for (int v = 0; v < g_.num_vertices(); ++v) {
                if (g_.is_left(v) != (side == 0))
                    continue;
                if (first < 0)
                    first = v;
                else if (g_.degree(v) != g_.degree(first))
                    return stop("biregular", Verdict::NotNorming, "NotBiregular", "thm:biregular",
                                {{"side", side == 0 ? "A" : "B"},
                                 {"vertices", names_of(g_, {first, v})},
                                 {"degrees", {g_.degree(first), g_.degree(v)}}});
            }
        }
        pass("biregular");
        return true;
    }

    bool edge_transitive() {
        auto rep = automorphisms(g_, c_.side_swap, caps_);
        if (!rep.edge_transitive)
            return stop("edge-transitive", Verdict::NotNorming, "NotEdgeTransitive", "Sidorenko20",
                        {{"edge_orbits", rep.edge_orbit_count}, {"group_order", rep.group_order.str()}});
        pass("edge-transitive", "group order " + rep.group_order.str());
        return true;
    }

    bool balanced() {
        balanced_ = enumerate_balanced_colourings(g_, caps_);
        if (balanced_.empty())
            return stop("balanced-existence", Verdict::NotNorming, "NotBalancedPossible", "th:balanced",
                        {{"balanced_count", 0}});
        pass("balanced-existence", std::to_string(balanced_.size()) + " balanced colourings");
        return true;
    }

    bool arithmetic() {
        if (!hint_ || (hint_->family != "kneser" && hint_->family != "inclusion")) {
            c_.stages.push_back({"family-arithmetic", "not-applicable", "no set-inclusion hint"});
            return true;
        }
        std::vector<int> p = hint_->params;
        int n, k, r;
        if (hint_->family == "kneser" && p.size() == 2) {
            n = p[0];
            r = p[1];
            k = n - r;
        } else if (hint_->family == "inclusion" && p.size() == 3) {
            n = p[0];
            k = p[1];
            r = p[2];
        } else {
            c_.stages.push_back({"family-arithmetic", "skipped", "hint has the wrong number of parameters"});
            return true;
        }
        SetInclusion si;
        try {
            si = set_inclusion_graph(n, k, r, caps_);
        } catch (const Error &e) {
            c_.stages.push_back({"family-arithmetic", "skipped", std::string("hint rejected: ") + e.what()});
            return true;
        }
        if (!graphs_isomorphic(g_, si.graph, true, caps_)) {
            c_.stages.push_back({"family-arithmetic", "skipped", "hint rejected: graph is not I(n,k,r)"});
            return true;
        }
        auto a1 = class_A_membership(k, r, caps_);
        auto a2 = class_A_membership(n - r, n - k, caps_);
        if (!a1.member || !a2.member) {
            bool kneser = k == n - r;
            json w = {{"n", n}, {"k", k}, {"r", r}, {"pair", a1.member ? json{n - r, n - k} : json{k, r}}};
            return stop("family-arithmetic", Verdict::NotNorming, kneser ? "KneserInadmissible" : "ClassAViolation",
                        "cor:kr", w);
        }
        if (k == n - r && r % 2 == 1) {
            try {
                auto x = kneser_integrality_test(n, r);
                if (!x.integer)
                    return stop("family-arithmetic", Verdict::NotNorming, "IntegralityFailure", "th:Kneser_3",
                                {{"n", n}, {"r", r}, {"t", x.t}, {"k", x.k}, {"s", x.s}, {"d", to_string(x.d)}});
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::OutOfScopeParameters)
                    throw;
            }
        }
        pass("family-arithmetic", "parameters verified; no arithmetic obstruction");
        return true;
    }

    bool transitive() {
        auto ts = exists_transitive_colouring(g_, c_.side_swap, caps_);
        if (ts.all_transitive.empty())
            return stop("transitive-search", Verdict::NotNorming, "NoTransitiveColouring", "th:real_transitive",
                        {{"mode", "exhaustive"}, {"balanced_count", ts.balanced_count}});
        transitive_ = ts.all_transitive;
        std::sort(transitive_.begin(), transitive_.end());
        pass("transitive-search", std::to_string(transitive_.size()) + " transitive colourings");
        return true;
    }

    bool kills() {
        auto gi = girth(g_);
        if (!gi) {
            c_.stages.push_back({"per-colouring", "not-applicable", "forest"});
            c_.survivors = transitive_;
            return true;
        }
        int m = g_.num_edges();
        bool exhaustive = static_cast<std::size_t>(m) <= caps_.colouring_edges;
        auto cyc_g = enumerate_cycles(g_, *gi, caps_);
        std::optional<Best> best_pattern, best_kappa;
        auto pattern = [&](const Colouring &a) { return pattern_score(profile_of(cyc_g, a)); };
        auto kappa = [&](const Colouring &a) { return kappa_on(cyc_g, a); };
        std::vector<Colouring> alive;
        for (const auto &a : transitive_) {
            auto law = check_girth_cycle_law(g_, a, caps_);
            if (!law.holds) {
                c_.kills.push_back({a, "GirthCycleLawViolated", "th:h3",
                                    {{"cycle", names_of(g_, law.witness->vertices)},
                                     {"edges", law.witness->edges},
                                     {"ones", ones_on(*law.witness, a)},
                                     {"length", *gi}}});
                continue;
            }
            if (*gi == 4) {
                auto prof = profile_of(cyc_g, a);
                if (prof.c4 > 0) {
                    c_.kills.push_back({a, "FourCyclePatternSuboptimal", "th:h2", {{"c4", prof.c4}}});
                    continue;
                }
                if (!best_pattern) {
                    if (exhaustive) {
                        auto s = maximizes_c1_plus_c3_minus_c2(g_, a, caps_);
                        best_pattern = Best{s.best, s.best_colouring, "exhaustive"};
                    } else {
                        best_pattern = best_over(balanced_, pattern);
                    }
                }
                long long v = pattern_score(prof);
                if (best_pattern->value > v) {
                    c_.kills.push_back({a, "FourCyclePatternSuboptimal", "th:h2",
                                        {{"value", v},
                                         {"better", to_string(best_pattern->colouring)},
                                         {"better_value", best_pattern->value},
                                         {"scope", best_pattern->scope}}});
                    continue;
                }
            }
            if (!best_kappa) {
                if (exhaustive) {
                    auto s = maximizes_kappa_girth(g_, a, caps_);
                    best_kappa = Best{s.best, s.best_colouring, "exhaustive"};
                } else {
                    best_kappa = best_over(balanced_, kappa);
                }
            }
            long long v = kappa(a);
            if (best_kappa->value > v) {
                c_.kills.push_back({a, "KappaNotMaximal", "th:h1",
                                    {{"length", *gi},
                                     {"value", v},
                                     {"better", to_string(best_kappa->colouring)},
                                     {"better_value", best_kappa->value},
                                     {"scope", best_kappa->scope}}});
                continue;
            }
            alive.push_back(a);
        }
        if (alive.empty()) {
            const auto &first = c_.kills.front();
            c_.stages.push_back({"per-colouring", "failed", "every transitive colouring is killed"});
            c_.verdict = Verdict::NotNorming;
            c_.obstruction = first.obstruction;
            c_.provenance = first.provenance;
            c_.witness = {{"colouring", to_string(first.colouring)}, {"detail", first.witness}};
            return false;
        }
        c_.survivors = alive;
        pass("per-colouring", std::to_string(alive.size()) + " colourings survive every check");
        c_.verdict = Verdict::NoObstructionFound;
        return true;
    }

    const BipartiteGraph &g_;
    std::optional<FamilyHint> hint_;
    Caps caps_;
    Certificate c_;
    std::vector<Colouring> balanced_, transitive_;
};

Certificate theorem_only(const std::string &family, const std::vector<int> &params, const std::string &prov,
                         json witness) {
    Certificate c;
    c.verdict = Verdict::NotNorming;
    c.obstruction = "FamilyTheorem";
    c.provenance = prov;
    c.witness = std::move(witness);
    c.verified = false;
    c.family = family;
    c.params = params;
    c.stages.push_back({"family", "failed", "cited family result; no finite witness at this size"});
    return c;
}

std::string replay_for(const std::string &family, const std::vector<int> &params) {
    std::string s = "gnorm certify " + family;
    for (int p : params)
        s += " " + std::to_string(p);
    return s;
}

bool pipeline_feasible(const BipartiteGraph &g, const Caps &caps) {
    return static_cast<std::size_t>(g.num_vertices()) <= caps.vertices &&
           static_cast<std::size_t>(g.num_edges()) <= caps.balanced_edges;
}

std::string kneser_theorem(int n, int r) {
    int k = n - r;
    if (r == 1)
        return "th:Kneser_1";
    if (r == 2 && k >= 5 && k % 2 == 1)
        return "prop:set_inclusion(iii)";
    if (r == 3 && k >= 4 && k % 2 == 0)
        return "prop:set_inclusion(i)";
    if (r == 3 && k == 5 && n >= 7)
        return "prop:set_inclusion(ii)";
    return "th:Kneser";
}

std::optional<std::string> inclusion_theorem(int n, int k, int r) {
    if (r == 1 && k >= 4)
        return "thm:nk1";
    if (r == 3 && k >= 4 && k % 2 == 0)
        return "prop:set_inclusion(i)";
    if (r == 3 && k == 5 && n >= 7)
        return "prop:set_inclusion(ii)";
    if (r == 2 && k >= 5 && k % 2 == 1)
        return "prop:set_inclusion(iii)";
    return std::nullopt;
}

// kbar_4 of an arc-transitive regular tournament on n vertices
BigRational transitive_kappa4(int n) {
    int d = (n - 1) / 2;
    return BigRational(3 * n * binomial(d + 1, 3), 4);
}

Certificate certify_kneser(int n, int r, bool side_swap, const Caps &caps) {
    std::vector<int> params{n, r};
    int k = n - r;
    auto finish = [&](Certificate c) {
        c.family = "kneser";
        c.params = params;
        c.side_swap = side_swap;
        c.replay = replay_for("kneser", params);
        return c;
    };
    if (n == 3 && r == 1) {
        auto g = bipartite_kneser(n, r, caps).graph;
        return finish(certify_not_norming(g, FamilyHint{"kneser", params}, side_swap, caps));
    }
    auto a = class_A_membership(k, r, caps);
    if (!a.member) {
        Certificate c;
        c.verdict = Verdict::NotNorming;
        c.obstruction = "KneserInadmissible";
        c.provenance = "th:Kneser_list";
        auto lit = kneser_admissible(n, r, caps);
        c.witness = {{"n", n}, {"r", r}, {"k", k}, {"class_A", a.label()}, {"literal_list", lit.label()}};
        c.stages.push_back({"family-arithmetic", "failed", "(n-r, r) is not in class A"});
        return finish(c);
    }
    if (r % 2 == 1) {
        try {
            auto x = kneser_integrality_test(n, r);
            if (!x.integer) {
                Certificate c;
                c.verdict = Verdict::NotNorming;
                c.obstruction = "IntegralityFailure";
                c.provenance = "th:Kneser_3";
                c.witness = {{"n", n}, {"r", r}, {"t", x.t}, {"k", x.k}, {"s", x.s}, {"d", to_string(x.d)},
                             {"p_t", prime_divisor_pt(x.t)}};
                c.stages.push_back({"family-arithmetic", "failed", "d = " + to_string(x.d) + " is not an integer"});
                return finish(c);
            }
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::OutOfScopeParameters)
                throw;
        }
    }
    std::optional<Certificate> pipe;
    try {
        auto g = bipartite_kneser(n, r, caps).graph;
        if (pipeline_feasible(g, caps))
            pipe = certify_not_norming(g, FamilyHint{"kneser", params}, side_swap, caps);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::CapExceeded)
            throw;
    }
    if (pipe && pipe->verdict == Verdict::NotNorming)
        return finish(*pipe);
    auto c = theorem_only("kneser", params, kneser_theorem(n, r), {{"n", n}, {"r", r}, {"class_A", a.label()}});
    if (pipe) {
        c.stages.insert(c.stages.begin(), pipe->stages.begin(), pipe->stages.end());
        c.survivors = pipe->survivors;
        c.kills = pipe->kills;
    }
    return finish(c);
}

Certificate certify_inclusion(int n, int k, int r, bool side_swap, const Caps &caps) {
    if (!(n > k && k > r && r > 0))
        fail(ErrorKind::OutOfRange, "inclusion family needs n > k > r > 0");
    if (k == n - r)
        return certify_kneser(n, r, side_swap, caps);
    std::vector<int> params{n, k, r};
    auto finish = [&](Certificate c) {
        c.family = "inclusion";
        c.params = params;
        c.side_swap = side_swap;
        c.replay = replay_for("inclusion", params);
        return c;
    };
    auto a1 = class_A_membership(k, r, caps);
    auto a2 = class_A_membership(n - r, n - k, caps);
    if (!a1.member || !a2.member) {
        Certificate c;
        c.verdict = Verdict::NotNorming;
        c.obstruction = "ClassAViolation";
        c.provenance = "cor:kr";
        c.witness = {{"n", n}, {"k", k}, {"r", r}, {"pair", a1.member ? json{n - r, n - k} : json{k, r}}};
        c.stages.push_back({"family-arithmetic", "failed", "a required pair is not in class A"});
        return finish(c);
    }
    if (auto th = inclusion_theorem(n, k, r))
        return finish(theorem_only("inclusion", params, *th, {{"n", n}, {"k", k}, {"r", r}}));
    try {
        auto g = set_inclusion_graph(n, k, r, caps).graph;
        if (pipeline_feasible(g, caps))
            return finish(certify_not_norming(g, FamilyHint{"inclusion", params}, side_swap, caps));
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::CapExceeded)
            throw;
    }
    Certificate c;
    c.verdict = Verdict::NoObstructionFound;
    c.stages.push_back({"family", "skipped", "parameters not covered by a family result and too large to search"});
    c.cap_stage = "family";
    return finish(c);
}

Certificate certify_subdivided(int n, bool side_swap, const Caps &caps) {
    if (n < 3)
        fail(ErrorKind::OutOfRange, "subdivided-complete needs n >= 3");
    std::vector<int> params{n};
    auto g = subdivide(complete_graph(n));
    Certificate c;
    if (n == 3) {
        c = certify_not_norming(g, std::nullopt, side_swap, caps);
    } else if (n % 2 == 0) {
        c.verdict = Verdict::NotNorming;
        c.obstruction = "NotEulerian";
        c.provenance = "lem:eulerian";
        c.witness = {{"vertex", g.name(0)}, {"degree", g.degree(0)}};
        c.stages.push_back({"eulerian", "failed", "branch vertices have odd degree n-1"});
    } else {
        int d = (n - 1) / 2;
        auto kbar = transitive_kappa4(n);
        c.provenance = "th:subdivision";
        c.verdict = Verdict::NotNorming;
        if (denominator(kbar) != 1) {
            c.obstruction = "NoTransitiveColouring";
            c.witness = {{"mode", "arithmetic"}, {"n", n}, {"d", d}, {"transitive_kappa4", to_string(kbar)}};
            c.stages.push_back({"arithmetic", "failed", "arc-transitive kappa_4 = " + to_string(kbar) + " is not an integer"});
            if (n <= 7) {
                long long count = 0, transitive = 0;
                for (const auto &t : regular_tournaments(n)) {
                    ++count;
                    transitive += is_arc_transitive(t) ? 1 : 0;
                }
                c.witness["regular_tournaments"] = count;
                c.witness["arc_transitive"] = transitive;
                c.stages.push_back({"tournament-scan", transitive ? "passed" : "failed",
                                    std::to_string(count) + " regular tournaments, " + std::to_string(transitive) +
                                        " arc-transitive"});
            }
        } else {
            auto cw = clockwise_tournament(n);
            long long ccw = count_directed_cycles(cw, 4);
            c.obstruction = "KappaNotMaximal";
            c.witness = {{"n", n},
                         {"d", d},
                         {"length", 8},
                         {"transitive_kappa8", to_string(kbar)},
                         {"clockwise_kappa8", ccw},
                         {"better", to_string(colouring_from_tournament(cw).second)}};
            if (static_cast<std::size_t>(g.num_edges()) <= 64 && n <= 9) {
                auto [sg, sa] = colouring_from_tournament(cw);
                c.witness["clockwise_kappa8_direct"] = kappa_alternating(sg, sa, 8, caps);
            }
            c.stages.push_back({"arithmetic", "failed", "clockwise kappa_8 " + std::to_string(ccw) +
                                                            " exceeds the arc-transitive value " + to_string(kbar)});
        }
    }
    c.family = "subdivided-complete";
    c.params = params;
    c.side_swap = side_swap;
    c.replay = replay_for("subdivided-complete", params);
    return c;
}

Certificate certify_hypercube(int d, bool side_swap, const Caps &caps) {
    if (d < 1 || d > caps.hypercube_dim)
        fail(ErrorKind::OutOfRange, "hypercube dimension must be in [1, " + std::to_string(caps.hypercube_dim) + "]");
    std::vector<int> params{d};
    auto g = hypercube(d, caps);
    Certificate c;
    if (d <= 2 || d == 4) {
        c = certify_not_norming(g, std::nullopt, side_swap, caps);
    } else if (d % 2 == 1) {
        c.verdict = Verdict::NotNorming;
        c.obstruction = "NotEulerian";
        c.provenance = "thm:cubes";
        c.witness = {{"vertex", g.name(0)}, {"degree", d}};
        c.stages.push_back({"eulerian", "failed", "every vertex has odd degree"});
    } else {
        auto cyc = enumerate_cycles(g, 4, caps);
        auto pa = profile_of(cyc, hypercube_alpha(d));
        auto pb = profile_of(cyc, hypercube_beta(d));
        auto prof = [](const FourCycleProfile &p) { return json{p.c1, p.c2, p.c3, p.c4}; };
        c.verdict = Verdict::NotNorming;
        c.obstruction = "FourCyclePatternSuboptimal";
        c.provenance = "thm:cubes";
        c.verified = false;
        c.witness = {{"d", d},
                     {"alpha_profile", prof(pa)},
                     {"beta_profile", prof(pb)},
                     {"alpha_score", pattern_score(pa)},
                     {"beta_score", pattern_score(pb)}};
        c.stages.push_back({"profiles", pa.c2 > 0 && pb.c2 == 0 ? "failed" : "passed",
                            "alpha has monochromatic 4-cycles, beta has none"});
    }
    c.family = "hypercube";
    c.params = params;
    c.side_swap = side_swap;
    c.replay = replay_for("hypercube", params);
    return c;
}

long long score_of(const std::string &kind, const BipartiteGraph &g, const Colouring &a, int length,
                   const Caps &caps) {
    if (kind == "FourCyclePatternSuboptimal")
        return pattern_score(classify_4cycles(g, a, caps));
    return kappa_alternating(g, a, length, caps);
}

bool reverify_kill(const Kill &k, const BipartiteGraph &g, const Caps &caps) {
    const auto &w = k.witness;
    if (k.obstruction == "GirthCycleLawViolated") {
        auto gi = girth(g);
        auto edges = w.at("edges").get<std::vector<int>>();
        if (!gi || static_cast<int>(edges.size()) != *gi)
            return false;
        int ones = 0;
        for (int e : edges) {
            if (e < 0 || e >= g.num_edges())
                return false;
            ones += k.colouring[e];
        }
        return ones != 0 && ones != *gi && 2 * ones != *gi;
    }
    if (k.obstruction == "FourCyclePatternSuboptimal" && w.contains("c4"))
        return classify_4cycles(g, k.colouring, caps).c4 > 0;
    int length = w.value("length", 4);
    auto better = colouring_from_string(w.at("better").get<std::string>());
    check_aligned(g, better);
    long long v = score_of(k.obstruction, g, k.colouring, length, caps);
    long long b = score_of(k.obstruction, g, better, length, caps);
    return v == w.at("value").get<long long>() && b == w.at("better_value").get<long long>() && b > v;
}

} // namespace

Certificate certify_not_norming(const BipartiteGraph &g, const std::optional<FamilyHint> &hint, bool side_swap,
                                const Caps &caps) {
    return Pipeline(g, hint, side_swap, caps).run();
}

Certificate certify_family(const std::string &family, const std::vector<int> &params, bool side_swap,
                           const Caps &caps) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            fail(ErrorKind::OutOfRange, family + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "hypercube") {
        need(1);
        return certify_hypercube(params[0], side_swap, caps);
    }
    if (family == "kneser") {
        need(2);
        if (!(params[1] >= 1 && params[0] > 2 * params[1]))
            fail(ErrorKind::OutOfRange, "kneser needs n > 2r >= 2");
        return certify_kneser(params[0], params[1], side_swap, caps);
    }
    if (family == "inclusion") {
        need(3);
        return certify_inclusion(params[0], params[1], params[2], side_swap, caps);
    }
    if (family == "subdivided-complete") {
        need(1);
        return certify_subdivided(params[0], side_swap, caps);
    }
    fail(ErrorKind::OutOfRange, "unknown family '" + family + "'");
}

std::optional<BipartiteGraph> family_graph(const std::string &family, const std::vector<int> &params,
                                           const Caps &caps) {
    try {
        if (family == "hypercube" && params.size() == 1)
            return hypercube(params[0], caps);
        if (family == "kneser" && params.size() == 2)
            return bipartite_kneser(params[0], params[1], caps).graph;
        if (family == "inclusion" && params.size() == 3)
            return set_inclusion_graph(params[0], params[1], params[2], caps).graph;
        if (family == "subdivided-complete" && params.size() == 1)
            return subdivide(complete_graph(params[0]));
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::CapExceeded)
            throw;
    }
    return std::nullopt;
}

bool reverify(const Certificate &c, const BipartiteGraph *g, const Caps &caps) {
    if (c.verdict == Verdict::SeminormingException)
        return g && is_star_exception(*g);
    if (c.verdict != Verdict::NotNorming)
        return true;
    const auto &w = c.witness;
    const std::string &o = c.obstruction;
    if (o == "IntegralityFailure") {
        auto x = kneser_integrality_test(w.at("n").get<int>(), w.at("r").get<int>());
        return !x.integer && to_string(x.d) == w.at("d").get<std::string>();
    }
    if (o == "KneserInadmissible") {
        int n = w.at("n").get<int>(), r = w.at("r").get<int>();
        return !class_A_membership(n - r, r, caps).member;
    }
    if (o == "ClassAViolation") {
        auto pair = w.at("pair").get<std::vector<int>>();
        return !class_A_membership(pair.at(0), pair.at(1), caps).member;
    }
    if (o == "FamilyTheorem") {
        if (c.family == "kneser")
            return kneser_theorem(c.params.at(0), c.params.at(1)) == c.provenance;
        if (c.family == "inclusion")
            return inclusion_theorem(c.params.at(0), c.params.at(1), c.params.at(2)) == c.provenance;
        return false;
    }
    if (c.family == "subdivided-complete" && o == "NoTransitiveColouring") {
        int n = w.at("n").get<int>();
        auto kbar = transitive_kappa4(n);
        if (denominator(kbar) == 1 || to_string(kbar) != w.at("transitive_kappa4").get<std::string>())
            return false;
        if (n <= 7)
            for (const auto &t : regular_tournaments(n))
                if (is_arc_transitive(t))
                    return false;
        return true;
    }
    if (c.family == "subdivided-complete" && o == "KappaNotMaximal") {
        int n = w.at("n").get<int>();
        auto kbar = transitive_kappa4(n);
        long long ccw = count_directed_cycles(clockwise_tournament(n), 4);
        return ccw == w.at("clockwise_kappa8").get<long long>() && BigRational(ccw) > kbar &&
               to_string(kbar) == w.at("transitive_kappa8").get<std::string>();
    }
    if (c.family == "hypercube" && o == "FourCyclePatternSuboptimal" && w.contains("alpha_profile")) {
        int d = w.at("d").get<int>();
        auto h = hypercube(d, caps);
        auto cyc = enumerate_cycles(h, 4, caps);
        auto pa = profile_of(cyc, hypercube_alpha(d));
        auto pb = profile_of(cyc, hypercube_beta(d));
        return is_balanced(h, hypercube_alpha(d)) && is_balanced(h, hypercube_beta(d)) && pa.c2 > 0 && pb.c2 == 0 &&
               pattern_score(pa) == w.at("alpha_score").get<long long>() &&
               pattern_score(pb) == w.at("beta_score").get<long long>();
    }
    std::optional<BipartiteGraph> built;
    if (!g && !c.family.empty()) {
        built = family_graph(c.family, c.params, caps);
        g = built ? &*built : nullptr;
    }
    if (!g)
        return false;
    if (o == "NotEulerian") {
        int v = find_vertex(*g, w.at("vertex").get<std::string>());
        return v >= 0 && g->degree(v) % 2 == 1 && g->degree(v) == w.at("degree").get<int>();
    }
    if (o == "NotBiregular") {
        auto names = w.at("vertices").get<std::vector<std::string>>();
        int u = find_vertex(*g, names.at(0)), v = find_vertex(*g, names.at(1));
        return is_connected(*g) && u >= 0 && v >= 0 && g->is_left(u) == g->is_left(v) && g->degree(u) != g->degree(v);
    }
    if (o == "NotEdgeTransitive")
        return !is_edge_transitive(*g, c.side_swap, caps);
    if (o == "NotBalancedPossible")
        return enumerate_balanced_colourings(*g, caps).empty();
    if (o == "NoTransitiveColouring")
        return !exists_transitive_colouring(*g, c.side_swap, caps).colouring.has_value();
    if (o == "GirthCycleLawViolated" || o == "FourCyclePatternSuboptimal" || o == "KappaNotMaximal") {
        if (c.kills.empty())
            return false;
        std::vector<Colouring> killed;
        for (const auto &k : c.kills) {
            if (!reverify_kill(k, *g, caps))
                return false;
            killed.push_back(k.colouring);
        }
        // the kills must cover every transitive colouring
        auto all = exists_transitive_colouring(*g, c.side_swap, caps).all_transitive;
        std::sort(all.begin(), all.end());
        std::sort(killed.begin(), killed.end());
        return all == killed;
    }
    return false;
}

} // namespace gnorm
