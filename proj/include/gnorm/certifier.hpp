#pragma once

#include "gnorm/graph.hpp"
#include "gnorm/symmetry.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gnorm {

using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// Trial factorization; CapExceeded above caps.prime_power_limit.
bool is_prime_power(std::uint64_t n, const Caps &caps = {});

struct CaseLabel {
    bool member = false;
    int case_no = 0;   // 1..5, 0 when not a member
    bool dual = false; // matched as (k, k-r)
    std::string label() const;
};

CaseLabel class_A_membership(int k, int r, const Caps &caps = {});
// The five-case list for H(n, r), taken literally.
CaseLabel kneser_admissible(int n, int r, const Caps &caps = {});

struct PrimeInRange {
    bool special = false; // t = 5
    int p = 0;
};
PrimeInRange prime_in_range(int t);
int prime_divisor_pt(int t);

struct Integrality {
    int n = 0, r = 0, t = 0, k = 0, s = 0;
    int case_no = 0; // 1 for n = 2r+1, 2 for n in {2r+2, 2r+3}
    BigRational d;
    bool integer = false;
};
Integrality kneser_integrality_test(int n, int r);

std::string to_string(const BigRational &q);

enum class Verdict { NotNorming, NoObstructionFound, SeminormingException };
const char *verdict_name(Verdict v);

struct Stage {
    std::string name;
    std::string status; // passed | failed | skipped | cap-exceeded | not-applicable
    std::string detail;
};

struct Kill {
    Colouring colouring;
    std::string obstruction;
    std::string provenance;
    nlohmann::json witness;
};

struct Certificate {
    Verdict verdict = Verdict::NoObstructionFound;
    std::string obstruction; // empty when none
    std::string provenance;
    nlohmann::json witness = nlohmann::json::object();
    std::vector<Stage> stages;
    std::vector<Colouring> survivors; // colourings no check could kill
    std::vector<Kill> kills;
    bool side_swap = true;
    bool verified = true; // false when only a cited family fact backs the verdict
    std::optional<std::string> cap_stage;
    std::string family;
    std::vector<int> params;
    std::string replay;
};

nlohmann::json certificate_json(const Certificate &c);

struct FamilyHint {
    std::string family; // "kneser" (n, r) or "inclusion" (n, k, r)
    std::vector<int> params;
};

Certificate certify_not_norming(const BipartiteGraph &g, const std::optional<FamilyHint> &hint = std::nullopt,
                                bool side_swap = true, const Caps &caps = {});

// family: hypercube (d) | kneser (n, r) | inclusion (n, k, r) | subdivided-complete (n)
Certificate certify_family(const std::string &family, const std::vector<int> &params, bool side_swap = true,
                           const Caps &caps = {});

// The graph a family certificate speaks about, when it is buildable.
std::optional<BipartiteGraph> family_graph(const std::string &family, const std::vector<int> &params,
                                           const Caps &caps = {});

// Replays the witness of a NotNorming certificate. g is needed for
// graph-level witnesses and ignored for purely arithmetic ones.
bool reverify(const Certificate &c, const BipartiteGraph *g, const Caps &caps = {});

} // namespace gnorm
