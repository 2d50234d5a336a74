#pragma once

#include "gnorm/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gnorm {

struct Cycle {
    std::vector<int> vertices; // starts at its smallest vertex
    std::vector<int> edges;    // edges[i] joins vertices[i] and vertices[i+1 mod L]
};

struct CycleSet {
    int length = 0;
    std::vector<Cycle> cycles;
};

// Four-cycle colour patterns. Not to be confused with DegreeStats::c1/c2.
struct FourCycleProfile {
    long long c1 = 0; // alternating
    long long c2 = 0; // monochromatic
    long long c3 = 0; // two adjacent edges of each colour
    long long c4 = 0; // three-one split
    long long total() const { return c1 + c2 + c3 + c4; }
    bool operator==(const FourCycleProfile &) const = default;
};

CycleSet enumerate_cycles(const BipartiteGraph &g, int length, const Caps &caps = {});

bool is_alternating(const Cycle &c, const Colouring &a);
int ones_on(const Cycle &c, const Colouring &a);

long long kappa_alternating(const BipartiteGraph &g, const Colouring &a, int length, const Caps &caps = {});
FourCycleProfile classify_4cycles(const BipartiteGraph &g, const Colouring &a, const Caps &caps = {});
FourCycleProfile profile_of(const CycleSet &four_cycles, const Colouring &a);
// c1 + c3 - c2
long long pattern_score(const FourCycleProfile &p);

struct CycleLaw {
    bool holds = true;
    std::optional<Cycle> witness;
};
CycleLaw check_girth_cycle_law(const BipartiteGraph &g, const Colouring &a, const Caps &caps = {});

struct TwoPathLaw {
    bool holds = true;
    // (u, v1, w, v2): alpha(u,v1) == alpha(u,v2) but alpha(w,v1) != alpha(w,v2)
    std::optional<std::array<int, 4>> witness;
};
TwoPathLaw check_two_path_law(const BipartiteGraph &g, const Colouring &a);

struct MaximizerScan {
    bool maximal = false;
    long long value = 0;
    long long best = 0;
    Colouring best_colouring; // lexicographically least maximizer
    std::uint64_t scanned = 0;
};

MaximizerScan maximizes_kappa_girth(const BipartiteGraph &g, const Colouring &a, const Caps &caps = {});
MaximizerScan maximizes_c1_plus_c3_minus_c2(const BipartiteGraph &g, const Colouring &a,
                                            const Caps &caps = {});

long long count_two_edge_matchings(const BipartiteGraph &g);

bool four_cycles_generate_cycle_space(const BipartiteGraph &g, const Caps &caps = {});

// beta over global vertex ids, or nullopt when alpha is not a coboundary.
std::optional<std::vector<std::uint8_t>> potential_colouring(const BipartiteGraph &g, const Colouring &a);

} // namespace gnorm
