#pragma once

#include "gnorm/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gnorm {

struct AcceptanceRow {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0; // wall time, kept out of deterministic output
};

struct AcceptanceConfig {
    std::uint64_t seed = 20240607;
    Caps caps;
};

std::vector<AcceptanceRow> run_acceptance(const AcceptanceConfig &cfg = {});

} // namespace gnorm
