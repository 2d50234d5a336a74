#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gnorm {

enum class ErrorKind {
    CapExceeded,
    ShapeMismatch,
    ParseError,
    InvalidGraph,
    DegenerateParameters,
    OddDimension,
    EvenOrder,
    NotPrime,
    WrongResidueClass,
    NotBalanced,
    UnknownVertex,
    UnsupportedOrder,
    OutOfScopeParameters,
    OutOfRange,
    VerificationFailed,
    InvalidArgument,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what);
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &what);

// Budgets for every exponential routine. All are positive.
struct Caps {
    std::size_t balanced_edges = 32;     // balanced-colouring enumeration
    std::size_t colouring_edges = 24;    // full 2^e colouring scans
    std::size_t vertices = 64;           // automorphism search
    std::uint64_t assignments = 10'000'000;
    std::uint64_t factor_entries = 1u << 24;
    std::uint64_t cycles = 10'000'000;
    int hypercube_dim = 10;
    std::size_t construction_vertices = 5000; // set-inclusion graphs
    int tournament_vertices = 64;
    int hypergraph_vertices = 12;
    std::uint64_t prime_power_limit = 1'000'000;
};

// Worker count, bounded by GNORM_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n). Callers write results by index, so output
// never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

std::uint64_t binomial_u64(int n, int k);

} // namespace gnorm
