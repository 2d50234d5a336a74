#pragma once

#include "gnorm/graph.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gnorm {

using cplx = std::complex<double>;

// Pinned tolerances.
inline constexpr double kFalsifierTol = 1e-9;     // absolute, all falsifiers
inline constexpr double kDualPathRelTol = 1e-12;  // direct vs elimination
inline constexpr double kArgmaxRelTol = 1e-12;    // ties in s_max
inline constexpr double kTensorRelTol = 1e-10;

// Complex p x q step function on [0,1]^2, row-major.
struct StepKernel {
    int p = 1;
    int q = 1;
    std::vector<cplx> v{cplx(1.0)};

    StepKernel() = default;
    StepKernel(int rows, int cols, cplx fill = 0.0);
    StepKernel(int rows, int cols, std::vector<cplx> values);

    cplx &at(int i, int j) { return v[static_cast<std::size_t>(i) * q + j]; }
    const cplx &at(int i, int j) const { return v[static_cast<std::size_t>(i) * q + j]; }

    static StepKernel constant(int rows, int cols, cplx c) { return StepKernel(rows, cols, c); }
    StepKernel conj() const;
    StepKernel transpose() const;
    StepKernel abs() const;
    StepKernel scaled(cplx c) const;
    StepKernel plus(const StepKernel &o) const;
    double sup_norm() const;
    cplx integral() const;
    bool operator==(const StepKernel &) const = default;
};

// Tensor product on the (p1 p2) x (q1 q2) grid.
StepKernel kron(const StepKernel &f, const StepKernel &g);

// f[i][j] = exp(2 pi i (a i + b j) / p); the discrete analogue of exp(2 pi i (x + y)).
StepKernel character_kernel(int p, int a, int b);
StepKernel random_complex_kernel(int p, int q, std::mt19937_64 &rng);
StepKernel random_real_kernel(int p, int q, std::mt19937_64 &rng);

enum class Mode { Conjugate, Transpose };
enum class Method { Direct, Eliminate };

using Decoration = std::vector<StepKernel>; // one kernel per edge

cplx t_decoration(const BipartiteGraph &g, const Colouring &a, const Decoration &d, Mode mode,
                  Method method = Method::Eliminate, const Caps &caps = {});
cplx t_density(const BipartiteGraph &g, const Colouring &a, const StepKernel &f, Mode mode,
               Method method = Method::Eliminate, const Caps &caps = {});

// Relative agreement check used for the two evaluation paths.
bool agree_relative(cplx x, cplx y, double rel);

struct SMax {
    double value = 0;
    Colouring argmax;
    std::vector<cplx> values; // indexed by colouring in lexicographic order
};
SMax s_max(const BipartiteGraph &g, const StepKernel &f, Mode mode, const Caps &caps = {});
double rho_2m(const BipartiteGraph &g, const StepKernel &f, int m, Mode mode, const Caps &caps = {});

struct TrigKernel {
    enum class Kind { H0, Hk, Constant } kind = Kind::H0;
    int k = 1;
    cplx c = 1.0;
    static TrigKernel h0() { return {}; }
    static TrigKernel hk(int k) { return {Kind::Hk, k, 1.0}; }
    static TrigKernel constant(cplx c) { return {Kind::Constant, 1, c}; }
};

cplx trig_density(const BipartiteGraph &g, const Colouring &a, const TrigKernel &h, const Caps &caps = {});
// Sum over balanced orientations of the per-edge phase products.
cplx trig_density_orientation_sum(const BipartiteGraph &g, const Colouring &a, const TrigKernel &h,
                                  const Caps &caps = {});

std::map<int, cplx> perturbation_coefficients(const BipartiteGraph &g, const Colouring &a,
                                              const TrigKernel &h, const std::set<int> &orders,
                                              const Caps &caps = {});

struct SecondOrder {
    double constant = 1;
    double linear = 0;
    double quadratic = 0;
    double I1 = 0, I2 = 0, I3 = 0;
    double integral = 0;
    long long matchings = 0;
    double at(double eps) const { return constant + linear * eps + quadratic * eps * eps; }
};
// Coefficients of r_{H,a}(1 + eps h) up to eps^2; h real and square.
SecondOrder second_order_expansion(const BipartiteGraph &g, const Colouring &a, const StepKernel &h);

struct ExpansionCheck {
    double eps = 0;
    double direct = 0;
    double predicted = 0;
    double residual = 0;
    double rigorous_c = 0; // sum_{j>=3} C(e,j) |h|^j |eps|^(j-3)
    double fitted_c = 0;   // residual / |eps|^3
    bool ok = false;
};
ExpansionCheck check_expansion(const BipartiteGraph &g, const Colouring &a, const StepKernel &h, double eps,
                               const Caps &caps = {});

struct HatamiResult {
    bool holds = true;
    double lhs = 0; // |t(decoration)|^e
    double rhs = 0; // prod |t(f_e)|
    double log_margin = 0;
};
HatamiResult hatami_check(const BipartiteGraph &g, const Colouring &a, const Decoration &d, Mode mode,
                          const Caps &caps = {});

struct Witness {
    std::string kind; // "triangle", "homogeneity", "hatami"
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    int resolution = 0;
    std::vector<StepKernel> kernels;
    cplx scalar = 0;
    double lhs = 0;
    double rhs = 0;
};

std::optional<Witness> triangle_falsifier(const BipartiteGraph &g, const Colouring &a, std::uint64_t seed,
                                          std::uint64_t trials, int resolution, const Caps &caps = {});
std::optional<Witness> hatami_search(const BipartiteGraph &g, const Colouring &a, std::uint64_t seed,
                                     std::uint64_t trials, int resolution, const Caps &caps = {});
// Recomputes both sides from the stored kernels; true when they match exactly
// and still violate.
bool replay_witness(const BipartiteGraph &g, const Colouring &a, const Witness &w, const Caps &caps = {});
// Regenerates the trial from (seed, trial, resolution) alone.
std::optional<Witness> regenerate_trial(const BipartiteGraph &g, const Colouring &a, const std::string &search,
                                        std::uint64_t seed, std::uint64_t trial, int resolution,
                                        const Caps &caps = {});

struct P1Result {
    bool holds = true;
    double worst_gap = 0; // max |t_beta| - Re t_alpha
    Colouring worst;
};
P1Result p1_check(const BipartiteGraph &g, const Colouring &candidate, const std::vector<Colouring> &betas,
                  const StepKernel &f, const Caps &caps = {});

} // namespace gnorm
