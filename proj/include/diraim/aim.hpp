#pragma once

#include <functional>
#include <utility>

#include "diraim/rational.hpp"

namespace diraim {

// Asymptotic iteration for y'' = lambda0 y' + s0 y:
//   lambda_k = lambda_{k-1}' + s_{k-1} + lambda0 lambda_{k-1}
//   s_k      = s_{k-1}'      + s0 lambda_{k-1}
// An eigenvalue makes delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k vanish.

struct AimState {
    int k = 0;
    RationalFn lambda;
    RationalFn s;
};

/// Default cap on iterate numerator degree; exceeding it is treated as divergence.
inline constexpr int kAimDefaultMaxDegree = 256;

[[nodiscard]] AimState aim_initial(RationalFn lambda0, RationalFn s0);

[[nodiscard]] AimState aim_step(const AimState& prev, const RationalFn& lambda0, const RationalFn& s0,
                                int max_degree = kAimDefaultMaxDegree);

[[nodiscard]] double quantization_delta(const AimState& state_k, const AimState& state_km1, double z0);

/// delta together with |lambda_k s_{k-1}| + |lambda_{k-1} s_k|, the natural magnitude to compare against.
struct DeltaValue {
    double value = 0.0;
    double scale = 0.0;
};
[[nodiscard]] DeltaValue quantization_delta_scaled(const AimState& state_k, const AimState& state_km1, double z0);

/// (lambda0, s0) as a function of the spectral parameter.
using AimFamily = std::function<std::pair<RationalFn, RationalFn>(double)>;

/// delta_{n+1}(z0) for the member of `family` at `eps`.
[[nodiscard]] DeltaValue aim_delta(const AimFamily& family, int n, double eps, double z0,
                                   int max_degree = kAimDefaultMaxDegree);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct EigenSearch {
    double z0 = 0.5;
    double tol = 1e-10; // absolute, on the spectral parameter
    int max_iter = 300;
    int max_degree = kAimDefaultMaxDegree;
};

/// Root of delta_{n+1}(z0; eps) inside `bracket` (which must show a sign change),
/// by bisection with secant (Illinois) refinement.
[[nodiscard]] double find_eigenvalue(const AimFamily& family, int n, Bracket bracket, const EigenSearch& opts = {});

} // namespace diraim
