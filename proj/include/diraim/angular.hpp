#pragma once

#include <span>
#include <utility>
#include <vector>

#include "diraim/qdeform.hpp"
#include "diraim/rational.hpp"

namespace diraim {

/// Strengths of V(theta) = [b^2 + a(a-1) - 2b(a - 1/2) cos_q theta]/sin_q^2 theta.
struct ScarfParams {
    double a = 0.0;
    double b = 0.0;
};

/// How the separation constant enters gamma_s2.
enum class ChainReading {
    corrected, ///< lambda_1, the constant of the preceding axis
    literal,   ///< lambda_{D-1}, as typeset; solved self-consistently
};

struct AxisSolution {
    int axis = 1;
    double delta_s = 0.5;
    double gamma_s = 0.5;
    int n = 0;
    double ell = 0.0;
    double lambda = 0.0;
    double O_s1 = 0.0; ///< sqrt(lambda_1); axis 1 only
    [[nodiscard]] bool admissible() const noexcept { return lambda >= 0.0; }
};

struct AngularChain {
    std::vector<AxisSolution> axes;
    double ell_prime = 0.0;
    double me_sum = 0.0;
};

struct ShapePair {
    double delta = 0.5;
    double gamma = 0.5;
};

/// V(theta) for one axis.
[[nodiscard]] double scarf_potential(ScarfParams p, Deformation q, double theta);

/// Exponents of u_i = z^delta (1-z)^gamma at the two singular points, z = (1 - cos theta)/2:
///   delta = (1/2 + sqrt(X_- + (i-2)^2/4))/2,  gamma = (1/2 + sqrt(X_+ + (i-2)^2/4))/2,
///   X_-/+ = lambda_prev + me_sum (b^2 + a(a-1) -/+ 2b(a - 1/2) sqrt q)/q.
/// For i = 1 this is 2 delta (2 delta - 1) = X_-. Throws NotBoundError on a negative discriminant.
[[nodiscard]] ShapePair scarf_shape_params(int axis, ScarfParams p, Deformation q, double me_sum, double lambda_prev);

/// {l_i, lambda_i}: l_i = delta + gamma + n - (i-1)/2, lambda_i = l_i (l_i + i - 1).
[[nodiscard]] std::pair<double, double> angular_lambda(int axis, double delta, double gamma, int n);

/// The non-negative root l' of lambda = l'(l' + D - 2). Throws NotBoundError when complex.
[[nodiscard]] double orbital_from_lambda(double lambda_last, int dimension);

/// Full separation chain lambda_1 -> ... -> lambda_{D-1} at coupling me_sum = M + E - C_s.
/// `params` and `n` must hold D - 1 entries. Throws NotBoundError when any axis is inadmissible.
[[nodiscard]] AngularChain solve_angular_chain(std::span<const ScarfParams> params, std::span<const int> n,
                                               Deformation q, double me_sum, int dimension,
                                               ChainReading reading = ChainReading::corrected);

/// Schrodinger-form factor u_i(theta) = z^delta (1-z)^gamma (-1)^n (2 delta + 1/2)_n
///   2F1(-n, 2 delta + 2 gamma + n; 2 delta + 1/2; z), unnormalised.
[[nodiscard]] double angular_reduced_wavefunction(const AxisSolution& sol, double theta);

/// Polar factor P_i(theta) = sin^{-(i-1)/2}(theta) u_i(theta), the solution of the axis equation.
[[nodiscard]] double angular_wavefunction(const AxisSolution& sol, double theta);

/// (lambda0, s0) of the polynomial-part equation for axis i with spectral parameter lambda:
///   lambda0 = ((2d + 2g + 1) z - (2d + 1/2))/(z(1-z)),  s0 = ((d+g)^2 - (i-1)^2/4 - lambda)/(z(1-z)).
[[nodiscard]] std::pair<RationalFn, RationalFn> angular_aim_pair(int axis, double delta, double gamma, double lambda);

} // namespace diraim
