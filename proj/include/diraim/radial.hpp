#pragma once

#include <utility>

#include "diraim/pekeris.hpp"
#include "diraim/qdeform.hpp"
#include "diraim/rational.hpp"

namespace diraim {

/// Radial problem: V(r) = V0 sech_q^2(alpha r) + V1 tanh_q(alpha r) under spin symmetry.
struct RadialConfig {
    double V0 = 0.0;
    double V1 = 0.0;
    double alpha = 1.0; // fm^-1
    Deformation q{1.0};
    double M = 1.0;     // fm^-1
    double C_s = 0.0;
    int D = 3;
    int n = 0;

    /// M + E - C_s, multiplying every potential term.
    [[nodiscard]] double coupling(double E) const noexcept { return M + E - C_s; }
    /// (M + E - C_s)(M - E), reducing to M^2 - E^2 when C_s = 0.
    [[nodiscard]] double energy_term(double E) const noexcept { return coupling(E) * (M - E); }
};

/// Throws DomainError unless alpha > 0, M > 0, n >= 0 and D in {3, 4, 5}.
void validate(const RadialConfig& cfg);

/// E', rho and nu(nu+1) without the square roots; always defined.
struct RadialTerms {
    double E_prime = 0.0;
    double rho = 0.0;
    double nu_nu1 = 0.0;
    double eps_n = 0.0; ///< nu(nu+1)/q
};

struct RadialShape {
    double E_prime = 0.0;
    double rho = 0.0;
    double nu_nu1 = 0.0;
    double delta = 0.0;
    double gamma = 0.0;
    double eps_n = 0.0;
};

[[nodiscard]] RadialTerms substituted_terms(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs);

/// Full shape with 4 delta^2 = rho - E' and 4 gamma^2 = -rho - E' (positive roots).
/// Throws NotBoundError when either right-hand side is negative.
[[nodiscard]] RadialShape substituted_params(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs);

/// s = sqrt(eps_n + 1/4) - n - 1/2. Throws DomainError when eps_n + 1/4 < 0.
[[nodiscard]] double quantized_sum(double eps_n, int n);

/// Energy relation residual
///   (M+E-C_s)(M-E) - { alpha^2 [rho^2/(4 s^2) + s^2] - omega (c0 - c1/(2 sqrt q) + c2/(2q)) }.
/// Throws DomainError on eps_n + 1/4 < 0 and on the quantization pole s = 0.
[[nodiscard]] double energy_residual(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs);

/// The same relation through eps_n = (S+n+1)^2 - (S+n+1) with S = delta + gamma:
/// returns (S+n+1)^2 - (S+n+1) - eps_n for an admissible shape.
[[nodiscard]] double eigenvalue_residual(const RadialShape& shape, int n);

/// Shape at a quantized energy: delta and gamma follow from s rather than from the square roots,
///   delta = (s + rho/(2s))/2,  gamma = (s - rho/(2s))/2,
/// which makes the wave function satisfy its equation exactly. Throws on the quantization pole.
[[nodiscard]] RadialShape quantized_shape(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs);

/// F_n(r) = z^delta (1-z)^gamma (-1)^n (2 delta + 1)_n 2F1(-n, 2 delta + 2 gamma + n + 1; 2 delta + 1; z),
/// z = (1 - tanh_q(alpha r))/2. Throws DomainError for delta <= 0, gamma <= 0 or r <= 0.
[[nodiscard]] double radial_wavefunction(const RadialShape& shape, const RadialConfig& cfg, int n, double r);

/// (lambda0, s0) of the radial polynomial-part equation with spectral parameter eps:
///   lambda0 = (z (2d + 2g + 2) - (2d + 1))/(z(1-z)),  s0 = ((d+g)(d+g+1) - eps)/(z(1-z)).
[[nodiscard]] std::pair<RationalFn, RationalFn> radial_aim_pair(double delta, double gamma, double eps);

} // namespace diraim
