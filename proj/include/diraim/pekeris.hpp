#pragma once

#include "diraim/qdeform.hpp"

namespace diraim {

/// Coefficients of the centrifugal approximation
///   1/r^2 ~ (c0 + c1 u + c2 u^2)/r_e^2,   u(r) = -e^{-2 alpha r}/(1 + q e^{-2 alpha r}),
/// matched to 1/r^2 in value, slope and curvature at r = r_e.
struct PekerisCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double r_e = 1.0;   // fm
    double alpha = 1.0; // fm^-1
    Deformation q{1.0};

    /// c0 - c1/(2 sqrt q) + c2/(2q): constant part after the tanh_q rewrite.
    [[nodiscard]] double constant_part() const noexcept;
    /// c1/(2 sqrt q) - c2/(2q): tanh_q coefficient.
    [[nodiscard]] double tanh_part() const noexcept;
    /// c2/4: sech_q^2 coefficient.
    [[nodiscard]] double sech2_part() const noexcept { return c2 / 4.0; }
};

/// omega = (l' + (D-1)/2)(l' + (D-3)/2)/r_e^2.
struct CentrifugalStrength {
    double omega = 0.0; // fm^-2
    double ell_prime = 0.0;
    int dimension = 3;
};

[[nodiscard]] CentrifugalStrength centrifugal_omega(double ell_prime, int dimension, double r_e);

/// Same strength with an arbitrary prefactor L(L+1)-style numerator already formed.
[[nodiscard]] double centrifugal_numerator(double ell_prime, int dimension) noexcept;

[[nodiscard]] PekerisCoeffs pekeris_coeffs(Deformation q, double alpha, double r_e);

/// The expansion variable u(r).
[[nodiscard]] double pekeris_basis(Deformation q, double alpha, double r);

/// g(r), the approximation to 1/r^2.
[[nodiscard]] double pekeris_eval(const PekerisCoeffs& coeffs, double r);

/// c0 as typeset in the source derivation. Disagrees with the matched value;
/// kept as a cross-check only.
[[nodiscard]] double pekeris_printed_c0(Deformation q, double alpha, double r_e);

/// c2 as typeset in the source derivation; coincides with the matched c2 at q = 1.
[[nodiscard]] double pekeris_printed_c2(Deformation q, double alpha, double r_e);

} // namespace diraim
