#pragma once

#include <utility>

#include "diraim/rational.hpp"

namespace diraim {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
[[nodiscard]] double pochhammer(double a, int n);

/// 2F1(-n, b; c; z): the finite sum of n + 1 terms.
/// Throws DomainError if (c)_m vanishes for some m <= n.
[[nodiscard]] double hypergeom_2f1_terminating(int n, double b, double c, double z);

/// Coefficients of
///   y'' = 2 (a z^{N+1}/(1 - b z^{N+2}) - (t+1)/z) y' - w z^N/(1 - b z^{N+2}) y
/// whose polynomial solutions are
///   y_n = (-1)^n (N+2)^n (sigma)_n 2F1(-n, rho + n; sigma; b z^{N+2}).
struct HypergeomTemplate {
    double a = 0.0;
    double b = 1.0;
    double t = 0.0;
    double N = 0.0;
    double w = 0.0;

    /// (2t + N + 3)/(N + 2)
    [[nodiscard]] double sigma() const;
    /// ((2t + 1) b + 2a)/((N + 2) b)
    [[nodiscard]] double rho() const;
    /// w for which y_n solves the equation: b (N+2)^2 n (n + rho).
    [[nodiscard]] double eigen_w(int n) const;
};

/// y_n(z) with the normalisation constant set to 1.
[[nodiscard]] double template_solution(const HypergeomTemplate& tpl, int n, double z);

/// (lambda0, s0) of the template equation for integer N >= 0, for use with the AIM engine.
[[nodiscard]] std::pair<RationalFn, RationalFn> template_aim_pair(const HypergeomTemplate& tpl);

} // namespace diraim
