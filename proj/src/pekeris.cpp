#include "diraim/pekeris.hpp"

#include <array>
#include <cassert>
#include <cmath>

#include "diraim/error.hpp"

namespace diraim {

double PekerisCoeffs::constant_part() const noexcept
{
    return c0 - c1 / (2.0 * q.sqrt()) + c2 / (2.0 * q.value());
}

double PekerisCoeffs::tanh_part() const noexcept
{
    return c1 / (2.0 * q.sqrt()) - c2 / (2.0 * q.value());
}

double centrifugal_numerator(double ell_prime, int dimension) noexcept
{
    const double d = static_cast<double>(dimension);
    return (ell_prime + 0.5 * (d - 1.0)) * (ell_prime + 0.5 * (d - 3.0));
}

CentrifugalStrength centrifugal_omega(double ell_prime, int dimension, double r_e)
{
    if (!std::isfinite(r_e) || r_e <= 0.0)
        throw DomainError("centrifugal_omega: r_e must be > 0");
    if (dimension < 3)
        throw DomainError("centrifugal_omega: dimension must be >= 3");
    if (!std::isfinite(ell_prime) || ell_prime < 0.0)
        throw DomainError("centrifugal_omega: l' must be >= 0");
    return {centrifugal_numerator(ell_prime, dimension) / (r_e * r_e), ell_prime, dimension};
}

double pekeris_basis(Deformation q, double alpha, double r)
{
    const double w = std::exp(-2.0 * alpha * r);
    return -w / (1.0 + q.value() * w);
}

namespace {

double det3(const std::array<std::array<double, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

PekerisCoeffs pekeris_coeffs(Deformation q, double alpha, double r_e)
{
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw DomainError("pekeris_coeffs: alpha must be > 0");
    if (!std::isfinite(r_e) || r_e <= 0.0)
        throw DomainError("pekeris_coeffs: r_e must be > 0");

    // u and its first two r-derivatives at r_e
    const double w = std::exp(-2.0 * alpha * r_e);
    const double d = 1.0 + q.value() * w;
    const double u = -w / d;
    const double u1 = 2.0 * alpha * w / (d * d);
    const double u2 = -4.0 * alpha * alpha * w * (1.0 - q.value() * w) / (d * d * d);

    // g = (c0 + c1 u + c2 u^2)/r_e^2 against 1/r^2, -2/r^3, 6/r^4 at r_e (scaled by r_e^2)
    const std::array<std::array<double, 3>, 3> a{{
        {1.0, u, u * u},
        {0.0, u1, 2.0 * u * u1},
        {0.0, u2, 2.0 * u1 * u1 + 2.0 * u * u2},
    }};
    const std::array<double, 3> rhs{1.0, -2.0 / r_e, 6.0 / (r_e * r_e)};

    const double det = det3(a);
    assert(det != 0.0 && "Pekeris matching system is singular");
    if (det == 0.0 || !std::isfinite(det))
        throw SolverError("pekeris_coeffs: degenerate matching system");

    std::array<double, 3> c{};
    for (int col = 0; col < 3; ++col) {
        auto m = a;
        for (int row = 0; row < 3; ++row)
            m[row][col] = rhs[row];
        c[col] = det3(m) / det;
    }

    PekerisCoeffs out;
    out.c0 = c[0];
    out.c1 = c[1];
    out.c2 = c[2];
    out.r_e = r_e;
    out.alpha = alpha;
    out.q = q;
    return out;
}

double pekeris_eval(const PekerisCoeffs& coeffs, double r)
{
    if (!(r > 0.0))
        throw DomainError("pekeris_eval: r must be > 0");
    const double u = pekeris_basis(coeffs.q, coeffs.alpha, r);
    return (coeffs.c0 + coeffs.c1 * u + coeffs.c2 * u * u) / (coeffs.r_e * coeffs.r_e);
}

double pekeris_printed_c0(Deformation q, double alpha, double r_e)
{
    const double y = 2.0 * alpha * r_e;
    const double t = (1.0 + q.value() * std::exp(-y)) / y;
    return 1.0 - t * t * (8.0 * alpha * r_e / (3.0 + y));
}

double pekeris_printed_c2(Deformation q, double alpha, double r_e)
{
    const double y = 2.0 * alpha * r_e;
    const double t = (1.0 + q.value() * std::exp(-y)) / y;
    const double e = std::exp(y) + 1.0;
    return e * e * t * t * (3.0 + y - 2.0 * y / (1.0 + q.value() * std::exp(-y)));
}

} // namespace diraim
