#include "diraim/angular.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <tuple>

#include "diraim/error.hpp"
#include "diraim/hypergeom.hpp"

namespace diraim {

namespace {

void check_axis(int axis)
{
    if (axis < 1 || axis > 4)
        throw DomainError("axis must be in 1..4, got " + std::to_string(axis));
}

double root_exponent(double x, int axis, const char* which)
{
    const double shift = 0.25 * (axis - 2) * (axis - 2);
    const double disc = x + shift;
    if (!(disc >= 0.0))
        throw NotBoundError(std::string("axis ") + std::to_string(axis) + " not bound: negative discriminant for "
                            + which);
    return 0.5 * (0.5 + std::sqrt(disc));
}

} // namespace

double scarf_potential(ScarfParams p, Deformation q, double theta)
{
    const double s = deformed_trig(TrigKind::sin, q, theta);
    const double c = deformed_trig(TrigKind::cos, q, theta);
    return (p.b * p.b + p.a * (p.a - 1.0) - 2.0 * p.b * (p.a - 0.5) * c) / (s * s);
}

ShapePair scarf_shape_params(int axis, ScarfParams p, Deformation q, double me_sum, double lambda_prev)
{
    check_axis(axis);
    const double even = p.b * p.b + p.a * (p.a - 1.0);
    const double odd = 2.0 * p.b * (p.a - 0.5) * q.sqrt();
    const double prev = axis == 1 ? 0.0 : lambda_prev;
    const double x_minus = prev + me_sum * (even - odd) / q.value();
    const double x_plus = prev + me_sum * (even + odd) / q.value();
    return {root_exponent(x_minus, axis, "delta"), root_exponent(x_plus, axis, "gamma")};
}

std::pair<double, double> angular_lambda(int axis, double delta, double gamma, int n)
{
    check_axis(axis);
    if (n < 0)
        throw DomainError("angular_lambda: n must be >= 0");
    const double ell = delta + gamma + n - 0.5 * (axis - 1);
    return {ell, ell * (ell + axis - 1)};
}

double orbital_from_lambda(double lambda_last, int dimension)
{
    if (dimension < 3)
        throw DomainError("orbital_from_lambda: dimension must be >= 3");
    const double d = dimension - 2.0;
    const double disc = d * d + 4.0 * lambda_last;
    if (!(disc >= 0.0))
        throw NotBoundError("inadmissible chain: complex orbital number");
    return 0.5 * (-d + std::sqrt(disc));
}

namespace {

AngularChain chain_pass(std::span<const ScarfParams> params, std::span<const int> n, Deformation q, double me_sum,
                        int dimension, double gamma2_lambda_override, bool use_override)
{
    AngularChain chain;
    chain.me_sum = me_sum;
    const int axes = dimension - 1;
    double lambda_prev = 0.0;
    for (int i = 1; i <= axes; ++i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        ShapePair sp = scarf_shape_params(i, params[idx], q, me_sum, lambda_prev);
        if (i == 2 && use_override)
            sp.gamma = scarf_shape_params(i, params[idx], q, me_sum, gamma2_lambda_override).gamma;

        AxisSolution sol;
        sol.axis = i;
        sol.delta_s = sp.delta;
        sol.gamma_s = sp.gamma;
        sol.n = n[idx];
        std::tie(sol.ell, sol.lambda) = angular_lambda(i, sp.delta, sp.gamma, sol.n);
        if (i == 1)
            sol.O_s1 = sol.ell;
        if (!sol.admissible())
            throw NotBoundError("inadmissible chain: lambda_" + std::to_string(i) + " < 0");
        chain.axes.push_back(sol);
        lambda_prev = sol.lambda;
    }
    chain.ell_prime = orbital_from_lambda(lambda_prev, dimension);
    return chain;
}

} // namespace

AngularChain solve_angular_chain(std::span<const ScarfParams> params, std::span<const int> n, Deformation q,
                                 double me_sum, int dimension, ChainReading reading)
{
    if (dimension < 3 || dimension > 5)
        throw DomainError("solve_angular_chain: dimension must be 3, 4 or 5");
    const auto axes = static_cast<std::size_t>(dimension - 1);
    if (params.size() != axes || n.size() != axes)
        throw DomainError("solve_angular_chain: expected " + std::to_string(axes) + " axes");
    for (int ni : n)
        if (ni < 0)
            throw DomainError("solve_angular_chain: quantum numbers must be >= 0");

    if (reading == ChainReading::corrected)
        return chain_pass(params, n, q, me_sum, dimension, 0.0, false);

    // gamma_s2 depends on the last constant of the chain it feeds: iterate to a fixed point
    AngularChain chain = chain_pass(params, n, q, me_sum, dimension, 0.0, false);
    double last = chain.axes.back().lambda;
    for (int it = 0; it < 200; ++it) {
        chain = chain_pass(params, n, q, me_sum, dimension, last, true);
        const double next = chain.axes.back().lambda;
        if (std::abs(next - last) <= 1e-13 * std::max(1.0, std::abs(next)))
            return chain;
        last = next;
    }
    throw NotBoundError("inadmissible chain: literal reading did not converge");
}

double angular_reduced_wavefunction(const AxisSolution& sol, double theta)
{
    if (!(theta > 0.0 && theta < M_PI) && (sol.delta_s < 0.0 || sol.gamma_s < 0.0))
        throw DomainError("angular wave function: theta at an endpoint with a negative exponent");
    const double z = 0.5 * (1.0 - std::cos(theta));
    const double c = 2.0 * sol.delta_s + 0.5;
    const double sign = (sol.n % 2 == 0) ? 1.0 : -1.0;
    return std::pow(z, sol.delta_s) * std::pow(1.0 - z, sol.gamma_s) * sign * pochhammer(c, sol.n)
         * hypergeom_2f1_terminating(sol.n, 2.0 * sol.delta_s + 2.0 * sol.gamma_s + sol.n, c, z);
}

double angular_wavefunction(const AxisSolution& sol, double theta)
{
    if (!(theta > 0.0 && theta < M_PI))
        throw DomainError("angular_wavefunction: theta must lie in (0, pi)");
    return std::pow(std::sin(theta), -0.5 * (sol.axis - 1)) * angular_reduced_wavefunction(sol, theta);
}

std::pair<RationalFn, RationalFn> angular_aim_pair(int axis, double delta, double gamma, double lambda)
{
    check_axis(axis);
    const Polynomial zz{0.0, 1.0, -1.0}; // z(1 - z)
    const double k = axis - 1.0;
    const double sum = delta + gamma;
    RationalFn lambda0 = RationalFn::over(Polynomial{-(2.0 * delta + 0.5), 2.0 * sum + 1.0}, zz, 1);
    RationalFn s0 = RationalFn::over(Polynomial{sum * sum - 0.25 * k * k - lambda}, zz, 1);
    return {std::move(lambda0), std::move(s0)};
}

} // namespace diraim
