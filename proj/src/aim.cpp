#include "diraim/aim.hpp"

#include <cmath>
#include <string>

#include "diraim/error.hpp"

namespace diraim {

AimState aim_initial(RationalFn lambda0, RationalFn s0)
{
    return AimState{0, std::move(lambda0), std::move(s0)};
}

AimState aim_step(const AimState& prev, const RationalFn& lambda0, const RationalFn& s0, int max_degree)
{
    AimState next;
    next.k = prev.k + 1;
    next.lambda = prev.lambda.derivative() + prev.s + lambda0 * prev.lambda;
    next.s = prev.s.derivative() + s0 * prev.lambda;
    if (next.lambda.numerator().degree() > max_degree || next.s.numerator().degree() > max_degree)
        throw SolverError("aim_step: iterate degree exceeds cap " + std::to_string(max_degree) + " at k="
                          + std::to_string(next.k));
    return next;
}

DeltaValue quantization_delta_scaled(const AimState& state_k, const AimState& state_km1, double z0)
{
    if (state_k.lambda.has_pole_at(z0) || state_k.s.has_pole_at(z0) || state_km1.lambda.has_pole_at(z0)
        || state_km1.s.has_pole_at(z0))
        throw DomainError("quantization_delta: z0 is a pole of an AIM iterate");
    const double a = state_k.lambda(z0) * state_km1.s(z0);
    const double b = state_km1.lambda(z0) * state_k.s(z0);
    return {a - b, std::abs(a) + std::abs(b)};
}

double quantization_delta(const AimState& state_k, const AimState& state_km1, double z0)
{
    return quantization_delta_scaled(state_k, state_km1, z0).value;
}

DeltaValue aim_delta(const AimFamily& family, int n, double eps, double z0, int max_degree)
{
    if (n < 0)
        throw DomainError("aim_delta: n must be >= 0");
    auto [lambda0, s0] = family(eps);
    AimState prev = aim_initial(lambda0, s0);
    AimState cur = aim_step(prev, lambda0, s0, max_degree);
    for (int k = 1; k <= n; ++k) {
        prev = std::move(cur);
        cur = aim_step(prev, lambda0, s0, max_degree);
    }
    return quantization_delta_scaled(cur, prev, z0);
}

double find_eigenvalue(const AimFamily& family, int n, Bracket bracket, const EigenSearch& opts)
{
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo < hi))
        throw DomainError("find_eigenvalue: empty bracket");

    auto f = [&](double eps) { return aim_delta(family, n, eps, opts.z0, opts.max_degree).value; };

    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw SolverError("find_eigenvalue: no sign change in bracket");

    // Illinois false position, falling back to bisection when it stalls
    int side = 0;
    for (int it = 0; it < opts.max_iter; ++it) {
        if (hi - lo <= opts.tol)
            return 0.5 * (lo + hi);

        double x = (lo * fhi - hi * flo) / (fhi - flo);
        const double width = hi - lo;
        if (!(x > lo + 0.01 * width && x < hi - 0.01 * width))
            x = 0.5 * (lo + hi);

        const double fx = f(x);
        if (fx == 0.0)
            return x;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
            if (side == -1)
                fhi *= 0.5;
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if (side == 1)
                flo *= 0.5;
            side = 1;
        }
    }
    throw SolverError("find_eigenvalue: iteration cap exceeded");
}

} // namespace diraim
