#include "diraim/hypergeom.hpp"

#include <cmath>

#include "diraim/error.hpp"

namespace diraim {

double pochhammer(double a, int n)
{
    if (n < 0)
        throw DomainError("pochhammer: n must be >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k)
        p *= a + k;
    return p;
}

double hypergeom_2f1_terminating(int n, double b, double c, double z)
{
    if (n < 0)
        throw DomainError("hypergeom_2f1_terminating: n must be >= 0");
    // terms t_{m+1} = t_m (m - n)(b + m) z / ((c + m)(m + 1))
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0; m < n; ++m) {
        if (c + m == 0.0)
            throw DomainError("hypergeom_2f1_terminating: (c)_m vanishes (pole)");
        term *= (m - n) * (b + m) * z / ((c + m) * (m + 1));
        sum += term;
    }
    return sum;
}

double HypergeomTemplate::sigma() const
{
    if (N + 2.0 == 0.0)
        throw DomainError("HypergeomTemplate: N + 2 must be nonzero");
    return (2.0 * t + N + 3.0) / (N + 2.0);
}

double HypergeomTemplate::rho() const
{
    if (N + 2.0 == 0.0 || b == 0.0)
        throw DomainError("HypergeomTemplate: rho requires N + 2 != 0 and b != 0");
    return ((2.0 * t + 1.0) * b + 2.0 * a) / ((N + 2.0) * b);
}

double HypergeomTemplate::eigen_w(int n) const
{
    return b * (N + 2.0) * (N + 2.0) * n * (n + rho());
}

double template_solution(const HypergeomTemplate& tpl, int n, double z)
{
    if (n < 0)
        throw DomainError("template_solution: n must be >= 0");
    const double sigma = tpl.sigma();
    const double rho = tpl.rho();
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(tpl.N + 2.0, n) * pochhammer(sigma, n)
         * hypergeom_2f1_terminating(n, rho + n, sigma, tpl.b * std::pow(z, tpl.N + 2.0));
}

std::pair<RationalFn, RationalFn> template_aim_pair(const HypergeomTemplate& tpl)
{
    const int N = static_cast<int>(tpl.N);
    if (static_cast<double>(N) != tpl.N || N < 0)
        throw DomainError("template_aim_pair: N must be a non-negative integer");

    const Polynomial z = Polynomial::monomial(1.0, 1);
    const Polynomial one_minus_bz = Polynomial{1.0} - Polynomial::monomial(tpl.b, N + 2);

    // 2 a z^{N+1}/(1 - b z^{N+2}) - 2 (t+1)/z
    RationalFn lambda0 = RationalFn::over(Polynomial::monomial(2.0 * tpl.a, N + 1), one_minus_bz, 1)
                       - RationalFn::over(Polynomial{2.0 * (tpl.t + 1.0)}, z, 1);
    RationalFn s0 = RationalFn::over(Polynomial::monomial(-tpl.w, N), one_minus_bz, 1);
    return {std::move(lambda0), std::move(s0)};
}

} // namespace diraim
