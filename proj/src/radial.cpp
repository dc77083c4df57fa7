#include "diraim/radial.hpp"

#include <cmath>

#include "diraim/error.hpp"
#include "diraim/hypergeom.hpp"

namespace diraim {

void validate(const RadialConfig& cfg)
{
    if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha))
        throw DomainError("alpha must be positive");
    if (!(cfg.M > 0.0) || !std::isfinite(cfg.M))
        throw DomainError("M must be positive");
    if (cfg.n < 0)
        throw DomainError("n must be >= 0");
    if (cfg.D < 3 || cfg.D > 5)
        throw DomainError("D must be 3, 4 or 5");
    if (!std::isfinite(cfg.V0) || !std::isfinite(cfg.V1) || !std::isfinite(cfg.C_s))
        throw DomainError("potential strengths must be finite");
}

RadialTerms substituted_terms(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs)
{
    const double a2 = cfg.alpha * cfg.alpha;
    const double g = cfg.coupling(E);
    RadialTerms t;
    t.E_prime = -(omega * coeffs.constant_part() + cfg.energy_term(E)) / a2;
    t.rho = (omega * coeffs.tanh_part() + cfg.V1 * g) / a2;
    t.nu_nu1 = (omega * coeffs.sech2_part() + cfg.V0 * g) / a2;
    t.eps_n = t.nu_nu1 / cfg.q.value();
    return t;
}

RadialShape substituted_params(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs)
{
    const RadialTerms t = substituted_terms(cfg, E, omega, coeffs);
    const double d2 = t.rho - t.E_prime;
    const double g2 = -t.rho - t.E_prime;
    if (!(d2 >= 0.0) || !(g2 >= 0.0))
        throw NotBoundError("not a bound state at this E");
    return {t.E_prime, t.rho, t.nu_nu1, 0.5 * std::sqrt(d2), 0.5 * std::sqrt(g2), t.eps_n};
}

double quantized_sum(double eps_n, int n)
{
    if (!(eps_n + 0.25 >= 0.0))
        throw DomainError("quantization domain: eps_n + 1/4 < 0");
    return std::sqrt(eps_n + 0.25) - n - 0.5;
}

double energy_residual(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs)
{
    const RadialTerms t = substituted_terms(cfg, E, omega, coeffs);
    const double s = quantized_sum(t.eps_n, cfg.n);
    if (s == 0.0)
        throw DomainError("quantization pole");
    const double a2 = cfg.alpha * cfg.alpha;
    return cfg.energy_term(E) - (a2 * (t.rho * t.rho / (4.0 * s * s) + s * s) - omega * coeffs.constant_part());
}

double eigenvalue_residual(const RadialShape& shape, int n)
{
    const double m = shape.delta + shape.gamma + n + 1.0;
    return m * m - m - shape.eps_n;
}

RadialShape quantized_shape(const RadialConfig& cfg, double E, double omega, const PekerisCoeffs& coeffs)
{
    const RadialTerms t = substituted_terms(cfg, E, omega, coeffs);
    const double s = quantized_sum(t.eps_n, cfg.n);
    if (s == 0.0)
        throw DomainError("quantization pole");
    const double split = t.rho / (2.0 * s);
    return {t.E_prime, t.rho, t.nu_nu1, 0.5 * (s + split), 0.5 * (s - split), t.eps_n};
}

double radial_wavefunction(const RadialShape& shape, const RadialConfig& cfg, int n, double r)
{
    if (!(shape.delta > 0.0) || !(shape.gamma > 0.0))
        throw DomainError("inadmissible shape: delta and gamma must be positive");
    if (!(r > 0.0))
        throw DomainError("radial_wavefunction: r must be positive");
    if (n < 0)
        throw DomainError("radial_wavefunction: n must be >= 0");
    const double t = tanh_q(cfg.q, cfg.alpha * r);
    const double z = 0.5 * (1.0 - t);
    const double one_minus_z = 0.5 * (1.0 + t);
    const double c = 2.0 * shape.delta + 1.0;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return std::pow(z, shape.delta) * std::pow(one_minus_z, shape.gamma) * sign * pochhammer(c, n)
         * hypergeom_2f1_terminating(n, 2.0 * (shape.delta + shape.gamma) + n + 1.0, c, z);
}

std::pair<RationalFn, RationalFn> radial_aim_pair(double delta, double gamma, double eps)
{
    const Polynomial zz{0.0, 1.0, -1.0};
    const double sum = delta + gamma;
    RationalFn lambda0 = RationalFn::over(Polynomial{-(2.0 * delta + 1.0), 2.0 * sum + 2.0}, zz, 1);
    RationalFn s0 = RationalFn::over(Polynomial{sum * (sum + 1.0) - eps}, zz, 1);
    return {std::move(lambda0), std::move(s0)};
}

} // namespace diraim
