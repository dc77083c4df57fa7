#include "diraim/qdeform.hpp"

#include <cmath>
#include <string>

#include "diraim/error.hpp"

namespace diraim {

Deformation::Deformation(double q) : q_(q), sqrt_q_(0.0)
{
    if (!std::isfinite(q) || q <= 0.0)
        throw DomainError("deformation parameter q must be finite and > 0, got " + std::to_string(q));
    sqrt_q_ = std::sqrt(q);
}

double deformed_hyperbolic(HyperbolicKind kind, Deformation q, double x)
{
    if (!std::isfinite(x))
        throw DomainError("deformed_hyperbolic: non-finite argument");

    const double ep = std::exp(x);
    const double em = q.value() * std::exp(-x);
    switch (kind) {
    case HyperbolicKind::sinh:
        return 0.5 * (ep - em);
    case HyperbolicKind::cosh:
        return 0.5 * (ep + em);
    case HyperbolicKind::tanh:
        // (1 - q e^-2x)/(1 + q e^-2x), written to stay finite for large |x|
        if (x >= 0.0) {
            const double w = q.value() * std::exp(-2.0 * x);
            return (1.0 - w) / (1.0 + w);
        } else {
            const double w = std::exp(2.0 * x) / q.value();
            return (w - 1.0) / (w + 1.0);
        }
    case HyperbolicKind::sech:
        return 2.0 / (ep + em);
    }
    throw DomainError("deformed_hyperbolic: unknown kind");
}

double deformed_trig(TrigKind kind, Deformation q, double theta)
{
    if (!std::isfinite(theta))
        throw DomainError("deformed_trig: non-finite argument");

    switch (kind) {
    case TrigKind::sin:
        return q.sqrt() * std::sin(theta);
    case TrigKind::cos:
        return q.sqrt() * std::cos(theta);
    case TrigKind::tan:
        return std::tan(theta);
    case TrigKind::sec:
        return 1.0 / (q.sqrt() * std::cos(theta));
    }
    throw DomainError("deformed_trig: unknown kind");
}

double deformation_shift(Deformation q, double alpha)
{
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw DomainError("deformation_shift: alpha must be > 0");
    return std::log(q.sqrt()) / alpha;
}

} // namespace diraim
