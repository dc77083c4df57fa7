#pragma once

// q-deformed hyperbolic and trigonometric functions.
//
//   sinh_q x = (e^x - q e^-x)/2        cosh_q x = (e^x + q e^-x)/2
//   sin_q t  = sqrt(q) sin t           cos_q t  = sqrt(q) cos t
//
// so that cosh_q^2 - sinh_q^2 = q and sin_q^2 + cos_q^2 = q.

namespace diraim {

/// Deformation parameter q > 0.
class Deformation {
public:
    explicit Deformation(double q);
    [[nodiscard]] double value() const noexcept { return q_; }
    [[nodiscard]] double sqrt() const noexcept { return sqrt_q_; }

private:
    double q_;
    double sqrt_q_;
};

enum class HyperbolicKind { sinh, cosh, tanh, sech };
enum class TrigKind { sin, cos, tan, sec };

[[nodiscard]] double deformed_hyperbolic(HyperbolicKind kind, Deformation q, double x);
[[nodiscard]] double deformed_trig(TrigKind kind, Deformation q, double theta);

[[nodiscard]] inline double sinh_q(Deformation q, double x) { return deformed_hyperbolic(HyperbolicKind::sinh, q, x); }
[[nodiscard]] inline double cosh_q(Deformation q, double x) { return deformed_hyperbolic(HyperbolicKind::cosh, q, x); }
[[nodiscard]] inline double tanh_q(Deformation q, double x) { return deformed_hyperbolic(HyperbolicKind::tanh, q, x); }
[[nodiscard]] inline double sech_q(Deformation q, double x) { return deformed_hyperbolic(HyperbolicKind::sech, q, x); }

/// Spatial shift dr = ln(sqrt q)/alpha mapping deformed onto non-deformed functions:
/// sinh_q(alpha (r + dr)) = sqrt(q) sinh(alpha r), likewise for cosh.
[[nodiscard]] double deformation_shift(Deformation q, double alpha);

} // namespace diraim
