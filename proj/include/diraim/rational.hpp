#pragma once

#include <vector>

#include "diraim/polynomial.hpp"

namespace diraim {

/// One factor base^power of a factored denominator.
struct PoleFactor {
    Polynomial base;
    int power = 1;
};

/// num / prod(base_j^power_j).
///
/// Denominators are kept factored over a small set of bases (z and 1 - z for every
/// problem solved here) so sums and derivatives only ever raise powers; no
/// polynomial GCD is taken. Bases are matched by exact coefficient equality.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(Polynomial num); // NOLINT(google-explicit-constructor): polynomials are rational functions
    RationalFn(Polynomial num, std::vector<PoleFactor> den);

    /// num / base^power
    [[nodiscard]] static RationalFn over(Polynomial num, Polynomial base, int power);

    [[nodiscard]] const Polynomial& numerator() const noexcept { return num_; }
    [[nodiscard]] const std::vector<PoleFactor>& factors() const noexcept { return den_; }
    /// The denominator multiplied out.
    [[nodiscard]] Polynomial denominator() const;

    /// Throws DomainError when z is a root of a denominator factor.
    [[nodiscard]] double operator()(double z) const;
    [[nodiscard]] bool has_pole_at(double z) const noexcept;

    [[nodiscard]] RationalFn derivative() const;

    friend RationalFn operator+(const RationalFn& lhs, const RationalFn& rhs);
    friend RationalFn operator-(const RationalFn& lhs, const RationalFn& rhs);
    friend RationalFn operator*(const RationalFn& lhs, const RationalFn& rhs);
    friend RationalFn operator*(double s, RationalFn f);

private:
    void normalize();
    /// Re-express over the given factor list (must dominate this one's powers).
    [[nodiscard]] Polynomial numerator_over(const std::vector<PoleFactor>& target) const;

    Polynomial num_;
    std::vector<PoleFactor> den_;
};

} // namespace diraim
