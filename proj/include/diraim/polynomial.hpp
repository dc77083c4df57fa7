#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace diraim {

/// Dense real polynomial, coefficients in ascending degree.
/// Canonical form: no trailing zero coefficients; the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    [[nodiscard]] static Polynomial constant(double c);
    [[nodiscard]] static Polynomial monomial(double c, int degree);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double coeff(int k) const noexcept;

    [[nodiscard]] double operator()(double z) const noexcept;
    [[nodiscard]] Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
    friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    [[nodiscard]] Polynomial pow(int e) const;

private:
    void trim() noexcept;
    std::vector<double> coeffs_;
};

} // namespace diraim
