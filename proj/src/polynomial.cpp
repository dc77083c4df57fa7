#include "diraim/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace diraim {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial{c}; }

Polynomial Polynomial::monomial(double c, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("Polynomial::monomial: negative degree");
    std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() noexcept
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

double Polynomial::coeff(int k) const noexcept
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double z) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double s)
{
    for (auto& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial result{1.0};
    for (int i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

} // namespace diraim
