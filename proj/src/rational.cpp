#include "diraim/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "diraim/error.hpp"

namespace diraim {

namespace {

int find_base(const std::vector<PoleFactor>& den, const Polynomial& base)
{
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i].base == base)
            return static_cast<int>(i);
    return -1;
}

std::vector<PoleFactor> union_of(const std::vector<PoleFactor>& a, const std::vector<PoleFactor>& b,
                                 bool add_powers)
{
    std::vector<PoleFactor> out = a;
    for (const auto& f : b) {
        const int i = find_base(out, f.base);
        if (i < 0)
            out.push_back(f);
        else if (add_powers)
            out[static_cast<std::size_t>(i)].power += f.power;
        else
            out[static_cast<std::size_t>(i)].power = std::max(out[static_cast<std::size_t>(i)].power, f.power);
    }
    return out;
}

} // namespace

RationalFn::RationalFn(Polynomial num) : num_(std::move(num)) {}

RationalFn::RationalFn(Polynomial num, std::vector<PoleFactor> den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

RationalFn RationalFn::over(Polynomial num, Polynomial base, int power)
{
    return RationalFn(std::move(num), {PoleFactor{std::move(base), power}});
}

void RationalFn::normalize()
{
    std::vector<PoleFactor> merged;
    for (auto& f : den_) {
        if (f.power < 0)
            throw std::invalid_argument("RationalFn: negative denominator power");
        if (f.base.is_zero())
            throw DomainError("RationalFn: zero denominator");
        if (f.power == 0)
            continue;
        if (f.base.degree() == 0) {
            // constant factor folds into the numerator
            num_ *= 1.0 / Polynomial(f.base).pow(f.power).coeff(0);
            continue;
        }
        const int i = find_base(merged, f.base);
        if (i < 0)
            merged.push_back(std::move(f));
        else
            merged[static_cast<std::size_t>(i)].power += f.power;
    }
    den_ = std::move(merged);
}

Polynomial RationalFn::denominator() const
{
    Polynomial d{1.0};
    for (const auto& f : den_)
        d = d * f.base.pow(f.power);
    return d;
}

bool RationalFn::has_pole_at(double z) const noexcept
{
    return std::any_of(den_.begin(), den_.end(), [z](const PoleFactor& f) { return f.base(z) == 0.0; });
}

double RationalFn::operator()(double z) const
{
    double d = 1.0;
    for (const auto& f : den_) {
        const double b = f.base(z);
        if (b == 0.0)
            throw DomainError("RationalFn: evaluation at a pole");
        for (int k = 0; k < f.power; ++k)
            d *= b;
    }
    return num_(z) / d;
}

Polynomial RationalFn::numerator_over(const std::vector<PoleFactor>& target) const
{
    Polynomial n = num_;
    for (const auto& t : target) {
        const int i = find_base(den_, t.base);
        const int have = i < 0 ? 0 : den_[static_cast<std::size_t>(i)].power;
        if (t.power < have)
            throw std::logic_error("RationalFn: target denominator does not dominate");
        if (t.power > have)
            n = n * t.base.pow(t.power - have);
    }
    return n;
}

RationalFn operator+(const RationalFn& lhs, const RationalFn& rhs)
{
    auto den = union_of(lhs.den_, rhs.den_, false);
    Polynomial n = lhs.numerator_over(den) + rhs.numerator_over(den);
    return RationalFn(std::move(n), std::move(den));
}

RationalFn operator-(const RationalFn& lhs, const RationalFn& rhs)
{
    auto den = union_of(lhs.den_, rhs.den_, false);
    Polynomial n = lhs.numerator_over(den) - rhs.numerator_over(den);
    return RationalFn(std::move(n), std::move(den));
}

RationalFn operator*(const RationalFn& lhs, const RationalFn& rhs)
{
    return RationalFn(lhs.num_ * rhs.num_, union_of(lhs.den_, rhs.den_, true));
}

RationalFn operator*(double s, RationalFn f)
{
    f.num_ *= s;
    return f;
}

RationalFn RationalFn::derivative() const
{
    // (N / prod b_j^e_j)' = (N' prod b_j - N sum_j e_j b_j' prod_{i!=j} b_i) / prod b_j^(e_j+1)
    Polynomial all{1.0};
    for (const auto& f : den_)
        all = all * f.base;

    Polynomial n = num_.derivative() * all;
    for (std::size_t j = 0; j < den_.size(); ++j) {
        Polynomial others{1.0};
        for (std::size_t i = 0; i < den_.size(); ++i)
            if (i != j)
                others = others * den_[i].base;
        n -= static_cast<double>(den_[j].power) * (num_ * den_[j].base.derivative() * others);
    }

    auto den = den_;
    for (auto& f : den)
        f.power += 1;
    return RationalFn(std::move(n), std::move(den));
}

} // namespace diraim
