#include <doctest.h>

#include <cmath>

#include "diraim/error.hpp"
#include "diraim/polynomial.hpp"
#include "diraim/rational.hpp"
#include "oracles.hpp"

using namespace diraim;

namespace {

Polynomial random_poly(std::mt19937_64& g, int degree)
{
    std::vector<double> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(oracle::uniform(g, -2.0, 2.0));
    return Polynomial(std::move(c));
}

const Polynomial z_base{0.0, 1.0};
const Polynomial one_minus_z{1.0, -1.0};

RationalFn random_rational(std::mt19937_64& g)
{
    RationalFn f = RationalFn::over(random_poly(g, oracle::uniform_int(g, 0, 3)), z_base, oracle::uniform_int(g, 0, 2));
    return f * RationalFn::over(Polynomial{1.0}, one_minus_z, oracle::uniform_int(g, 0, 2));
}

} // namespace

TEST_CASE("polynomial canonical form and degree")
{
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{1.0, 2.0, 0.0}.degree() == 1);
    CHECK((Polynomial{1.0, 1.0} - Polynomial{1.0, 1.0}).is_zero());
    const Polynomial p{1.0, -3.0, 2.0};
    CHECK((p * p).degree() == 4);
    CHECK(p.derivative() == Polynomial{-3.0, 4.0});
    CHECK(p(2.0) == doctest::Approx(3.0));
    CHECK(Polynomial::monomial(2.0, 3).coeff(3) == 2.0);
}

TEST_CASE("polynomial product rule on random samples")
{
    auto g = oracle::rng(3);
    for (int i = 0; i < 50; ++i) {
        const Polynomial a = random_poly(g, oracle::uniform_int(g, 0, 5));
        const Polynomial b = random_poly(g, oracle::uniform_int(g, 0, 5));
        const double x = oracle::uniform(g, -1.0, 1.0);
        CHECK((a * b)(x) == doctest::Approx(a(x) * b(x)).epsilon(1e-12));
        CHECK((a * b).derivative()(x) == doctest::Approx((a.derivative() * b + a * b.derivative())(x)).epsilon(1e-10));
    }
}

TEST_CASE("rational derivatives")
{
    const RationalFn inv_z = RationalFn::over(Polynomial{1.0}, z_base, 1);
    const RationalFn d = inv_z.derivative();
    for (double x : {0.3, 0.7, 2.0})
        CHECK(d(x) == doctest::Approx(-1.0 / (x * x)));

    const RationalFn ratio = RationalFn::over(Polynomial{0.0, 1.0}, one_minus_z, 1);
    for (double x : {0.2, 0.5, 0.9})
        CHECK(ratio.derivative()(x) == doctest::Approx(1.0 / ((1 - x) * (1 - x))));

    CHECK_THROWS_AS(inv_z(0.0), DomainError);
    CHECK(inv_z.has_pole_at(0.0));
}

TEST_CASE("rational derivative against finite differences")
{
    auto g = oracle::rng(5);
    for (int i = 0; i < 30; ++i) {
        const RationalFn f = random_rational(g);
        const RationalFn df = f.derivative();
        for (int k = 0; k < 10; ++k) {
            const double x = oracle::uniform(g, 0.2, 0.8);
            const double fd = oracle::d1_fine([&](double t) { return f(t); }, x, 1e-4);
            CHECK(df(x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("rational product rule and sums")
{
    auto g = oracle::rng(7);
    for (int i = 0; i < 30; ++i) {
        const RationalFn f = random_rational(g);
        const RationalFn h = random_rational(g);
        const double x = oracle::uniform(g, 0.15, 0.85);
        const double lhs = (f * h).derivative()(x);
        const double rhs = (f.derivative() * h + f * h.derivative())(x);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
        CHECK((f + h)(x) == doctest::Approx(f(x) + h(x)).epsilon(1e-12));
        CHECK((f - h)(x) == doctest::Approx(f(x) - h(x)).epsilon(1e-12).scale(1.0));
        CHECK((2.5 * f)(x) == doctest::Approx(2.5 * f(x)).epsilon(1e-14));
    }
}

TEST_CASE("denominators stay factored")
{
    const RationalFn a = RationalFn::over(Polynomial{1.0}, z_base, 2);
    const RationalFn b = RationalFn::over(Polynomial{1.0}, one_minus_z, 1);
    const RationalFn s = a + b;
    CHECK(s.factors().size() == 2);
    CHECK(s.denominator().degree() == 3);
    CHECK((a * b).factors().size() == 2);
}
