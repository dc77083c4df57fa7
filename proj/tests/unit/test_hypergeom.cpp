#include <doctest.h>

#include <cmath>

#include "diraim/error.hpp"
#include "diraim/hypergeom.hpp"
#include "oracles.hpp"

using namespace diraim;

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 3) == 60.0);
    CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("small cases")
{
    CHECK(hypergeom_2f1_terminating(0, 4.0, 2.5, 0.9) == 1.0);
    CHECK(hypergeom_2f1_terminating(1, 2.0, 3.0, 0.5) == doctest::Approx(2.0 / 3.0));
    const auto exact = oracle::hypergeom_exact(2, 5, 2, oracle::Rational(3, 10));
    CHECK(hypergeom_2f1_terminating(2, 5.0, 2.0, 0.3) == doctest::Approx(exact.value.convert_to<double>()).epsilon(1e-15));
    CHECK_THROWS_AS(hypergeom_2f1_terminating(3, 1.0, -1.0, 0.2), DomainError);
    CHECK_NOTHROW(hypergeom_2f1_terminating(1, 1.0, -1.0, 0.2)); // (c)_1 = -1 is fine
}

TEST_CASE("series has exactly n + 1 terms")
{
    // (-n)_{n+1} = 0: the exact sum to n + 3 terms equals the n + 1 term sum
    for (int n = 0; n <= 6; ++n) {
        oracle::Rational extra = oracle::pochhammer(oracle::Rational(-n), n + 1);
        CHECK(extra == 0);
    }
}

TEST_CASE("random tuples against exact fractions")
{
    auto g = oracle::rng(2024);
    for (int i = 0; i < 300; ++i) {
        const int n = oracle::uniform_int(g, 0, 8);
        const oracle::Rational b(oracle::uniform_int(g, -40, 40), 8);
        oracle::Rational c(oracle::uniform_int(g, 1, 60), 8);
        const oracle::Rational z(oracle::uniform_int(g, -16, 16), 16);
        const auto exact = oracle::hypergeom_exact(n, b, c, z);
        const double got = hypergeom_2f1_terminating(n, b.convert_to<double>(), c.convert_to<double>(), z.convert_to<double>());
        CHECK(std::abs(got - exact.value.convert_to<double>()) <= 1e-12 * exact.abs_terms.convert_to<double>());
    }
}
