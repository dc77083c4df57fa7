#include <doctest.h>

#include <cmath>

#include "diraim/error.hpp"
#include "diraim/pekeris.hpp"
#include "oracles.hpp"

using namespace diraim;

TEST_CASE("centrifugal strength")
{
    CHECK(centrifugal_omega(0.0, 3, 1.0).omega == 0.0);
    CHECK(centrifugal_omega(1.0, 3, 1.0).omega == doctest::Approx(2.0));
    CHECK(centrifugal_omega(1.0, 5, 0.1671).omega == doctest::Approx(6.0 / (0.1671 * 0.1671)));
    CHECK(centrifugal_omega(1.0, 5, 0.1671).omega == doctest::Approx(214.89).epsilon(1e-4));
    CHECK_THROWS_AS(centrifugal_omega(1.0, 3, 0.0), DomainError);
    double last = -1.0;
    for (double l = 0.0; l < 5.0; l += 0.25) {
        const double w = centrifugal_omega(l, 5, 0.3).omega;
        CHECK(w > last);
        last = w;
    }
}

TEST_CASE("matched coefficients against the closed forms")
{
    for (double q : {0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4}) {
        for (double re : {0.0333, 0.1671, 0.5, 2.0}) {
            const PekerisCoeffs c = pekeris_coeffs(Deformation(q), 0.5, re);
            const oracle::Coeffs o = oracle::pekeris_closed_form(q, 0.5, re);
            CHECK(c.c0 == doctest::Approx(o.c0).epsilon(1e-8));
            CHECK(c.c1 == doctest::Approx(o.c1).epsilon(1e-8));
            CHECK(c.c2 == doctest::Approx(o.c2).epsilon(1e-8));
        }
    }
}

TEST_CASE("golden coefficients at q = 1")
{
    const PekerisCoeffs c = pekeris_coeffs(Deformation(1.0), 0.5, 0.1671);
    CHECK(c.c0 == doctest::Approx(343.37656271).epsilon(1e-9));
    CHECK(c.c1 == doctest::Approx(1542.25447911).epsilon(1e-9));
    CHECK(c.c2 == doctest::Approx(1735.09585982).epsilon(1e-9));
    // the typeset c2 is the matched one at q = 1; the typeset c0 is not
    CHECK(pekeris_printed_c2(Deformation(1.0), 0.5, 0.1671) == doctest::Approx(c.c2).epsilon(1e-9));
    CHECK(pekeris_printed_c0(Deformation(1.0), 0.5, 0.1671) == doctest::Approx(-24.75960891).epsilon(1e-8));
}

TEST_CASE("value, slope and curvature match 1/r^2 at r_e")
{
    for (double q : {0.2, 1.0, 1.4}) {
        const double re = 0.1671;
        const PekerisCoeffs c = pekeris_coeffs(Deformation(q), 0.5, re);
        const auto g = [&](double r) { return pekeris_eval(c, r); };
        CHECK(g(re) == doctest::Approx(1.0 / (re * re)).epsilon(1e-12));
        const double h = 1e-3 * re;
        CHECK(oracle::d1_fine(g, re, h) == doctest::Approx(-2.0 / std::pow(re, 3)).epsilon(1e-8));
        CHECK(oracle::d2_fine(g, re, h) == doctest::Approx(6.0 / std::pow(re, 4)).epsilon(1e-6));
    }
}

TEST_CASE("approximation quality near r_e")
{
    const double re = 0.1671;
    const PekerisCoeffs c = pekeris_coeffs(Deformation(1.0), 0.5, re);
    double worst = 0.0;
    for (double r = 0.9 * re; r <= 1.1 * re; r += 0.002 * re)
        worst = std::max(worst, std::abs(pekeris_eval(c, r) * r * r - 1.0));
    CHECK(worst <= 0.05);
    // regression value at 1.1 r_e
    CHECK(std::abs(pekeris_eval(c, 1.1 * re) * 1.21 * re * re - 1.0) == doctest::Approx(8.2e-4).epsilon(0.1));
}

TEST_CASE("basis and decomposition")
{
    const Deformation q(0.6);
    CHECK(pekeris_basis(q, 0.5, 1.0) == doctest::Approx(-std::exp(-1.0) / (1.0 + 0.6 * std::exp(-1.0))));
    const PekerisCoeffs c = pekeris_coeffs(q, 0.5, 0.3);
    CHECK(c.constant_part() == doctest::Approx(c.c0 - c.c1 / (2 * q.sqrt()) + c.c2 / (2 * q.value())));
    CHECK(c.tanh_part() == doctest::Approx(c.c1 / (2 * q.sqrt()) - c.c2 / (2 * q.value())));
    CHECK(c.sech2_part() == doctest::Approx(c.c2 / 4));
    CHECK_THROWS_AS(pekeris_coeffs(q, 0.0, 0.3), DomainError);
    CHECK_THROWS_AS(pekeris_coeffs(q, 0.5, -1.0), DomainError);
}
