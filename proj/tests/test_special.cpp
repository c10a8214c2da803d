#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/quadrature.hpp"
#include "dunkl/special.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace dunkl;

namespace {

struct BesselCase {
    double nu, s, value;
};

// Gamma(nu+1) (2/s)^nu J_nu(s) from mpmath at 40 digits.
constexpr BesselCase kBessel[] = {
    {-0.25, 0.001, 0.99999966666669047619},   {-0.25, 0.5, 0.91814353530530294134},
    {-0.25, 3, -0.52551579594109596007},      {-0.25, 12.5, 0.39041213942757887422},
    {-0.25, 40, -0.10749587455286090437},     {-0.25, 150, 0.08736473772470411102},
    {0, 0.001, 0.999999750000015625},         {0, 0.5, 0.93846980724081290423},
    {0, 3, -0.26005195490193343762},          {0, 12.5, 0.14688405470042110231},
    {0, 40, 0.0073668905842372895535},        {0, 150, -0.00077409037539429124695},
    {0.5, 0.001, 0.99999983333334166667},     {0.5, 0.5, 0.95885107720840600055},
    {0.5, 3, 0.047040002686622407367},        {0.5, 12.5, -0.0053057517880960551144},
    {0.5, 40, 0.018627829011983719675},       {0.5, 150, -0.0047658428641944308762},
    {1.25, 0.001, 0.99999988888889316239},    {1.25, 0.5, 0.97248801084381629989},
    {1.25, 3, 0.29116501706348828993},        {1.25, 12.5, -0.024091151128307866682},
    {1.25, 40, 0.0030702250829048693268},     {1.25, 150, -0.00030811201438777401918},
    {3.5, 0.001, 0.99999994444444570707},     {3.5, 0.5, 0.98618977284874813953},
    {3.5, 3, 0.5913120190076294649},          {3.5, 12.5, 0.0040140863204600784116},
    {3.5, 40, -0.000031675458916958836066},   {3.5, 150, 1.5086327806265264273e-7},
};

}  // namespace

TEST_CASE("normalized Bessel function against high-precision values")
{
    for (const auto& c : kBessel) {
        CAPTURE(c.nu);
        CAPTURE(c.s);
        CHECK(std::fabs(bessel_normalized(c.nu, c.s) - c.value) <= 1e-13);
    }
}

TEST_CASE("closed forms at half-integer orders")
{
    for (double s : {0.01, 0.7, 2.0, 9.0, 33.0, 120.0, 700.0}) {
        CHECK(std::fabs(bessel_normalized(-0.5, s) - std::cos(s)) <= 1e-13);
        CHECK(std::fabs(bessel_normalized(0.5, s) - std::sin(s) / s) <= 1e-13);
        double const j32 = 3.0 * (std::sin(s) - s * std::cos(s)) / (s * s * s);
        CHECK(std::fabs(bessel_normalized(1.5, s) - j32) <= 1e-12);
    }
}

TEST_CASE("series and asymptotic branches agree at the switchover")
{
    for (double nu : {-0.25, 0.0, 0.5, 1.25, 3.5}) {
        double const s = bessel_switchover(nu);
        for (double x : {0.999 * s, s, 1.001 * s})
            CHECK(std::fabs(detail::bessel_series(nu, x) - detail::bessel_asymptotic(nu, x)) <= 1e-13);
    }
}

TEST_CASE("gap 1 - j_nu without cancellation")
{
    // mpmath values of 1 - j_nu(s)
    CHECK(bessel_gap(-0.25, 1e-6) == doctest::Approx(3.3333333333330952381e-13).epsilon(1e-12));
    CHECK(bessel_gap(-0.25, 1e-3) == doctest::Approx(3.3333330952381024531e-7).epsilon(1e-12));
    CHECK(bessel_gap(-0.25, 0.1) == doctest::Approx(0.0033309531023328649898).epsilon(1e-12));
    CHECK(bessel_gap(0.5, 1e-6) == doctest::Approx(1.6666666666665833333e-13).epsilon(1e-12));
    CHECK(bessel_gap(0.5, 1e-3) == doctest::Approx(1.6666665833333353175e-7).epsilon(1e-12));
    CHECK(bessel_gap(0.5, 0.1) == doctest::Approx(0.0016658335317184769319).epsilon(1e-12));
}

TEST_CASE("gap ratio limit and bounds")
{
    for (double nu : {-0.25, 0.5, 1.5}) {
        CHECK(bessel_gap_ratio_limit(nu) == doctest::Approx(1.0 / (4.0 * (nu + 1.0))));
        CHECK(bessel_gap_ratio(nu, 1e-4) == doctest::Approx(bessel_gap_ratio_limit(nu)).epsilon(1e-6));
        for (double s : {1e-3, 0.3, 1.0, 4.0, 50.0, 1e3}) CHECK(bessel_gap_ratio(nu, s) > 0.0);
    }
    CHECK_THROWS_AS(bessel_gap_ratio(-0.5, 1.0), std::invalid_argument);
}

TEST_CASE("Dunkl kernel is bounded by one and reduces to the exponential at alpha = -1/2")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int i = 0; i < 2000; ++i) {
        double const t = u(rng), x = u(rng);
        for (double alpha : {-0.25, 0.5, 2.0}) CHECK(std::abs(dunkl_kernel_1d(alpha, t, x)) <= 1.0 + 1e-12);
        KernelValue const e = dunkl_kernel_1d(-0.5, t, x);
        CHECK(std::abs(e - std::polar(1.0, t * x)) <= 1e-12);
    }
}

TEST_CASE("product kernel factorizes over axes")
{
    MultiplicitySetup const setup = MultiplicitySetup::product({0.25, 0.5});
    std::vector<double> const y{1.3, -0.4}, x{-2.1, 3.7};
    KernelValue const expected = dunkl_kernel_1d(-0.25, y[0], x[0]) * dunkl_kernel_1d(0.0, y[1], x[1]);
    CHECK(std::abs(dunkl_kernel_product(setup, y, x) - expected) <= 1e-15);
    std::vector<double> const bad{1.0};
    CHECK_THROWS_AS(dunkl_kernel_product(setup, bad, x), std::invalid_argument);
}

TEST_CASE("gamma function domain")
{
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("Gauss-Jacobi rule against scipy roots_jacobi(5, 0.3, -0.4)")
{
    quad::Rule const r = quad::gauss_jacobi(5, 0.3, -0.4);
    constexpr double nodes[] = {-0.9489133018072307, -0.6259991098687591, -0.10108066875618935, 0.4563169425961137,
                                0.8661407843007117};
    constexpr double weights[] = {0.7215329936728113, 0.7686825842286658, 0.6147511733254278, 0.36651830154808773,
                                  0.12167125909610202};
    REQUIRE(r.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(r.nodes[i] == doctest::Approx(nodes[i]).epsilon(1e-13));
        CHECK(r.weights[i] == doctest::Approx(weights[i]).epsilon(1e-13));
    }
}

TEST_CASE("Gauss-Legendre is exact through degree 2m - 1")
{
    quad::Rule const r = quad::gauss_legendre(8);
    for (int deg = 0; deg <= 15; ++deg) {
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
        double const exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
        CHECK(std::fabs(sum - exact) <= 1e-14);
    }
}

TEST_CASE("half-line rule integrates x^power times polynomials")
{
    for (double power : {-0.5, 0.5, 2.0}) {
        quad::Rule const r = quad::half_line_rule(3.0, 6, 8, power);
        for (int deg = 0; deg <= 7; ++deg) {
            double sum = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
            double const exact = std::pow(3.0, deg + power + 1.0) / (deg + power + 1.0);
            CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("compensated sum keeps small terms")
{
    quad::CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(1e-17);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-10));
}
