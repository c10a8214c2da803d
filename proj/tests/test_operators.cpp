#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/catalog.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/special.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace dunkl;

namespace {

TransformPtr line_plan(double alpha, double radius = 16.0, int n = 2048)
{
    GridPtr const g = WeightedGrid::make(MultiplicitySetup::rank_one(alpha), radius, n);
    return make_transform(g, g);
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("translation is symmetric in its two arguments on grid nodes")
{
    TransformPtr const plan = line_plan(0.5);
    WeightedGrid const& g = *plan->space_grid();
    CatalogSample const s = realize(catalog_entry("shifted_gaussian", g.setup()), *plan);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    int tested = 0;
    while (tested < 12) {
        std::size_t const ix = pick(rng), iy = pick(rng);
        double const x = g.coordinate(ix, 0), y = g.coordinate(iy, 0);
        if (std::fabs(x) > 4.0 || std::fabs(y) > 4.0) continue;
        std::vector<double> const vx{x}, vy{y};
        Complex const a = translate(s.spectrum, vx, *plan).values()[iy];
        Complex const b = translate(s.spectrum, vy, *plan).values()[ix];
        CAPTURE(x);
        CAPTURE(y);
        CHECK(std::abs(a - b) <= 1e-8);
        ++tested;
    }
}

TEST_CASE("translation by zero is the identity and the multiplier is bounded")
{
    TransformPtr const plan = line_plan(-0.25);
    CatalogSample const s = realize(catalog_entry("oscillatory", plan->space_grid()->setup()), *plan);
    std::vector<double> const zero{0.0};
    CHECK(max_diff(translate(s.spectrum, zero, *plan).values(), s.f.values()) <= 1e-11);
    std::vector<double> const x0{2.5};
    for (Complex m : translation_multiplier(x0, *plan->frequency_grid())) CHECK(std::abs(m) <= 1.0 + 1e-12);
}

TEST_CASE("symmetric difference has spectrum 2 (j_alpha(t xi) - 1) F f")
{
    for (double alpha : {-0.25, 0.5}) {
        TransformPtr const plan = line_plan(alpha);
        CatalogSample const s = realize(catalog_entry("shifted_gaussian", plan->space_grid()->setup()), *plan);
        for (double t : {0.25, 1.0, 3.0}) {
            std::vector<double> const tp{t}, tm{-t};
            SampledFunction const diff =
                translate(s.spectrum, tp, *plan) + translate(s.spectrum, tm, *plan) - Complex(2.0) * s.f;
            Spectrum const lhs = plan->transform(diff);
            WeightedGrid const& freq = *plan->frequency_grid();
            std::vector<Complex> rhs(freq.size());
            for (std::size_t i = 0; i < rhs.size(); ++i)
                rhs[i] = -2.0 * bessel_gap(alpha, t * freq.coordinate(i, 0)) * s.spectrum.values()[i];
            CAPTURE(t);
            CHECK(max_diff(lhs.values(), rhs) <= 1e-10);
        }
    }
}

TEST_CASE("spectral and direct convolution agree")
{
    // small grids: the direct form costs one translate per output node
    for (double alpha : {0.5, 1.5}) {
        GridPtr const g = WeightedGrid::make(MultiplicitySetup::rank_one(alpha), 12.0, 512);
        TransformPtr const plan = make_transform(g, g);
        SampledFunction const f = SampledFunction::sample(
            g, [](std::span<const double> x) { return Complex(std::exp(-0.5 * (x[0] - 1.0) * (x[0] - 1.0))); });
        SampledFunction const h = SampledFunction::sample(
            g, [](std::span<const double> x) { return Complex(std::exp(-x[0] * x[0])); }, FunctionTag::even);
        CHECK(max_diff(convolve(f, h, *plan).values(), convolve_direct(f, h, *plan).values()) <= 1e-9);
    }
    MultiplicitySetup const s = MultiplicitySetup::product({0.25, 0.5});
    TransformPtr const plan = make_transform(WeightedGrid::make(s, 10.0, 64), WeightedGrid::make(s, 6.0, 64));
    SampledFunction const f = SampledFunction::sample_radial(plan->space_grid(), [](double r) { return std::exp(-0.5 * r * r); });
    SampledFunction const h = SampledFunction::sample_radial(plan->space_grid(), [](double r) { return std::exp(-r * r); });
    SampledFunction const a = convolve(f, h, *plan);
    SampledFunction const b = convolve_direct(f, h, *plan);
    double scale = 0.0;
    for (Complex v : a.values()) scale = std::max(scale, std::abs(v));
    CHECK(max_diff(a.values(), b.values()) <= 1e-6 * scale);
}

TEST_CASE("Young inequality on catalog pairs")
{
    TransformPtr const plan = line_plan(0.5, 20.0, 4096);
    MultiplicitySetup const& setup = plan->space_grid()->setup();
    std::vector<CatalogSample> all;
    for (const auto& name : catalog_names(1)) all.push_back(realize(catalog_entry(name, setup), *plan));
    for (const auto& f : all)
        for (const auto& g : all) {
            if (g.entry.tag != FunctionTag::even) continue;
            SampledFunction const c = convolve(f.spectrum, g.spectrum, *plan);
            for (double p : {1.0, 1.25, 1.5, 2.0}) {
                CAPTURE(f.entry.name);
                CAPTURE(g.entry.name);
                CAPTURE(p);
                CHECK(lp_norm(c, p) <= lp_norm(f.f, p) * lp_norm(g.f, 1.0) * (1.0 + 1e-9) + 1e-12);
            }
        }
}

TEST_CASE("moduli of continuity: zero at t = 0, bounded, nondecreasing to the first local max")
{
    TransformPtr const plan = line_plan(0.5, 20.0, 4096);
    std::vector<double> ts{0.0};
    for (int m = -24; m <= 8; ++m) ts.push_back(std::ldexp(1.0, m / 4) * std::pow(2.0, (m % 4) / 4.0));
    std::vector<double> const ps{1.0, 1.5, 2.0};
    for (const std::string name : {"gaussian", "smooth_bump", "oscillatory", "shifted_gaussian"}) {
        CatalogSample const s = realize(catalog_entry(name, plan->space_grid()->setup()), *plan);
        for (const auto& c : modulus_1d(s.spectrum, *plan, ps, ts)) {
            CAPTURE(name);
            CAPTURE(c.p);
            CHECK(c.omega_values[0] <= 1e-12);
            std::size_t i = 1;
            while (i + 1 < c.omega_values.size() && c.omega_values[i + 1] >= c.omega_values[i]) ++i;
            for (std::size_t m = 1; m < i; ++m) CHECK(c.omega_values[m] <= c.omega_values[m + 1] * (1.0 + 1e-9) + 1e-13);
            double const bound = 4.0 * lp_norm(s.f, c.p);
            for (double w : c.omega_values) CHECK(w <= bound);
        }
    }
}

TEST_CASE("Dunkl operator T_1 on Hermite functions")
{
    double const alpha = 0.5;
    GridPtr const g = WeightedGrid::make(MultiplicitySetup::rank_one(alpha), 10.0, 1024);
    auto gauss = [](double x) { return std::exp(-0.5 * x * x); };
    SampledFunction const even = SampledFunction::sample(g, [&](std::span<const double> x) { return Complex(gauss(x[0])); });
    SampledFunction const odd =
        SampledFunction::sample(g, [&](std::span<const double> x) { return Complex(x[0] * gauss(x[0])); });
    SampledFunction const te = dunkl_operator_t1(even);
    SampledFunction const to = dunkl_operator_t1(odd);
    double err_e = 0.0, err_o = 0.0;
    for (std::size_t i = 0; i < g->size(); ++i) {
        double const x = g->coordinate(i, 0);
        err_e = std::max(err_e, std::abs(te.values()[i] - Complex(-x * gauss(x))));
        err_o = std::max(err_o, std::abs(to.values()[i] - Complex((2.0 * alpha + 2.0 - x * x) * gauss(x))));
    }
    CHECK(err_e <= 1e-8);
    CHECK(err_o <= 1e-8);
}

TEST_CASE("sphere-averaged modulus of a radial function")
{
    MultiplicitySetup const s = MultiplicitySetup::product({0.25, 0.5});
    TransformPtr const plan = make_transform(WeightedGrid::make(s, 16.0, 128), WeightedGrid::make(s, 8.0, 128));
    CatalogSample const g = realize(catalog_entry("gaussian", s), *plan);
    std::vector<double> const ps{1.0, 2.0};
    std::vector<double> const ts{0.0, 0.125, 0.25, 0.5, 1.0};
    for (const auto& c : modulus_radial(g.spectrum, *plan, ps, ts)) {
        CHECK(c.omega_values[0] <= 1e-12);
        for (std::size_t i = 1; i + 1 < c.omega_values.size(); ++i) CHECK(c.omega_values[i] <= c.omega_values[i + 1]);
        // first-order differences of a smooth function: omega ~ t at small t
        CHECK(c.omega_values[2] / c.omega_values[1] == doctest::Approx(2.0).epsilon(0.05));
        // radial f: tau_{tu} contracts, and the circle has length 2 pi
        for (double w : c.omega_values) CHECK(w <= 4.0 * std::numbers::pi * lp_norm(g.f, c.p));
    }
    CHECK_THROWS(modulus_radial(g.spectrum, *plan, ps, ts, 30));
}
