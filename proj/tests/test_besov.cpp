#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/besov.hpp"
#include "dunkl/catalog.hpp"

#include <cmath>
#include <numbers>
#include <limits>
#include <random>

using namespace dunkl;

namespace {

TransformPtr line_plan()
{
    GridPtr const g = WeightedGrid::make(MultiplicitySetup::rank_one(0.5), 20.0, 4096);
    return make_transform(g, g);
}

const AdmissibleSequence& line_sequence()
{
    static const AdmissibleSequence seq = AdmissibleSequence::build(MultiplicitySetup::rank_one(0.5), 10);
    return seq;
}

}  // namespace

TEST_CASE("plateau shape")
{
    for (PlateauKind kind : {PlateauKind::mollifier, PlateauKind::logistic}) {
        CHECK(plateau(kind, 0.0) == 1.0);
        CHECK(plateau(kind, 1.0) == 1.0);
        CHECK(plateau(kind, -1.5) == plateau(kind, 1.5));
        CHECK(plateau(kind, 2.0) == 0.0);
        CHECK(plateau(kind, 7.0) == 0.0);
        // symmetric glue: h(1.5) = 1/2
        CHECK(plateau(kind, 1.5) == 0.5);
        double prev = 1.0;
        for (int i = 1; i < 1000; ++i) {
            double const v = plateau(kind, 1.0 + i / 1000.0);
            CHECK(v <= prev);
            CHECK(v >= 0.0);
            prev = v;
        }
    }
}

TEST_CASE("mollifier plateau against high-precision quadrature")
{
    // 1 - (integral_0^u rho) / (integral_0^1 rho), rho(v) = exp(-1/(1-(2v-1)^2)), from mpmath
    struct Case {
        double u, value;
    };
    for (Case c : {Case{0.01, 0.99999999999998195264}, Case{0.05, 0.99982721417019407523},
                   Case{0.1, 0.99320900047056537878}, Case{0.3, 0.81287223431123227475},
                   Case{0.7, 0.18712776568876772525}, Case{0.9, 0.0067909995294346212224},
                   Case{0.95, 0.00017278582980592476764}, Case{0.99, 1.8047359342928343763e-14}}) {
        CAPTURE(c.u);
        CHECK(plateau(PlateauKind::mollifier, 1.0 + c.u) == doctest::Approx(c.value).epsilon(1e-13));
    }
}

TEST_CASE("dyadic partition: telescoping sums, supports and non-neighbour products")
{
    const AdmissibleSequence& seq = line_sequence();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 11.0);
    for (int i = 0; i < 3000; ++i) {
        double const s = std::exp2(u(rng)) - 1.0;
        double sum = 0.0;
        for (int j = 0; j <= 10; ++j) {
            double const v = seq.psi(j, s);
            auto const [a, b] = seq.support(j);
            if (s < a || s > b) CHECK(v == 0.0);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            sum += v;
            for (int k = j + 2; k <= 10; ++k) CHECK(v * seq.psi(k, s) == 0.0);
        }
        CHECK(sum == doctest::Approx(plateau(PlateauKind::mollifier, std::ldexp(s, -10))).epsilon(1e-14));
        if (s <= 1024.0) CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("L1 norms of the space-side profiles match an independent quadrature")
{
    // scipy oracle with j_{1/2}(x) = sin x / x: Simpson in s (6001 nodes) and r (160001 nodes on [0, 400])
    const AdmissibleSequence& seq = line_sequence();
    std::vector<double> const& n = seq.phi_l1_norms();
    REQUIRE(n.size() == 11);
    CHECK(n[0] == doctest::Approx(3.918691904287365).epsilon(1e-5));
    CHECK(n[1] == doctest::Approx(5.705407787302943).epsilon(1e-5));
    for (int j = 2; j <= 10; ++j) CHECK(n[j] == n[1]);
    CHECK(seq.max_phi_l1() == n[1]);
    AdmissibleSequence const longer = seq.with_j_max(14);
    CHECK(longer.phi_l1_norms().size() == 15);
    CHECK(longer.phi_l1_norms()[14] == n[1]);
}

TEST_CASE("L1 norms in the plane match the same quadrature with scipy Bessel functions")
{
    // k = (1/4, 1/2): Hankel order 3/4 with the d_k-weighted radial measure
    AdmissibleSequence const seq = AdmissibleSequence::build(MultiplicitySetup::product({0.25, 0.5}), 4);
    CHECK(seq.phi_l1_norms()[0] == doctest::Approx(21.156027264980885).epsilon(1e-5));
    CHECK(seq.phi_l1_norms()[1] == doctest::Approx(30.96659867293346).epsilon(1e-5));
}

TEST_CASE("phi_1 profile integrates to psi_1(0) = 0 and phi_0 to 1")
{
    // the weighted integral of phi_j is c_k times F(phi_j)(0) = psi_j(0)
    const AdmissibleSequence& seq = line_sequence();
    RadialGrid const rg = make_radial_grid(400.0, 2.0, 800, 16);
    double i0 = 0.0, i1 = 0.0;
    for (std::size_t i = 0; i < rg.rule.size(); ++i) {
        i0 += rg.rule.weights[i] * seq.phi_profile(0, rg.rule.nodes[i]);
        i1 += rg.rule.weights[i] * seq.phi_profile(1, rg.rule.nodes[i]);
    }
    double const mass = radial_mass(seq.setup());
    CHECK(mass * i0 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::fabs(mass * i1) <= 1e-6);
}

TEST_CASE("reconstruction: exact for band-limited data, converging for the Gaussian")
{
    TransformPtr const plan = line_plan();
    const AdmissibleSequence& seq = line_sequence();
    CatalogSample const band = realize(catalog_entry("band_limited", plan->space_grid()->setup()), *plan);
    for (double p : {1.0, 1.5, 2.0}) CHECK(reconstruct(band.f, band.spectrum, seq, 4, p, *plan).error <= 1e-10);
    CatalogSample const g = realize(catalog_entry("gaussian", plan->space_grid()->setup()), *plan);
    double prev = INFINITY;
    for (int J : {0, 1, 2, 4, 8}) {
        double const e = reconstruct(g.f, g.spectrum, seq, J, 2.0, *plan).error;
        CHECK(e <= prev + 1e-14);
        prev = e;
    }
    CHECK(prev <= 1e-4);
}

TEST_CASE("seminorm is homogeneous and q = infinity is flagged")
{
    TransformPtr const plan = line_plan();
    const AdmissibleSequence& seq = line_sequence();
    CatalogSample const g = realize(catalog_entry("gaussian", plan->space_grid()->setup()), *plan);
    Spectrum twice = g.spectrum;
    twice.samples *= Complex(2.0);
    for (double q : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
        BesovParams const par{1.0, 2.0, q};
        SeminormResult const a = besov_seminorm(g.spectrum, seq, par, *plan);
        SeminormResult const b = besov_seminorm(twice, seq, par, *plan);
        CHECK(b.value == doctest::Approx(2.0 * a.value).epsilon(1e-12));
        CHECK(a.certified == !std::isinf(q));
        CHECK(a.block_norms.size() == 11);
    }
    // Gaussian oracle: block norms decay fast, so the result equals its partial sums
    SeminormResult const r = besov_seminorm(g.spectrum, seq, BesovParams{1.0, 2.0, 2.0}, *plan);
    CHECK(r.truncation_residual <= 1e-12);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS(BesovParams{0.0, 2.0, 2.0}.validate());
    CHECK_THROWS(BesovParams{1.0, 3.0, 2.0}.validate());
    CHECK_THROWS(BesovParams{1.0, 2.0, 0.5}.validate());
    CHECK_NOTHROW(BesovParams{1.0, 1.0, INFINITY}.validate());
    CHECK_THROWS(AdmissibleSequence::build(MultiplicitySetup::rank_one(0.5), 1));
}

TEST_CASE("block decomposition checks")
{
    TransformPtr const plan = line_plan();
    const AdmissibleSequence& seq = line_sequence();
    CatalogSample const g = realize(catalog_entry("gaussian", plan->space_grid()->setup()), *plan);
    BesovParams const par{1.0, 2.0, 2.0};
    BlockSequence blocks;
    for (int j = 0; j <= 6; ++j) blocks.blocks.push_back(dyadic_block_spectrum(g.spectrum, seq, j));
    DecompositionResult const d = decompose_verify(blocks, seq, par, *plan);
    CHECK(d.holds);
    CHECK(d.seminorm <= d.assembly_constant * d.block_star);
    for (std::size_t j = 0; j < d.coupling.size(); ++j)
        for (int i : d.coupling[j]) CHECK(std::abs(i - static_cast<int>(j)) <= 1);

    // a block placed in the wrong annulus is rejected
    BlockSequence bad;
    bad.blocks.push_back(dyadic_block_spectrum(g.spectrum, seq, 0));
    bad.blocks.push_back(dyadic_block_spectrum(g.spectrum, seq, 0));
    CHECK_THROWS_AS(decompose_verify(bad, seq, par, *plan), std::invalid_argument);
}

TEST_CASE("compact spectrum equivalence")
{
    TransformPtr const plan = line_plan();
    const AdmissibleSequence& seq = line_sequence();
    CatalogSample const band = realize(catalog_entry("band_limited", plan->space_grid()->setup()), *plan);
    BesovParams const par{1.0, 2.0, 2.0};
    EquivalenceResult const e = compact_spectrum_equivalence(band.spectrum, 2.0, 8.0, seq, par, *plan);
    CHECK(e.ratio_high <= e.bound_high);
    CHECK(e.ratio_low <= e.bound_low);
    CHECK(e.index_set == std::vector<int>{1, 2, 3});
    CHECK_THROWS(compact_spectrum_equivalence(band.spectrum, 0.0, 8.0, seq, par, *plan));
    CHECK_THROWS(compact_spectrum_equivalence(band.spectrum, 3.0, 8.0, seq, par, *plan));
}

TEST_CASE("continuous characterizations")
{
    SpaceProfile const zm = gaussian_derivative_profile(0.5);
    CHECK(std::fabs(zero_mean_integral(zm, 0.5)) <= 1e-10);
    CHECK(zm.spectrum(0.0) == 0.0);
    SpaceProfile const an = annular_profile();
    CHECK(an.spectrum(0.99) == 0.0);
    CHECK(an.spectrum(2.01) == 0.0);
    CHECK(an.spectrum(1.5) > 0.0);

    // the Gaussian-derivative profile is a transform pair
    TransformPtr const plan = line_plan();
    SampledFunction const phi = SampledFunction::sample(
        plan->space_grid(), [&](std::span<const double> x) { return Complex(zm.space(std::fabs(x[0]))); });
    Spectrum const F = plan->transform(phi);
    double err = 0.0;
    for (std::size_t i = 0; i < F.values().size(); ++i)
        err = std::max(err, std::abs(F.values()[i] - zm.spectrum(F.grid()->norm(i))));
    CHECK(err <= 1e-12);

    // integrand t^beta / t^beta = 1 integrates to (log range)^(1/q)
    std::vector<double> const t = log_uniform_t(4, 16);
    CHECK(t.size() == 129);
    std::vector<double> vals(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) vals[i] = std::pow(t[i], 1.5);
    LogIntegral const li = integrate_log_uniform(t, vals, 1.5, 2.0, 16);
    CHECK(li.value == doctest::Approx(std::sqrt(8.0 * std::numbers::ln2)).epsilon(1e-12));
    CHECK(integrate_log_uniform(t, vals, 1.5, INFINITY, 16).value == doctest::Approx(1.0));
}
