#include "dunkl/catalog.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kBandLow = 2.2;
constexpr double kBandHigh = 7.8;

double band_bump(double s)
{
    double const mid = 0.5 * (kBandLow + kBandHigh);
    double const half = 0.5 * (kBandHigh - kBandLow);
    return bump((std::fabs(s) - mid) / half);
}

double uniform(std::mt19937_64& rng)
{
    // 53 random bits; the distribution classes are not pinned across standard libraries
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

CatalogEntry radial_entry(std::string name, TestKind kind, RadialProfile profile, RadialProfile spectrum)
{
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.tag = FunctionTag::radial;
    e.radial = profile;
    e.space = [profile](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return Complex(profile(std::sqrt(r2)));
    };
    e.spectrum = [spectrum](std::span<const double> xi) {
        double r2 = 0.0;
        for (double v : xi) r2 += v * v;
        return Complex(spectrum(std::sqrt(r2)));
    };
    return e;
}

CatalogEntry entry_1d(const std::string& name, const MultiplicitySetup& setup, std::uint64_t seed)
{
    double const nu = setup.alpha();
    if (name == "gaussian") {
        CatalogEntry e = radial_entry(name, TestKind::gaussian, [](double r) { return std::exp(-0.5 * r * r); },
                                      [](double s) { return std::exp(-0.5 * s * s); });
        e.tag = FunctionTag::even;
        return e;
    }
    if (name == "laguerre") {
        CatalogEntry e = radial_entry(
            name, TestKind::gaussian, [nu](double r) { return (nu + 1.0 - r * r) * std::exp(-0.5 * r * r); },
            [nu](double s) { return -(nu + 1.0 - s * s) * std::exp(-0.5 * s * s); });
        e.tag = FunctionTag::even;
        return e;
    }
    if (name == "shifted_gaussian") {
        CatalogEntry e;
        e.name = name;
        e.kind = TestKind::gaussian;
        e.space = [](std::span<const double> x) { return Complex(std::exp(-0.5 * (x[0] - 1.0) * (x[0] - 1.0))); };
        return e;
    }
    if (name == "smooth_bump") {
        CatalogEntry e;
        e.name = name;
        e.kind = TestKind::smooth_bump;
        e.tag = FunctionTag::even;
        e.space = [](std::span<const double> x) { return Complex(bump(x[0] / 4.0)); };
        e.radial = [](double r) { return bump(r / 4.0); };
        return e;
    }
    if (name == "oscillatory") {
        CatalogEntry e;
        e.name = name;
        e.kind = TestKind::oscillatory;
        e.tag = FunctionTag::even;
        e.space = [](std::span<const double> x) { return Complex(std::cos(4.0 * x[0]) * std::exp(-0.5 * x[0] * x[0])); };
        e.radial = [](double r) { return std::cos(4.0 * r) * std::exp(-0.5 * r * r); };
        return e;
    }
    if (name == "band_limited") {
        CatalogEntry e;
        e.name = name;
        e.kind = TestKind::band_limited;
        e.tag = FunctionTag::even;
        e.spectrum = [](std::span<const double> xi) { return Complex(band_bump(xi[0])); };
        e.band = {{kBandLow, kBandHigh}};
        return e;
    }
    if (name == "random_band_limited") {
        // A(|xi|) + i sign(xi) B(|xi|) is the spectrum of a real function
        std::mt19937_64 rng(seed);
        std::vector<double> a(4), b(4);
        for (auto& v : a) v = 2.0 * uniform(rng) - 1.0;
        for (auto& v : b) v = 2.0 * uniform(rng) - 1.0;
        CatalogEntry e;
        e.name = name;
        e.kind = TestKind::band_limited;
        e.spectrum = [a, b](std::span<const double> xi) {
            double const s = std::fabs(xi[0]);
            double const u = (s - kBandLow) / (kBandHigh - kBandLow);
            double re = 0.0, im = 0.0;
            for (std::size_t m = 0; m < a.size(); ++m) {
                double const c = std::cos(std::numbers::pi * static_cast<double>(m + 1) * u);
                re += a[m] * c;
                im += b[m] * c;
            }
            double const env = band_bump(s);
            double const sign = xi[0] < 0.0 ? -1.0 : 1.0;
            return Complex(env * (1.0 + 0.5 * re), sign * env * 0.5 * im);
        };
        e.band = {{kBandLow, kBandHigh}};
        return e;
    }
    throw std::invalid_argument("catalog: unknown 1D function '" + name + "'");
}

CatalogEntry entry_radial(const std::string& name, const MultiplicitySetup& setup)
{
    double const nu = setup.bessel_order();
    if (name == "gaussian")
        return radial_entry(name, TestKind::gaussian, [](double r) { return std::exp(-0.5 * r * r); },
                            [](double s) { return std::exp(-0.5 * s * s); });
    if (name == "laguerre_gauss")
        return radial_entry(
            name, TestKind::gaussian, [nu](double r) { return (nu + 1.0 - r * r) * std::exp(-0.5 * r * r); },
            [nu](double s) { return -(nu + 1.0 - s * s) * std::exp(-0.5 * s * s); });
    if (name == "wide_gaussian") {
        // e^{-r^2/4} keeps both the space and the frequency tails below 1e-10 on the default radial grids
        double const scale = std::pow(2.0, 0.5 * setup.measure_degree());
        return radial_entry(name, TestKind::gaussian, [](double r) { return std::exp(-0.25 * r * r); },
                            [scale](double s) { return scale * std::exp(-s * s); });
    }
    throw std::invalid_argument("catalog: unknown radial function '" + name + "'");
}

}  // namespace

const char* to_string(TestKind kind)
{
    switch (kind) {
    case TestKind::gaussian: return "gaussian";
    case TestKind::smooth_bump: return "smooth_bump";
    case TestKind::band_limited: return "band_limited";
    case TestKind::oscillatory: return "oscillatory";
    case TestKind::ingested: return "ingested";
    }
    return "?";
}

double bump(double u)
{
    if (!(std::fabs(u) < 1.0)) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

std::vector<std::string> catalog_names(int dim)
{
    if (dim == 1)
        return {"gaussian", "shifted_gaussian", "smooth_bump", "band_limited", "oscillatory", "laguerre",
                "random_band_limited"};
    return {"gaussian", "laguerre_gauss", "wide_gaussian"};
}

CatalogEntry catalog_entry(const std::string& name, const MultiplicitySetup& setup, std::uint64_t seed)
{
    return setup.dim() == 1 ? entry_1d(name, setup, seed) : entry_radial(name, setup);
}

CatalogSample realize(const CatalogEntry& entry, const DunklTransform& plan)
{
    GridPtr const& space = plan.space_grid();
    GridPtr const& freq = plan.frequency_grid();
    if (!entry.space) {
        SampledFunction spec = SampledFunction::sample(freq, entry.spectrum, entry.tag);
        SampledFunction f = plan.invert_values(spec.values(), entry.tag);
        Spectrum exact{std::move(spec), "exact:" + entry.name};
        // the decay check of the sampled space side still applies
        Spectrum const computed = plan.transform(f);
        exact.boundary_magnitude = computed.boundary_magnitude;
        exact.truncation_estimate = computed.truncation_estimate;
        exact.truncation_warning = computed.truncation_warning;
        return {entry, std::move(f), std::move(exact)};
    }
    SampledFunction f = entry.tag == FunctionTag::radial && entry.radial
                            ? SampledFunction::sample_radial(space, entry.radial)
                            : SampledFunction::sample(space, entry.space, entry.tag);
    Spectrum spectrum = plan.transform(f);
    return {entry, std::move(f), std::move(spectrum)};
}

}  // namespace dunkl
