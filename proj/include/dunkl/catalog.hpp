#pragma once

#include "dunkl/transform.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

enum class TestKind { gaussian, smooth_bump, band_limited, oscillatory, ingested };

const char* to_string(TestKind kind);

using PointFunction = std::function<Complex(std::span<const double>)>;

/// A named test function. Entries defined through their spectrum leave `space` empty
/// and are sampled by inverting the exact spectrum (a spectral pair).
struct CatalogEntry {
    std::string name;
    TestKind kind = TestKind::gaussian;
    FunctionTag tag = FunctionTag::generic;
    PointFunction space;
    PointFunction spectrum;  ///< exact transform, when known
    RadialProfile radial;    ///< radial profile for radial entries
    std::optional<std::pair<double, double>> band;  ///< spectral support in |xi|
};

struct CatalogSample {
    CatalogEntry entry;
    SampledFunction f;
    Spectrum spectrum;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Entry names for 1D setups and for radial d >= 2 setups.
std::vector<std::string> catalog_names(int dim);

/// Throws std::invalid_argument on an unknown name or a name unavailable in this dimension.
CatalogEntry catalog_entry(const std::string& name, const MultiplicitySetup& setup, std::uint64_t seed = kDefaultSeed);

/// Samples an entry on the plan's space grid. The spectrum is the exact one for
/// spectral pairs and the computed transform otherwise.
CatalogSample realize(const CatalogEntry& entry, const DunklTransform& plan);

/// Smooth bump exp(-1/(1-u^2)) on |u| < 1, zero elsewhere.
double bump(double u);

}  // namespace dunkl
