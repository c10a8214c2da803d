#pragma once

#include "dunkl/catalog.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

/// Inputs of a verification run. The 1D suites use (alpha, radius, grid_n); the
/// radial suites use k with the radial_* grid.
struct VerifyConfig {
    double alpha = 0.5;
    double radius = 20.0;
    int grid_n = 4096;

    std::vector<double> k{0.25, 0.5};
    double radial_radius = 16.0;
    double radial_frequency_radius = 8.0;
    int radial_n = 256;
    int angles = 64;

    std::vector<double> p{1.0, 1.5, 2.0};
    std::vector<double> q{2.0};
    /// Smoothness indices for the Besov suite; the integrability suites take theirs
    /// from l1_beta and radial_beta.
    std::vector<double> beta{1.0};
    double l1_alpha = -0.25;
    double l1_beta = 1.6;
    double radial_beta = 3.6;

    int j_max = 10;
    int t_min_exp = -8;
    int t_max_exp = 4;
    std::uint64_t seed = kDefaultSeed;

    void validate() const;
    [[nodiscard]] Json to_json() const;
};

/// Suite names in run order.
std::vector<std::string> suite_names();

/// Runs one suite. Exceptions inside a suite are caught and recorded as a failure.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

/// Runs the named suites ("all" expands to every suite); throws std::invalid_argument
/// on an unknown name before running anything.
Report run(const std::vector<std::string>& names, const VerifyConfig& config);

/// 2^a, 2^(a+1), ..., 2^b.
std::vector<double> dyadic_t(int a, int b);

/// (integral of (min{1, (t|x|)^2} |F(x)|)^p' w dx)^(1/p'); the sup when p = 1.
double smoothness_weighted_norm(const Spectrum& spectrum, double t, double p);

/// (integral over |x| > 1/t of |F(x)|^p' w dx)^(1/p'); the sup over |x| > 1/t when p = 1.
double spectral_tail_norm(const Spectrum& spectrum, double t, double p);

/// Integral of |F| w over |x| >= a.
double spectral_l1_outside(const Spectrum& spectrum, double a);

/// Extremes of (1 - j_nu(s)) / min{1, s^2} over log-uniform s in [1e-3, 1e3].
struct GapRatioSample {
    double nu = 0.0;
    double min = 0.0;
    double max = 0.0;
    double at_small_s = 0.0;  ///< ratio at s = 1e-4
    double limit = 0.0;       ///< 1 / (4 (nu + 1))
};

GapRatioSample sample_gap_ratio(double nu, int samples = 2001);

/// Smoothness hypothesis sup_t omega_1(f)(t) / t^beta < A on a finite t-grid.
struct HypothesisCheck {
    double sup_ratio = 0.0;  ///< A
    double t_at_sup = 0.0;
    std::vector<double> ratios;
    /// The sup sits away from the smallest t and the ratio decreases toward it,
    /// so the sampled sup is not an artifact of truncating t -> 0.
    bool bounded_near_zero = false;
};

/// Throws std::invalid_argument when beta <= threshold (2(alpha+1) on the line,
/// 2 gamma + d in the radial case).
HypothesisCheck smoothness_hypothesis(const ModulusCurve& omega1, double beta, double threshold);

}  // namespace dunkl
