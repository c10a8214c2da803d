#pragma once

#include "dunkl/measure.hpp"

#include <Eigen/Dense>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

/// Transform values on a frequency grid, with where they came from and how much
/// the space-side truncation may have cost.
struct Spectrum {
    SampledFunction samples;
    std::string provenance;
    /// Largest |f| in the outermost panel layer of the space grid.
    double boundary_magnitude = 0.0;
    /// c_k * boundary_magnitude * w_k-measure of the shell R < |x|_inf < 2R.
    double truncation_estimate = 0.0;
    /// Set when boundary_magnitude exceeds kTruncationLevel.
    bool truncation_warning = false;

    [[nodiscard]] const GridPtr& grid() const { return samples.grid(); }
    [[nodiscard]] const std::vector<Complex>& values() const { return samples.values(); }
};

/// Boundary level above which a sampled function is flagged as not decayed.
inline constexpr double kTruncationLevel = 1e-10;

/// Precomputed Z_2^d Dunkl transform between two symmetric tensor grids of the same setup.
///
/// Forward:  F(xi) = c_k sum_y f(y) E_k(-i xi, y) w(y)
/// Inverse:  f(x)  = c_k sum_xi F(xi) E_k(i x, xi) w(xi)
///
/// The kernel factorizes over axes. Per axis, the even part j_a(xi y) and the
/// odd part xi y/(2(a+1)) j_{a+1}(xi y) are stored as two real matrices over
/// positive half-grids, and the d-dimensional sum is done one axis at a time.
/// Immutable after construction.
class DunklTransform {
public:
    DunklTransform(GridPtr space, GridPtr frequency);

    [[nodiscard]] const GridPtr& space_grid() const { return space_; }
    [[nodiscard]] const GridPtr& frequency_grid() const { return frequency_; }
    [[nodiscard]] double prefactor() const { return ck_; }

    /// Raw forward map: values on the space grid -> values on the frequency grid.
    [[nodiscard]] std::vector<Complex> forward(std::span<const Complex> f) const;
    /// Raw inverse map: values on the frequency grid -> values on the space grid.
    [[nodiscard]] std::vector<Complex> inverse(std::span<const Complex> spectrum) const;

    [[nodiscard]] Spectrum transform(const SampledFunction& f) const;
    [[nodiscard]] SampledFunction invert(const Spectrum& spectrum) const;
    [[nodiscard]] SampledFunction invert_values(std::span<const Complex> spectrum,
                                                FunctionTag tag = FunctionTag::generic) const;

private:
    struct AxisKernel {
        Eigen::MatrixXd even;  // rows: positive frequencies, cols: positive space nodes
        Eigen::MatrixXd odd;
    };

    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> input, const std::vector<int>& in_shape,
                                             const std::vector<int>& out_shape, bool inverse) const;

    GridPtr space_;
    GridPtr frequency_;
    double ck_;
    std::vector<AxisKernel> kernels_;
};

using TransformPtr = std::shared_ptr<const DunklTransform>;

TransformPtr make_transform(GridPtr space, GridPtr frequency);

/// One-shot conveniences; each builds a fresh plan.
Spectrum dunkl_transform_1d(const SampledFunction& f, GridPtr frequency_grid);
SampledFunction dunkl_inverse_1d(const Spectrum& spectrum, GridPtr space_grid);
Spectrum dunkl_transform_z2d(const SampledFunction& f, GridPtr frequency_grid);

/// 1 / (2^nu Gamma(nu+1)): the constant c_k d_k in front of the radial reduction
/// for nu = gamma + d/2 - 1 (in 1D the even part with nu = alpha).
double hankel_prefactor(double nu);

/// H_nu(F)(s) = hankel_prefactor(nu) * integral F(r) j_nu(r s) r^(2 nu + 1) dr,
/// with the integral taken by the radial rule (whose weight power must be 2 nu + 1).
std::vector<double> hankel_transform(double nu, const RadialGrid& radial, std::span<const double> profile_values,
                                     std::span<const double> s_values);
std::vector<double> hankel_transform(double nu, const RadialProfile& profile, const RadialGrid& radial,
                                     std::span<const double> s_values);

/// | ||F f||_2 - ||f||_2 | / ||f||_2. Rejects the zero function.
double plancherel_defect(const SampledFunction& f, const DunklTransform& plan);

/// ||F f||_{p'} / ||f||_p for p in [1, 2] (p' = infinity at p = 1).
double hausdorff_young_ratio(const SampledFunction& f, double p, const DunklTransform& plan);

/// Conjugate exponent p / (p - 1), infinity at p = 1.
double conjugate_exponent(double p);

}  // namespace dunkl
