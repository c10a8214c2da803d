#pragma once

#include "dunkl/quadrature.hpp"
#include "dunkl/setup.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace dunkl {

using Complex = std::complex<double>;
using RadialProfile = std::function<double(double)>;

/// Samples whose magnitude never exceeds this are treated as the zero function.
inline constexpr double kZeroThreshold = 1e-300;

/// w_k(x). In dimension one this is the normalized |x|^(2 alpha+1) / (2^(alpha+1) Gamma(alpha+1)).
double weight_eval(std::span<const double> x, const MultiplicitySetup& setup);
double weight_eval(double x, const MultiplicitySetup& setup);

/// c_k = (integral of exp(-|x|^2/2) w_k(x) dx)^(-1), closed form.
double mehta_constant(const MultiplicitySetup& setup);

/// d_k = c_k^(-1) / (2^(gamma+d/2-1) Gamma(gamma+d/2)). Requires d >= 2.
/// Equals the integral of w_k over the unit sphere with the unnormalized surface measure.
double sphere_constant(const MultiplicitySetup& setup);

/// Integral of w_k over the unit circle by quadrature (d = 2 only). Each quadrant
/// uses a Gauss-Jacobi rule matched to the |cos|^(2 k_1) |sin|^(2 k_2) endpoint behaviour.
double sphere_mass_quadrature(const MultiplicitySetup& setup, int nodes_per_quadrant = 48);

/// Tensor-product quadrature for w_k(x) dx on [-R, R]^d.
///
/// Each axis carries n nodes, symmetric about 0, laid out as n / (2 order)
/// panels of `order` Gauss points per half-axis (see quad::half_line_rule).
/// Flattened indices are row-major with axis 0 slowest.
class WeightedGrid {
public:
    static std::shared_ptr<const WeightedGrid> make(const MultiplicitySetup& setup, double radius, int n,
                                                    int order = 16);

    [[nodiscard]] const MultiplicitySetup& setup() const { return setup_; }
    [[nodiscard]] int dim() const { return setup_.dim(); }
    [[nodiscard]] double radius() const { return radius_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] std::size_t size() const { return weights_.size(); }

    /// Axis j: ascending nodes and 1D weights (w_k factor of that axis included).
    [[nodiscard]] const quad::Rule& axis(int j) const { return axes_[static_cast<std::size_t>(j)]; }

    [[nodiscard]] double coordinate(std::size_t index, int j) const;
    [[nodiscard]] std::vector<double> point(std::size_t index) const;
    [[nodiscard]] double norm(std::size_t index) const { return norms_[index]; }
    [[nodiscard]] double weight(std::size_t index) const { return weights_[index]; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
    [[nodiscard]] const std::vector<double>& norms() const { return norms_; }

    /// Index of the node obtained by flipping the sign of coordinate j.
    [[nodiscard]] std::size_t mirror(std::size_t index, int j) const;

    /// 1 / sum of weights * exp(-|x|^2/2): grid estimate of the Mehta constant.
    [[nodiscard]] double mehta_estimate() const;

    [[nodiscard]] bool same_layout(const WeightedGrid& other) const;

private:
    WeightedGrid(MultiplicitySetup setup, double radius, int n, int order);

    MultiplicitySetup setup_;
    double radius_;
    int n_;
    int order_;
    std::vector<quad::Rule> axes_;
    std::vector<double> weights_;
    std::vector<double> norms_;
};

using GridPtr = std::shared_ptr<const WeightedGrid>;

enum class FunctionTag { generic, radial, even };

const char* to_string(FunctionTag tag);

/// Complex samples on a weighted grid.
class SampledFunction {
public:
    SampledFunction(GridPtr grid, std::vector<Complex> values, FunctionTag tag = FunctionTag::generic,
                    RadialProfile radial_profile = {});

    static SampledFunction sample(GridPtr grid, const std::function<Complex(std::span<const double>)>& f,
                                  FunctionTag tag = FunctionTag::generic);

    /// f(x) = F(|x|); tagged radial and keeps F.
    static SampledFunction sample_radial(GridPtr grid, RadialProfile profile);

    static SampledFunction zero(GridPtr grid);

    [[nodiscard]] const GridPtr& grid() const { return grid_; }
    [[nodiscard]] const std::vector<Complex>& values() const { return values_; }
    [[nodiscard]] FunctionTag tag() const { return tag_; }
    [[nodiscard]] const RadialProfile& radial_profile() const { return profile_; }
    [[nodiscard]] bool has_radial_profile() const { return static_cast<bool>(profile_); }

    /// All samples below kZeroThreshold in magnitude.
    [[nodiscard]] bool is_zero() const;

    /// Largest deviation from the tag's symmetry (sign flips per axis, and the
    /// profile when present). Zero for generic functions.
    [[nodiscard]] double symmetry_defect() const;

    SampledFunction& operator+=(const SampledFunction& other);
    SampledFunction& operator-=(const SampledFunction& other);
    SampledFunction& operator*=(Complex a);

private:
    GridPtr grid_;
    std::vector<Complex> values_;
    FunctionTag tag_;
    RadialProfile profile_;
};

SampledFunction operator+(SampledFunction a, const SampledFunction& b);
SampledFunction operator-(SampledFunction a, const SampledFunction& b);
SampledFunction operator*(Complex a, SampledFunction f);

/// (sum |v|^p weight)^(1/p); p = infinity gives the max modulus. Rejects p < 1.
double lp_norm(const WeightedGrid& grid, std::span<const Complex> values, double p);
double lp_norm(const SampledFunction& f, double p);

/// Composite rule on [0, R] for r^power dr, used for radial profiles.
struct RadialGrid {
    quad::Rule rule;
    double radius = 0.0;
    double power = 0.0;
};

RadialGrid make_radial_grid(double radius, double power, int panels = 64, int order = 16);

/// Both sides of the polar formula: the d-dimensional grid integral of F(|x|) w_k(x)
/// and d_k times the integral of F(r) r^(2 gamma + d - 1) over [0, R].
std::pair<double, double> radial_integral_check(const RadialProfile& profile, const WeightedGrid& grid);

}  // namespace dunkl
