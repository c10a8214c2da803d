#pragma once

#include <string>
#include <vector>

namespace dunkl {

/// Reflection group Z_2^d with one multiplicity per coordinate hyperplane.
///
/// In dimension one the weight is the normalized
///     w(x) = |x|^(2 alpha + 1) / (2^(alpha+1) Gamma(alpha+1)),  alpha = k - 1/2,
/// which makes the Mehta constant equal to one. For d >= 2 the weight is the
/// plain product prod_j |x_j|^(2 k_j).
class MultiplicitySetup {
public:
    /// d = 1 with index alpha > -1/2.
    static MultiplicitySetup rank_one(double alpha);

    /// d = k.size(). For d = 1 this is rank_one(k[0] - 1/2), which requires k[0] > 0;
    /// for d >= 2 every k_j must be nonnegative.
    static MultiplicitySetup product(std::vector<double> k);

    [[nodiscard]] int dim() const { return static_cast<int>(k_.size()); }
    [[nodiscard]] const std::vector<double>& k() const { return k_; }
    [[nodiscard]] double gamma() const { return gamma_; }

    /// alpha = gamma - 1/2. Only meaningful in dimension one.
    [[nodiscard]] double alpha() const;

    /// Index of the rank-one kernel on axis j: k_j - 1/2 (may be -1/2 when k_j = 0).
    [[nodiscard]] double axis_alpha(int j) const { return k_[j] - 0.5; }

    /// Constant factor in front of |x_j|^(2 k_j) on axis j.
    [[nodiscard]] double axis_scale(int j) const { return axis_scale_[j]; }

    /// Order gamma + d/2 - 1 of the Bessel function in the radial reduction.
    [[nodiscard]] double bessel_order() const { return gamma_ + 0.5 * dim() - 1.0; }

    /// Homogeneity degree of the measure w(x) dx: 2 gamma + d.
    [[nodiscard]] double measure_degree() const { return 2.0 * gamma_ + dim(); }

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const MultiplicitySetup&, const MultiplicitySetup&) = default;

private:
    explicit MultiplicitySetup(std::vector<double> k);

    std::vector<double> k_;
    std::vector<double> axis_scale_;
    double gamma_ = 0.0;
};

}  // namespace dunkl
