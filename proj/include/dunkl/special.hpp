#pragma once

#include "dunkl/setup.hpp"

#include <complex>
#include <span>

namespace dunkl {

/// Gamma function for x > 0, backed by the C library's tgamma (relative error
/// within a few ulp on (0, 170)). Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// Order of a normalized Bessel function. Orders down to -1/2 are accepted:
/// j_{-1/2}(s) = cos s is the rank-one kernel of an axis with k = 0.
class BesselOrder {
public:
    explicit BesselOrder(double nu);
    [[nodiscard]] double value() const { return nu_; }

private:
    double nu_;
};

/// Normalized Bessel function j_nu(s) = Gamma(nu+1) (2/s)^nu J_nu(s), j_nu(0) = 1.
///
/// Ascending series (extended precision) for |s| <= bessel_switchover(nu),
/// Hankel asymptotic expansion beyond.
double bessel_normalized(BesselOrder nu, double s);
double bessel_normalized(double nu, double s);

/// 1 - j_nu(s) without cancellation for small s.
double bessel_gap(double nu, double s);

/// Argument where evaluation switches from the series to the asymptotic form.
double bessel_switchover(double nu);

namespace detail {
double bessel_series(double nu, double s);
double bessel_asymptotic(double nu, double s);
}  // namespace detail

using KernelValue = std::complex<double>;

/// Rank-one Dunkl kernel E(i t x) = j_a(tx) + i tx/(2(a+1)) j_{a+1}(tx), a = alpha.
KernelValue dunkl_kernel_1d(double alpha, double t, double x);
KernelValue dunkl_kernel_1d(const MultiplicitySetup& setup, double t, double x);

/// Z_2^d kernel E(iy, x) = prod_j E_{k_j}(i y_j x_j).
/// Throws std::invalid_argument on a dimension mismatch.
KernelValue dunkl_kernel_product(const MultiplicitySetup& setup, std::span<const double> y,
                                 std::span<const double> x);

/// (1 - j_nu(s)) / min{1, s^2}. Requires nu > -1/2 and s != 0.
double bessel_gap_ratio(double nu, double s);

/// Value of the gap ratio as s -> 0: 1 / (4 (nu + 1)).
double bessel_gap_ratio_limit(double nu);

}  // namespace dunkl
