#include "dunkl/special.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double gamma_fn(double x)
{
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

BesselOrder::BesselOrder(double nu) : nu_(nu)
{
    if (!(nu >= -0.5)) throw std::invalid_argument("BesselOrder: order must be >= -1/2");
}

double bessel_switchover(double nu) { return std::max(16.0, 2.0 * std::fabs(nu)); }

namespace detail {

double bessel_series(double nu, double s)
{
    long double const q = -0.25L * static_cast<long double>(s) * s;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (nu + k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > 2) break;
    }
    return static_cast<double>(sum);
}

double bessel_asymptotic(double nu, double s)
{
    s = std::fabs(s);
    double const mu = 4.0 * nu * nu;
    double p = 0.0, q = 0.0;
    double term = 1.0;  // a_k(nu) / s^k
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 60; ++k) {
        if (k > 0) term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * s);
        double const mag = std::fabs(term);
        if (mag > prev) break;  // past the smallest term of the divergent series
        int const sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0)
            p += sign * term;
        else
            q += sign * term;
        if (mag < 1e-17) break;
        prev = mag;
    }
    double const chi = s - (0.5 * nu + 0.25) * std::numbers::pi;
    double const jnu = std::sqrt(2.0 / (std::numbers::pi * s)) * (p * std::cos(chi) - q * std::sin(chi));
    // Gamma(nu+1) (2/s)^nu, via logs so large orders do not overflow
    double const prefactor = std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / s));
    return prefactor * jnu;
}

}  // namespace detail

double bessel_normalized(double nu, double s)
{
    if (!(nu >= -0.5)) throw std::invalid_argument("bessel_normalized: order must be >= -1/2");
    double const a = std::fabs(s);
    if (a == 0.0) return 1.0;
    if (a <= bessel_switchover(nu)) return detail::bessel_series(nu, a);
    return detail::bessel_asymptotic(nu, a);
}

double bessel_normalized(BesselOrder nu, double s) { return bessel_normalized(nu.value(), s); }

double bessel_gap(double nu, double s)
{
    if (!(nu >= -0.5)) throw std::invalid_argument("bessel_gap: order must be >= -1/2");
    double const a = std::fabs(s);
    if (a == 0.0) return 0.0;
    if (a > bessel_switchover(nu)) return 1.0 - detail::bessel_asymptotic(nu, a);
    // 1 - j = -sum_{k>=1} t_k, accumulated without the leading 1
    long double const q = -0.25L * static_cast<long double>(a) * a;
    long double term = 1.0L;
    long double sum = 0.0L;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (nu + k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
    }
    return static_cast<double>(-sum);
}

KernelValue dunkl_kernel_1d(double alpha, double t, double x)
{
    double const s = t * x;
    if (s == 0.0) return {1.0, 0.0};
    double const even = bessel_normalized(alpha, s);
    double const odd = s / (2.0 * (alpha + 1.0)) * bessel_normalized(alpha + 1.0, s);
    return {even, odd};
}

KernelValue dunkl_kernel_1d(const MultiplicitySetup& setup, double t, double x)
{
    return dunkl_kernel_1d(setup.alpha(), t, x);
}

KernelValue dunkl_kernel_product(const MultiplicitySetup& setup, std::span<const double> y,
                                 std::span<const double> x)
{
    auto const d = static_cast<std::size_t>(setup.dim());
    if (y.size() != d || x.size() != d) throw std::invalid_argument("dunkl_kernel_product: dimension mismatch");
    KernelValue out{1.0, 0.0};
    for (std::size_t j = 0; j < d; ++j) out *= dunkl_kernel_1d(setup.axis_alpha(static_cast<int>(j)), y[j], x[j]);
    return out;
}

double bessel_gap_ratio(double nu, double s)
{
    if (!(nu > -0.5)) throw std::invalid_argument("bessel_gap_ratio: order must exceed -1/2");
    if (s == 0.0) throw std::invalid_argument("bessel_gap_ratio: s = 0 (use bessel_gap_ratio_limit)");
    return bessel_gap(nu, s) / std::min(1.0, s * s);
}

double bessel_gap_ratio_limit(double nu) { return 1.0 / (4.0 * (nu + 1.0)); }

}  // namespace dunkl
