#pragma once

#include "dunkl/transform.hpp"

#include <span>
#include <vector>

namespace dunkl {

/// E_k(i x0, xi) at every node of a frequency grid (product over axes).
std::vector<Complex> translation_multiplier(std::span<const double> x0, const WeightedGrid& frequency);

/// tau_{x0} f, defined through its transform E_k(i x0, .) F_k f.
SampledFunction translate(const SampledFunction& f, std::span<const double> x0, const DunklTransform& plan);
SampledFunction translate(const Spectrum& spectrum, std::span<const double> x0, const DunklTransform& plan);

/// f *_k g as the inverse transform of F_k f F_k g.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g, const DunklTransform& plan);
SampledFunction convolve(const Spectrum& f, const Spectrum& g, const DunklTransform& plan);

/// Direct form of the convolution for bounded radial (1D: even) g:
///     (f *_k g)(x) = c_k integral f(y) tau_x(g)(-y) w_k(y) dy,
/// where c_k keeps it equal to the spectral product (c_k = 1 in dimension one).
/// evaluated at every space node. One translate per output node, so meant for small grids.
SampledFunction convolve_direct(const SampledFunction& f, const SampledFunction& g, const DunklTransform& plan);

/// 1D Dunkl operator T_1 f = f' + (2 alpha + 1)/x (f(x) - f(-x))/2.
///
/// f' comes from a Lagrange stencil of `stencil` neighbouring nodes (Fornberg
/// weights); the reflection term is exact from the mirrored node. Throws on
/// multi-dimensional or asymmetric grids.
SampledFunction dunkl_operator_t1(const SampledFunction& f, int stencil = 9);

enum class ModulusKind { second_order_1d, sphere_averaged_radial };

const char* to_string(ModulusKind kind);

struct ModulusCurve {
    std::vector<double> t_values;
    std::vector<double> omega_values;
    double p = 2.0;
    ModulusKind kind = ModulusKind::second_order_1d;
};

/// omega_p(f)(t) = || tau_t f + tau_{-t} f - 2 f ||_{p,k}, through the multiplier
/// -2 (1 - j_alpha(t xi)) on the spectrum; one inverse transform per t, shared by all p.
std::vector<ModulusCurve> modulus_1d(const Spectrum& spectrum, const DunklTransform& plan,
                                     std::span<const double> p_values, std::span<const double> t_values);
double modulus_1d(const SampledFunction& f, double p, double t, const DunklTransform& plan);

/// omega_p(f)(t) = integral over S^1 of || tau_{tu} f - f ||_{p,k} dsigma(u) for radial f, d = 2.
///
/// Trapezoid rule with `angles` equispaced nodes (a multiple of 4). The integrand is
/// invariant under sign flips of u, so only the first quadrant is evaluated.
std::vector<ModulusCurve> modulus_radial(const Spectrum& spectrum, const DunklTransform& plan,
                                         std::span<const double> p_values, std::span<const double> t_values,
                                         int angles = 64);
double modulus_radial(const SampledFunction& f, double p, double t, const DunklTransform& plan, int angles = 64);

}  // namespace dunkl
