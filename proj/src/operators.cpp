#include "dunkl/operators.hpp"

#include "dunkl/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

/// Per-axis factors of E_k(i x0, xi); the product over axes is the kernel.
std::vector<std::vector<Complex>> axis_factors(std::span<const double> x0, const WeightedGrid& grid)
{
    if (x0.size() != static_cast<std::size_t>(grid.dim())) throw std::invalid_argument("translate: dimension mismatch");
    std::vector<std::vector<Complex>> factors;
    for (int j = 0; j < grid.dim(); ++j) {
        std::vector<double> const& nodes = grid.axis(j).nodes;
        std::vector<Complex> e(nodes.size());
        double const a = grid.setup().axis_alpha(j);
        for (std::size_t i = 0; i < nodes.size(); ++i) e[i] = dunkl_kernel_1d(a, x0[static_cast<std::size_t>(j)], nodes[i]);
        factors.push_back(std::move(e));
    }
    return factors;
}

std::vector<Complex> outer_product(const std::vector<std::vector<Complex>>& factors)
{
    std::vector<Complex> out{Complex{1.0, 0.0}};
    for (auto const& axis : factors) {
        std::vector<Complex> next;
        next.reserve(out.size() * axis.size());
        for (Complex a : out)
            for (Complex b : axis) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

void require_plan_grids(const SampledFunction& f, const DunklTransform& plan)
{
    if (!f.grid()->same_layout(*plan.space_grid())) throw std::invalid_argument("operator: function is not on the plan's space grid");
}

/// Fornberg weights for the first derivative at z from the nodes x.
std::vector<double> derivative_weights(double z, std::span<const double> x)
{
    std::size_t const n = x.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(2, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t const mn = std::min<std::size_t>(i, 1);
        double c2 = 1.0;
        double const c5 = c4;
        c4 = x[i] - z;
        for (std::size_t j = 0; j < i; ++j) {
            double const c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k) c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = c[i][1];
    return w;
}

double lp_of(const WeightedGrid& grid, const std::vector<Complex>& v, double p) { return lp_norm(grid, v, p); }

}  // namespace

std::vector<Complex> translation_multiplier(std::span<const double> x0, const WeightedGrid& frequency)
{
    return outer_product(axis_factors(x0, frequency));
}

SampledFunction translate(const Spectrum& spectrum, std::span<const double> x0, const DunklTransform& plan)
{
    std::vector<Complex> const e = translation_multiplier(x0, *plan.frequency_grid());
    std::vector<Complex> v = spectrum.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= e[i];
    return plan.invert_values(v);
}

SampledFunction translate(const SampledFunction& f, std::span<const double> x0, const DunklTransform& plan)
{
    require_plan_grids(f, plan);
    bool const origin = std::all_of(x0.begin(), x0.end(), [](double a) { return a == 0.0; });
    if (origin) return SampledFunction(f.grid(), f.values(), f.tag(), f.radial_profile());
    return translate(plan.transform(f), x0, plan);
}

SampledFunction convolve(const Spectrum& f, const Spectrum& g, const DunklTransform& plan)
{
    std::vector<Complex> v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= g.values()[i];
    FunctionTag const tag = (f.samples.tag() == g.samples.tag()) ? f.samples.tag() : FunctionTag::generic;
    return plan.invert_values(v, tag);
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g, const DunklTransform& plan)
{
    require_plan_grids(f, plan);
    require_plan_grids(g, plan);
    return convolve(plan.transform(f), plan.transform(g), plan);
}

SampledFunction convolve_direct(const SampledFunction& f, const SampledFunction& g, const DunklTransform& plan)
{
    require_plan_grids(f, plan);
    require_plan_grids(g, plan);
    WeightedGrid const& grid = *plan.space_grid();
    Spectrum const gs = plan.transform(g);
    std::vector<Complex> out(grid.size());
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        std::vector<double> const x = grid.point(idx);
        SampledFunction const tg = translate(gs, x, plan);
        quad::CompensatedSum re, im;
        for (std::size_t y = 0; y < grid.size(); ++y) {
            // node of -y: flip every axis
            std::size_t neg = y;
            for (int j = 0; j < grid.dim(); ++j) neg = grid.mirror(neg, j);
            Complex const term = f.values()[y] * tg.values()[neg] * grid.weight(y);
            re.add(term.real());
            im.add(term.imag());
        }
        out[idx] = plan.prefactor() * Complex{re.value(), im.value()};
    }
    return SampledFunction(f.grid(), std::move(out));
}

SampledFunction dunkl_operator_t1(const SampledFunction& f, int stencil)
{
    WeightedGrid const& grid = *f.grid();
    if (grid.dim() != 1) throw std::invalid_argument("dunkl_operator_t1: requires d = 1");
    std::vector<double> const& x = grid.axis(0).nodes;
    std::size_t const n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(x[i] + x[n - 1 - i]) > 1e-12 * std::max(1.0, std::fabs(x[i])))
            throw std::invalid_argument("dunkl_operator_t1: grid is not symmetric");
    if (stencil < 2 || static_cast<std::size_t>(stencil) > n) throw std::invalid_argument("dunkl_operator_t1: bad stencil");
    double const alpha = grid.setup().alpha();
    auto const& v = f.values();
    auto const m = static_cast<std::size_t>(stencil);

    auto derivative = [&](std::size_t i) {
        std::size_t start = i >= m / 2 ? i - m / 2 : 0;
        if (start + m > n) start = n - m;
        std::vector<double> const w = derivative_weights(x[i], std::span<const double>(x.data() + start, m));
        Complex d{};
        for (std::size_t l = 0; l < m; ++l) d += w[l] * v[start + l];
        return d;
    };

    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex const df = derivative(i);
        Complex reflection;
        if (x[i] == 0.0) {
            // limit of (f(x) - f(-x)) / (2x): derivative of the odd part, equal to f'(0)
            reflection = df;
        } else {
            reflection = 0.5 * (v[i] - v[n - 1 - i]) / x[i];
        }
        out[i] = df + (2.0 * alpha + 1.0) * reflection;
    }
    return SampledFunction(f.grid(), std::move(out));
}

const char* to_string(ModulusKind kind)
{
    return kind == ModulusKind::second_order_1d ? "second_order_1d" : "sphere_averaged_radial";
}

std::vector<ModulusCurve> modulus_1d(const Spectrum& spectrum, const DunklTransform& plan,
                                     std::span<const double> p_values, std::span<const double> t_values)
{
    WeightedGrid const& freq = *plan.frequency_grid();
    if (freq.dim() != 1) throw std::invalid_argument("modulus_1d: requires d = 1");
    if (!spectrum.grid()->same_layout(freq)) throw std::invalid_argument("modulus_1d: spectrum is not on the plan's frequency grid");
    double const alpha = freq.setup().alpha();
    std::vector<ModulusCurve> curves;
    for (double p : p_values) {
        if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("modulus_1d: p must lie in [1, 2]");
        curves.push_back(ModulusCurve{{}, {}, p, ModulusKind::second_order_1d});
    }
    for (double t : t_values) {
        if (!(t >= 0.0)) throw std::invalid_argument("modulus_1d: t must be nonnegative");
        std::vector<double> omegas(p_values.size(), 0.0);
        if (t > 0.0) {
            std::vector<Complex> v = spectrum.values();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= -2.0 * bessel_gap(alpha, t * freq.axis(0).nodes[i]);
            std::vector<Complex> const diff = plan.inverse(v);
            for (std::size_t q = 0; q < p_values.size(); ++q) omegas[q] = lp_of(*plan.space_grid(), diff, p_values[q]);
        }
        for (std::size_t q = 0; q < p_values.size(); ++q) {
            curves[q].t_values.push_back(t);
            curves[q].omega_values.push_back(omegas[q]);
        }
    }
    return curves;
}

double modulus_1d(const SampledFunction& f, double p, double t, const DunklTransform& plan)
{
    require_plan_grids(f, plan);
    double const ps[] = {p};
    double const ts[] = {t};
    return modulus_1d(plan.transform(f), plan, ps, ts).front().omega_values.front();
}

std::vector<ModulusCurve> modulus_radial(const Spectrum& spectrum, const DunklTransform& plan,
                                         std::span<const double> p_values, std::span<const double> t_values,
                                         int angles)
{
    WeightedGrid const& freq = *plan.frequency_grid();
    if (freq.dim() != 2) throw std::invalid_argument("modulus_radial: requires d = 2");
    if (spectrum.samples.tag() != FunctionTag::radial) throw std::invalid_argument("modulus_radial: function is not radial");
    if (angles < 4 || angles % 4 != 0) throw std::invalid_argument("modulus_radial: angle count must be a positive multiple of 4");
    std::vector<ModulusCurve> curves;
    for (double p : p_values) {
        if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("modulus_radial: p must lie in [1, 2]");
        curves.push_back(ModulusCurve{{}, {}, p, ModulusKind::sphere_averaged_radial});
    }
    int const quarter = angles / 4;
    double const dtheta = 2.0 * std::numbers::pi / angles;
    for (double t : t_values) {
        if (!(t >= 0.0)) throw std::invalid_argument("modulus_radial: t must be nonnegative");
        std::vector<quad::CompensatedSum> sums(p_values.size());
        if (t > 0.0) {
            for (int m = 0; m <= quarter; ++m) {
                // theta and its images under the two sign flips
                double const multiplicity = (m == 0 || m == quarter) ? 2.0 : 4.0;
                double const theta = m * dtheta;
                double const u[2] = {t * std::cos(theta), t * std::sin(theta)};
                double const shift[2] = {m == quarter ? 0.0 : u[0], m == 0 ? 0.0 : u[1]};
                std::vector<Complex> const e = translation_multiplier(shift, freq);
                std::vector<Complex> v = spectrum.values();
                for (std::size_t i = 0; i < v.size(); ++i) v[i] *= e[i] - 1.0;
                std::vector<Complex> const diff = plan.inverse(v);
                for (std::size_t q = 0; q < p_values.size(); ++q)
                    sums[q].add(multiplicity * dtheta * lp_of(*plan.space_grid(), diff, p_values[q]));
            }
        }
        for (std::size_t q = 0; q < p_values.size(); ++q) {
            curves[q].t_values.push_back(t);
            curves[q].omega_values.push_back(sums[q].value());
        }
    }
    return curves;
}

double modulus_radial(const SampledFunction& f, double p, double t, const DunklTransform& plan, int angles)
{
    require_plan_grids(f, plan);
    if (f.tag() != FunctionTag::radial) throw std::invalid_argument("modulus_radial: function is not radial");
    double const ps[] = {p};
    double const ts[] = {t};
    return modulus_radial(plan.transform(f), plan, ps, ts, angles).front().omega_values.front();
}

}  // namespace dunkl
