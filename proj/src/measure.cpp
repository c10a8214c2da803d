#include "dunkl/measure.hpp"

#include "dunkl/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double weight_eval(std::span<const double> x, const MultiplicitySetup& setup)
{
    if (x.size() != static_cast<std::size_t>(setup.dim()))
        throw std::invalid_argument("weight_eval: dimension mismatch");
    double w = 1.0;
    for (int j = 0; j < setup.dim(); ++j) {
        double const kj = setup.k()[static_cast<std::size_t>(j)];
        if (kj != 0.0) w *= std::pow(std::fabs(x[static_cast<std::size_t>(j)]), 2.0 * kj);
        w *= setup.axis_scale(j);
    }
    return w;
}

double weight_eval(double x, const MultiplicitySetup& setup)
{
    return weight_eval(std::span<const double>(&x, 1), setup);
}

double mehta_constant(const MultiplicitySetup& setup)
{
    // integral over R of |x|^(2k) exp(-x^2/2) dx = 2^(k+1/2) Gamma(k+1/2)
    double inv = 1.0;
    for (int j = 0; j < setup.dim(); ++j) {
        double const kj = setup.k()[static_cast<std::size_t>(j)];
        inv *= setup.axis_scale(j) * std::pow(2.0, kj + 0.5) * gamma_fn(kj + 0.5);
    }
    return 1.0 / inv;
}

double sphere_constant(const MultiplicitySetup& setup)
{
    if (setup.dim() < 2) throw std::invalid_argument("sphere_constant: requires d >= 2");
    double const a = setup.gamma() + 0.5 * setup.dim();
    return 1.0 / (mehta_constant(setup) * std::pow(2.0, a - 1.0) * gamma_fn(a));
}

double sphere_mass_quadrature(const MultiplicitySetup& setup, int nodes_per_quadrant)
{
    if (setup.dim() != 2) throw std::invalid_argument("sphere_mass_quadrature: only d = 2 is supported");
    double const a = setup.k()[0];
    double const b = setup.k()[1];
    double const quarter = 0.25 * std::numbers::pi;
    // theta = (pi/4)(1 + t); sin theta ~ (pi/4)(1+t) near t = -1, cos theta ~ (pi/4)(1-t) near t = 1
    quad::Rule const rule = quad::gauss_jacobi(nodes_per_quadrant, 2.0 * a, 2.0 * b);
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double const t = rule.nodes[i];
        double const theta = quarter * (1.0 + t);
        double const cos_ratio = std::cos(theta) / (quarter * (1.0 - t));
        double const sin_ratio = std::sin(theta) / (quarter * (1.0 + t));
        double const smooth = std::pow(cos_ratio, 2.0 * a) * std::pow(sin_ratio, 2.0 * b);
        sum.add(rule.weights[i] * smooth);
    }
    double const scale = std::pow(quarter, 2.0 * a + 2.0 * b + 1.0);
    return 4.0 * scale * sum.value() * setup.axis_scale(0) * setup.axis_scale(1);
}

WeightedGrid::WeightedGrid(MultiplicitySetup setup, double radius, int n, int order)
    : setup_(std::move(setup)), radius_(radius), n_(n), order_(order)
{
}

std::shared_ptr<const WeightedGrid> WeightedGrid::make(const MultiplicitySetup& setup, double radius, int n,
                                                       int order)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("WeightedGrid: radius must be positive");
    if (order < 1 || n < 2 * order || n % (2 * order) != 0)
        throw std::invalid_argument("WeightedGrid: n must be a positive multiple of 2*order (order = " +
                                    std::to_string(order) + ")");
    std::shared_ptr<WeightedGrid> grid(new WeightedGrid(setup, radius, n, order));
    int const panels = n / (2 * order);
    for (int j = 0; j < setup.dim(); ++j) {
        double const power = 2.0 * setup.k()[static_cast<std::size_t>(j)];
        quad::Rule const half = quad::half_line_rule(radius, panels, order, power);
        quad::Rule full;
        full.nodes.resize(static_cast<std::size_t>(n));
        full.weights.resize(static_cast<std::size_t>(n));
        std::size_t const h = half.size();
        for (std::size_t i = 0; i < h; ++i) {
            full.nodes[h + i] = half.nodes[i];
            full.nodes[h - 1 - i] = -half.nodes[i];
            double const w = half.weights[i] * setup.axis_scale(j);
            full.weights[h + i] = w;
            full.weights[h - 1 - i] = w;
        }
        grid->axes_.push_back(std::move(full));
    }

    std::size_t total = 1;
    for (int j = 0; j < setup.dim(); ++j) total *= static_cast<std::size_t>(n);
    grid->weights_.assign(total, 1.0);
    grid->norms_.assign(total, 0.0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        double w = 1.0;
        double r2 = 0.0;
        for (int j = setup.dim() - 1; j >= 0; --j) {
            std::size_t const i = rest % static_cast<std::size_t>(n);
            rest /= static_cast<std::size_t>(n);
            double const x = grid->axes_[static_cast<std::size_t>(j)].nodes[i];
            w *= grid->axes_[static_cast<std::size_t>(j)].weights[i];
            r2 += x * x;
        }
        grid->weights_[idx] = w;
        grid->norms_[idx] = std::sqrt(r2);
    }
    return grid;
}

double WeightedGrid::coordinate(std::size_t index, int j) const
{
    std::size_t stride = 1;
    for (int a = dim() - 1; a > j; --a) stride *= static_cast<std::size_t>(n_);
    std::size_t const i = (index / stride) % static_cast<std::size_t>(n_);
    return axes_[static_cast<std::size_t>(j)].nodes[i];
}

std::vector<double> WeightedGrid::point(std::size_t index) const
{
    std::vector<double> x(static_cast<std::size_t>(dim()));
    for (int j = 0; j < dim(); ++j) x[static_cast<std::size_t>(j)] = coordinate(index, j);
    return x;
}

std::size_t WeightedGrid::mirror(std::size_t index, int j) const
{
    std::size_t stride = 1;
    for (int a = dim() - 1; a > j; --a) stride *= static_cast<std::size_t>(n_);
    std::size_t const n = static_cast<std::size_t>(n_);
    std::size_t const i = (index / stride) % n;
    return index - i * stride + (n - 1 - i) * stride;
}

double WeightedGrid::mehta_estimate() const
{
    quad::CompensatedSum sum;
    for (std::size_t idx = 0; idx < size(); ++idx) sum.add(weights_[idx] * std::exp(-0.5 * norms_[idx] * norms_[idx]));
    return 1.0 / sum.value();
}

bool WeightedGrid::same_layout(const WeightedGrid& other) const
{
    return setup_ == other.setup_ && radius_ == other.radius_ && n_ == other.n_ && order_ == other.order_;
}

const char* to_string(FunctionTag tag)
{
    switch (tag) {
    case FunctionTag::generic: return "generic";
    case FunctionTag::radial: return "radial";
    case FunctionTag::even: return "even";
    }
    return "generic";
}

SampledFunction::SampledFunction(GridPtr grid, std::vector<Complex> values, FunctionTag tag,
                                 RadialProfile radial_profile)
    : grid_(std::move(grid)), values_(std::move(values)), tag_(tag), profile_(std::move(radial_profile))
{
    if (!grid_) throw std::invalid_argument("SampledFunction: null grid");
    if (values_.size() != grid_->size()) throw std::invalid_argument("SampledFunction: value count does not match grid");
    if (profile_ && tag_ != FunctionTag::radial)
        throw std::invalid_argument("SampledFunction: a radial profile requires the radial tag");
}

SampledFunction SampledFunction::sample(GridPtr grid, const std::function<Complex(std::span<const double>)>& f,
                                        FunctionTag tag)
{
    std::vector<Complex> values(grid->size());
    std::vector<double> x(static_cast<std::size_t>(grid->dim()));
    for (std::size_t idx = 0; idx < grid->size(); ++idx) {
        for (int j = 0; j < grid->dim(); ++j) x[static_cast<std::size_t>(j)] = grid->coordinate(idx, j);
        values[idx] = f(x);
    }
    return SampledFunction(std::move(grid), std::move(values), tag);
}

SampledFunction SampledFunction::sample_radial(GridPtr grid, RadialProfile profile)
{
    std::vector<Complex> values(grid->size());
    for (std::size_t idx = 0; idx < grid->size(); ++idx) values[idx] = profile(grid->norm(idx));
    return SampledFunction(std::move(grid), std::move(values), FunctionTag::radial, std::move(profile));
}

SampledFunction SampledFunction::zero(GridPtr grid)
{
    std::vector<Complex> values(grid->size(), Complex{});
    return SampledFunction(std::move(grid), std::move(values));
}

bool SampledFunction::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](Complex v) { return std::abs(v) <= kZeroThreshold; });
}

double SampledFunction::symmetry_defect() const
{
    if (tag_ == FunctionTag::generic) return 0.0;
    double defect = 0.0;
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        for (int j = 0; j < grid_->dim(); ++j)
            defect = std::max(defect, std::abs(values_[idx] - values_[grid_->mirror(idx, j)]));
        if (profile_) defect = std::max(defect, std::abs(values_[idx] - Complex(profile_(grid_->norm(idx)))));
    }
    return defect;
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other)
{
    if (!grid_->same_layout(*other.grid_)) throw std::invalid_argument("SampledFunction: grid mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    if (tag_ != other.tag_) tag_ = FunctionTag::generic;
    profile_ = {};
    return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other)
{
    if (!grid_->same_layout(*other.grid_)) throw std::invalid_argument("SampledFunction: grid mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    if (tag_ != other.tag_) tag_ = FunctionTag::generic;
    profile_ = {};
    return *this;
}

SampledFunction& SampledFunction::operator*=(Complex a)
{
    for (auto& v : values_) v *= a;
    if (profile_) {
        if (a.imag() == 0.0) {
            double const s = a.real();
            profile_ = [p = profile_, s](double r) { return s * p(r); };
        } else {
            profile_ = {};
        }
    }
    return *this;
}

SampledFunction operator+(SampledFunction a, const SampledFunction& b) { return a += b; }
SampledFunction operator-(SampledFunction a, const SampledFunction& b) { return a -= b; }
SampledFunction operator*(Complex a, SampledFunction f) { return f *= a; }

double lp_norm(const WeightedGrid& grid, std::span<const Complex> values, double p)
{
    if (values.size() != grid.size()) throw std::invalid_argument("lp_norm: value count does not match grid");
    if (std::isinf(p) && p > 0) {
        double m = 0.0;
        for (Complex v : values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be at least 1");
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double const a = std::abs(values[i]);
        if (a <= kZeroThreshold) continue;
        sum.add(grid.weight(i) * (p == 2.0 ? a * a : (p == 1.0 ? a : std::pow(a, p))));
    }
    double const s = std::max(sum.value(), 0.0);
    return p == 2.0 ? std::sqrt(s) : (p == 1.0 ? s : std::pow(s, 1.0 / p));
}

double lp_norm(const SampledFunction& f, double p) { return lp_norm(*f.grid(), f.values(), p); }

RadialGrid make_radial_grid(double radius, double power, int panels, int order)
{
    return RadialGrid{quad::half_line_rule(radius, panels, order, power), radius, power};
}

std::pair<double, double> radial_integral_check(const RadialProfile& profile, const WeightedGrid& grid)
{
    MultiplicitySetup const& setup = grid.setup();
    if (setup.dim() < 2) throw std::invalid_argument("radial_integral_check: requires d >= 2");
    quad::CompensatedSum lhs;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) lhs.add(grid.weight(idx) * profile(grid.norm(idx)));
    RadialGrid const radial = make_radial_grid(grid.radius(), setup.measure_degree() - 1.0);
    quad::CompensatedSum rhs;
    for (std::size_t i = 0; i < radial.rule.size(); ++i) rhs.add(radial.rule.weights[i] * profile(radial.rule.nodes[i]));
    return {lhs.value(), sphere_constant(setup) * rhs.value()};
}

}  // namespace dunkl
