#include "dunkl/transform.hpp"

#include "dunkl/parallel.hpp"
#include "dunkl/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

namespace {

using RowMajorComplex = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct BoundaryInfo {
    double magnitude = 0.0;
    double estimate = 0.0;
};

BoundaryInfo boundary_info(const SampledFunction& f, double ck)
{
    WeightedGrid const& grid = *f.grid();
    int const panels = grid.n() / (2 * grid.order());
    double const inner = grid.radius() * (1.0 - 1.0 / panels);
    BoundaryInfo info;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        bool outer = false;
        for (int j = 0; j < grid.dim() && !outer; ++j) outer = std::fabs(grid.coordinate(idx, j)) > inner;
        if (outer) info.magnitude = std::max(info.magnitude, std::abs(f.values()[idx]));
    }
    // w_k-measure of [-r, r]^d is prod_j 2 s_j r^(2k_j+1) / (2k_j+1)
    auto cube = [&](double r) {
        double m = 1.0;
        for (int j = 0; j < grid.dim(); ++j) {
            double const kj = grid.setup().k()[static_cast<std::size_t>(j)];
            m *= 2.0 * grid.setup().axis_scale(j) * std::pow(r, 2.0 * kj + 1.0) / (2.0 * kj + 1.0);
        }
        return m;
    };
    info.estimate = ck * info.magnitude * (cube(2.0 * grid.radius()) - cube(grid.radius()));
    return info;
}

std::vector<int> shape_of(const WeightedGrid& grid) { return std::vector<int>(static_cast<std::size_t>(grid.dim()), grid.n()); }

}  // namespace

DunklTransform::DunklTransform(GridPtr space, GridPtr frequency)
    : space_(std::move(space)), frequency_(std::move(frequency))
{
    if (!space_ || !frequency_) throw std::invalid_argument("DunklTransform: null grid");
    if (!(space_->setup() == frequency_->setup()))
        throw std::invalid_argument("DunklTransform: space and frequency grids use different setups");
    ck_ = mehta_constant(space_->setup());
    MultiplicitySetup const& setup = space_->setup();
    for (int j = 0; j < setup.dim(); ++j) {
        double const a = setup.axis_alpha(j);
        std::vector<double> const& y = space_->axis(j).nodes;
        std::vector<double> const& xi = frequency_->axis(j).nodes;
        std::size_t const hy = y.size() / 2;
        std::size_t const hx = xi.size() / 2;
        AxisKernel kernel{Eigen::MatrixXd(static_cast<Eigen::Index>(hx), static_cast<Eigen::Index>(hy)),
                          Eigen::MatrixXd(static_cast<Eigen::Index>(hx), static_cast<Eigen::Index>(hy))};
        double const odd_scale = 1.0 / (2.0 * (a + 1.0));
        parallel_for(hx, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t l = 0; l < hy; ++l) {
                    double const s = xi[hx + i] * y[hy + l];
                    auto const r = static_cast<Eigen::Index>(i);
                    auto const c = static_cast<Eigen::Index>(l);
                    kernel.even(r, c) = bessel_normalized(a, s);
                    kernel.odd(r, c) = s * odd_scale * bessel_normalized(a + 1.0, s);
                }
            }
        });
        kernels_.push_back(std::move(kernel));
    }
}

std::vector<Complex> DunklTransform::apply(std::span<const Complex> input, const std::vector<int>& in_shape,
                                           const std::vector<int>& out_shape, bool inverse) const
{
    double const sigma = inverse ? 1.0 : -1.0;
    std::vector<int> shape = in_shape;
    std::vector<Complex> current(input.begin(), input.end());
    int const d = static_cast<int>(shape.size());
    for (int j = 0; j < d; ++j) {
        std::size_t pre = 1, post = 1;
        for (int a = 0; a < j; ++a) pre *= static_cast<std::size_t>(shape[static_cast<std::size_t>(a)]);
        for (int a = j + 1; a < d; ++a) post *= static_cast<std::size_t>(shape[static_cast<std::size_t>(a)]);
        auto const len = static_cast<Eigen::Index>(shape[static_cast<std::size_t>(j)]);
        auto const m = static_cast<Eigen::Index>(out_shape[static_cast<std::size_t>(j)]);
        auto const hin = len / 2;
        auto const hout = m / 2;
        auto const cols = static_cast<Eigen::Index>(post);
        std::vector<Complex> next(pre * static_cast<std::size_t>(m) * post);
        AxisKernel const& kernel = kernels_[static_cast<std::size_t>(j)];

        for (std::size_t b = 0; b < pre; ++b) {
            Eigen::Map<const RowMajorComplex> slab(current.data() + b * static_cast<std::size_t>(len) * post, len, cols);
            Eigen::Map<RowMajorComplex> out(next.data() + b * static_cast<std::size_t>(m) * post, m, cols);
            RowMajorComplex const flipped = slab.topRows(hin).colwise().reverse();
            RowMajorComplex const even = slab.bottomRows(hin) + flipped;
            RowMajorComplex const odd = slab.bottomRows(hin) - flipped;
            Eigen::MatrixXd even_ri(hin, 2 * cols), odd_ri(hin, 2 * cols);
            even_ri << even.real(), even.imag();
            odd_ri << odd.real(), odd.imag();
            Eigen::MatrixXd ce, so;
            if (inverse) {
                ce.noalias() = kernel.even.transpose() * even_ri;
                so.noalias() = kernel.odd.transpose() * odd_ri;
            } else {
                ce.noalias() = kernel.even * even_ri;
                so.noalias() = kernel.odd * odd_ri;
            }
            auto const cer = ce.leftCols(cols), cei = ce.rightCols(cols);
            auto const sor = so.leftCols(cols), soi = so.rightCols(cols);
            RowMajorComplex pos(hout, cols), neg(hout, cols);
            pos.real() = cer - sigma * soi;
            pos.imag() = cei + sigma * sor;
            neg.real() = cer + sigma * soi;
            neg.imag() = cei - sigma * sor;
            out.bottomRows(hout) = pos;
            out.topRows(hout) = neg.colwise().reverse();
        }
        current = std::move(next);
        shape[static_cast<std::size_t>(j)] = out_shape[static_cast<std::size_t>(j)];
    }
    return current;
}

std::vector<Complex> DunklTransform::forward(std::span<const Complex> f) const
{
    if (f.size() != space_->size()) throw std::invalid_argument("DunklTransform::forward: size mismatch");
    std::vector<Complex> weighted(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) weighted[i] = f[i] * space_->weight(i);
    std::vector<Complex> out = apply(weighted, shape_of(*space_), shape_of(*frequency_), false);
    for (auto& v : out) v *= ck_;
    return out;
}

std::vector<Complex> DunklTransform::inverse(std::span<const Complex> spectrum) const
{
    if (spectrum.size() != frequency_->size()) throw std::invalid_argument("DunklTransform::inverse: size mismatch");
    std::vector<Complex> weighted(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) weighted[i] = spectrum[i] * frequency_->weight(i);
    std::vector<Complex> out = apply(weighted, shape_of(*frequency_), shape_of(*space_), true);
    for (auto& v : out) v *= ck_;
    return out;
}

Spectrum DunklTransform::transform(const SampledFunction& f) const
{
    if (!f.grid()->same_layout(*space_)) throw std::invalid_argument("DunklTransform::transform: grid mismatch");
    FunctionTag const tag = f.tag() == FunctionTag::generic ? FunctionTag::generic : f.tag();
    Spectrum out{SampledFunction(frequency_, forward(f.values()), tag), space_->dim() == 1 ? "dunkl-1d" : "dunkl-tensor"};
    BoundaryInfo const info = boundary_info(f, ck_);
    out.boundary_magnitude = info.magnitude;
    out.truncation_estimate = info.estimate;
    out.truncation_warning = info.magnitude > kTruncationLevel;
    return out;
}

SampledFunction DunklTransform::invert(const Spectrum& spectrum) const
{
    if (!spectrum.grid()->same_layout(*frequency_)) throw std::invalid_argument("DunklTransform::invert: grid mismatch");
    return invert_values(spectrum.values(), spectrum.samples.tag());
}

SampledFunction DunklTransform::invert_values(std::span<const Complex> spectrum, FunctionTag tag) const
{
    return SampledFunction(space_, inverse(spectrum), tag);
}

TransformPtr make_transform(GridPtr space, GridPtr frequency)
{
    return std::make_shared<const DunklTransform>(std::move(space), std::move(frequency));
}

Spectrum dunkl_transform_1d(const SampledFunction& f, GridPtr frequency_grid)
{
    if (f.grid()->dim() != 1) throw std::invalid_argument("dunkl_transform_1d: requires d = 1");
    return DunklTransform(f.grid(), std::move(frequency_grid)).transform(f);
}

SampledFunction dunkl_inverse_1d(const Spectrum& spectrum, GridPtr space_grid)
{
    if (spectrum.grid()->dim() != 1) throw std::invalid_argument("dunkl_inverse_1d: requires d = 1");
    return DunklTransform(std::move(space_grid), spectrum.grid()).invert(spectrum);
}

Spectrum dunkl_transform_z2d(const SampledFunction& f, GridPtr frequency_grid)
{
    if (frequency_grid->dim() != f.grid()->dim()) throw std::invalid_argument("dunkl_transform_z2d: dimension mismatch");
    return DunklTransform(f.grid(), std::move(frequency_grid)).transform(f);
}

double hankel_prefactor(double nu) { return 1.0 / (std::pow(2.0, nu) * gamma_fn(nu + 1.0)); }

std::vector<double> hankel_transform(double nu, const RadialGrid& radial, std::span<const double> profile_values,
                                     std::span<const double> s_values)
{
    BesselOrder const order(nu);
    if (profile_values.size() != radial.rule.size())
        throw std::invalid_argument("hankel_transform: profile size does not match radial grid");
    if (std::fabs(radial.power - (2.0 * nu + 1.0)) > 1e-12)
        throw std::invalid_argument("hankel_transform: radial grid must carry the weight r^(2 nu + 1)");
    double const pref = hankel_prefactor(nu);
    std::vector<double> out(s_values.size());
    parallel_for(s_values.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            quad::CompensatedSum sum;
            for (std::size_t l = 0; l < radial.rule.size(); ++l)
                sum.add(radial.rule.weights[l] * profile_values[l] *
                        bessel_normalized(order, radial.rule.nodes[l] * s_values[i]));
            out[i] = pref * sum.value();
        }
    });
    return out;
}

std::vector<double> hankel_transform(double nu, const RadialProfile& profile, const RadialGrid& radial,
                                     std::span<const double> s_values)
{
    std::vector<double> values(radial.rule.size());
    for (std::size_t l = 0; l < values.size(); ++l) values[l] = profile(radial.rule.nodes[l]);
    return hankel_transform(nu, radial, values, s_values);
}

double conjugate_exponent(double p)
{
    if (!(p >= 1.0)) throw std::invalid_argument("conjugate_exponent: p must be at least 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

double plancherel_defect(const SampledFunction& f, const DunklTransform& plan)
{
    if (f.is_zero()) throw std::invalid_argument("plancherel_defect: zero function");
    double const a = lp_norm(f, 2.0);
    double const b = lp_norm(*plan.frequency_grid(), plan.forward(f.values()), 2.0);
    return std::fabs(b - a) / a;
}

double hausdorff_young_ratio(const SampledFunction& f, double p, const DunklTransform& plan)
{
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("hausdorff_young_ratio: p must lie in [1, 2]");
    if (f.is_zero()) throw std::invalid_argument("hausdorff_young_ratio: zero function");
    double const num = lp_norm(*plan.frequency_grid(), plan.forward(f.values()), conjugate_exponent(p));
    return num / lp_norm(f, p);
}

}  // namespace dunkl
