#include "dunkl/besov.hpp"

#include "dunkl/operators.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

double mollifier(double v)
{
    // exp(-1/(1-u^2)) with u = 2v - 1, supported on (0, 1); 1 - u^2 = 4 v (1 - v)
    if (v <= 0.0 || v >= 1.0) return 0.0;
    return std::exp(-1.0 / (4.0 * v * (1.0 - v)));
}

const quad::Rule& mollifier_rule()
{
    static const quad::Rule rule = quad::gauss_legendre(32);
    return rule;
}

/// Integral of the mollifier over [0, upper], upper <= 1/2, on four equal panels.
double mollifier_integral(double upper)
{
    constexpr int panels = 4;
    quad::Rule const& rule = mollifier_rule();
    double const h = upper / panels;
    quad::CompensatedSum sum;
    for (int p = 0; p < panels; ++p)
        for (std::size_t i = 0; i < rule.size(); ++i)
            sum.add(0.5 * h * rule.weights[i] * mollifier(h * (p + 0.5 * (1.0 + rule.nodes[i]))));
    return sum.value();
}

double mollifier_cdf(double u)
{
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    static const double half = mollifier_integral(0.5);
    // symmetric about 1/2, so each side is integrated from its own flat end
    if (u > 0.5) return 1.0 - 0.5 * mollifier_integral(1.0 - u) / half;
    return 0.5 * mollifier_integral(u) / half;
}

double logistic_glue(double u)
{
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double const a = std::exp(-1.0 / u);
    double const b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

double lq_combine(const std::vector<double>& terms, double q)
{
    if (std::isinf(q)) {
        double m = 0.0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    quad::CompensatedSum sum;
    for (double t : terms) sum.add(std::pow(t, q));
    return std::pow(std::max(sum.value(), 0.0), 1.0 / q);
}

/// Nodes and weights (s^(2 nu + 1) included) covering the support of psi_j.
quad::Rule frequency_rule(const AdmissibleSequence& seq, int j, double nu)
{
    // r s reaches 1600 on the l1 domain; 16 nodes per panel cover two periods of the kernel
    constexpr int panels = 96;
    constexpr int order = 16;
    auto const [a, b] = seq.support(j);
    if (a == 0.0) return quad::half_line_rule(b, panels, order, 2.0 * nu + 1.0);
    quad::Rule const gl = quad::gauss_legendre(order);
    quad::Rule out;
    double const h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double const left = a + p * h;
        for (std::size_t i = 0; i < gl.size(); ++i) {
            double const s = left + 0.5 * h * (1.0 + gl.nodes[i]);
            out.nodes.push_back(s);
            out.weights.push_back(0.5 * h * gl.weights[i] * std::pow(s, 2.0 * nu + 1.0));
        }
    }
    return out;
}

double radial_order(const MultiplicitySetup& setup) { return setup.dim() == 1 ? setup.alpha() : setup.bessel_order(); }

std::vector<Complex> multiply_radial(const Spectrum& spectrum, const std::function<double(double)>& m)
{
    WeightedGrid const& grid = *spectrum.grid();
    std::vector<Complex> v = spectrum.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= m(grid.norm(i));
    return v;
}

void require_frequency_grid(const Spectrum& spectrum, const DunklTransform& plan)
{
    if (!spectrum.grid()->same_layout(*plan.frequency_grid()))
        throw std::invalid_argument("besov: spectrum is not on the plan's frequency grid");
}

LogIntegral integrate_log(std::vector<double> t, std::vector<double> integrand, double q, int per_octave)
{
    LogIntegral out;
    double const step = std::numbers::ln2 / per_octave;
    if (std::isinf(q)) {
        out.value = *std::max_element(integrand.begin(), integrand.end());
    } else {
        quad::CompensatedSum sum;
        for (std::size_t i = 0; i < integrand.size(); ++i) {
            double const w = (i == 0 || i + 1 == integrand.size()) ? 0.5 * step : step;
            sum.add(w * std::pow(integrand[i], q));
        }
        out.value = std::pow(std::max(sum.value(), 0.0), 1.0 / q);
    }
    out.head = integrand.front();
    out.tail = integrand.back();
    out.t_values = std::move(t);
    out.integrand = std::move(integrand);
    return out;
}

}  // namespace

const char* to_string(PlateauKind kind) { return kind == PlateauKind::mollifier ? "mollifier" : "logistic"; }

double plateau(PlateauKind kind, double s)
{
    s = std::fabs(s);
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    return kind == PlateauKind::mollifier ? mollifier_cdf(2.0 - s) : logistic_glue(2.0 - s);
}

void BesovParams::validate() const
{
    if (!(beta > 0.0)) throw std::invalid_argument("BesovParams: beta must be positive");
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("BesovParams: p must lie in [1, 2]");
    if (!(q >= 1.0)) throw std::invalid_argument("BesovParams: q must be at least 1");
}

AdmissibleSequence::AdmissibleSequence(MultiplicitySetup setup, int j_max, PlateauKind kind)
    : setup_(std::move(setup)), j_max_(j_max), kind_(kind)
{
}

AdmissibleSequence AdmissibleSequence::build(const MultiplicitySetup& setup, int j_max, PlateauKind kind)
{
    if (j_max < 2) throw std::invalid_argument("build_admissible: j_max must be at least 2");
    AdmissibleSequence seq(setup, j_max, kind);
    for (int j = 0; j <= j_max; ++j) seq.l1_norms_.push_back(seq.compute_l1_norm(j));
    return seq;
}

double AdmissibleSequence::psi(int j, double radius) const
{
    if (j < 0) return 0.0;
    if (j == 0) return plateau(kind_, radius);
    return plateau(kind_, std::ldexp(radius, -j)) - plateau(kind_, std::ldexp(radius, 1 - j));
}

std::pair<double, double> AdmissibleSequence::support(int j) const
{
    if (j == 0) return {0.0, 2.0};
    return {std::ldexp(1.0, j - 1), std::ldexp(1.0, j + 1)};
}

std::vector<double> AdmissibleSequence::psi_values(int j, const WeightedGrid& frequency) const
{
    std::vector<double> out(frequency.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi(j, frequency.norm(i));
    return out;
}

double AdmissibleSequence::phi_profile(int j, double r) const
{
    double const nu = radial_order(setup_);
    quad::Rule const rule = frequency_rule(*this, j, nu);
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < rule.size(); ++i)
        sum.add(rule.weights[i] * psi(j, rule.nodes[i]) * bessel_normalized(nu, r * rule.nodes[i]));
    return hankel_prefactor(nu) * sum.value();
}

double AdmissibleSequence::compute_l1_norm(int j) const
{
    // psi_j(s) = psi_1(2^{1-j} s) for j >= 1, so phi_j is a norm-preserving dilation of phi_1
    if (j >= 2) return l1_norms_.at(1);
    double const nu = radial_order(setup_);
    double const power = 2.0 * nu + 1.0;
    quad::Rule const s_rule = frequency_rule(*this, j, nu);
    std::vector<double> psi_w(s_rule.size());
    for (std::size_t i = 0; i < s_rule.size(); ++i) psi_w[i] = s_rule.weights[i] * psi(j, s_rule.nodes[i]);
    double const pref = hankel_prefactor(nu);
    auto phi = [&](double r) {
        quad::CompensatedSum sum;
        for (std::size_t i = 0; i < s_rule.size(); ++i) sum.add(psi_w[i] * bessel_normalized(nu, r * s_rule.nodes[i]));
        return pref * sum.value();
    };
    auto eval_all = [&](const std::vector<double>& r) {
        std::vector<double> v(r.size());
        parallel_for(r.size(), [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) v[i] = phi(r[i]);
        });
        return v;
    };

    // |phi_j| r^(2 nu + 1) falls below 1e-7 near r = 400; the remaining tail is under 1e-6 of the norm
    constexpr double radius = 400.0;
    constexpr double step = 0.1;
    std::vector<double> grid;
    for (int i = 0; i * step <= radius; ++i) grid.push_back(i * step);
    std::vector<double> const sampled = eval_all(grid);

    // split [0, radius] at the sign changes of phi, located by regula falsi (Illinois)
    std::vector<double> cuts{0.0};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(sampled[i] * sampled[i + 1] < 0.0)) continue;
        double a = grid[i], b = grid[i + 1], fa = sampled[i], fb = sampled[i + 1];
        int side = 0;
        for (int it = 0; it < 40 && b - a > 1e-13; ++it) {
            double const c = (a * fb - b * fa) / (fb - fa);
            double const fc = phi(c);
            if (fc == 0.0) {
                a = b = c;
                break;
            }
            if (fc * fb < 0.0) {
                a = b;
                fa = fb;
                b = c;
                fb = fc;
                if (side == -1) fa *= 0.5;
                side = -1;
            } else {
                b = c;
                fb = fc;
                if (side == 1) fa *= 0.5;
                side = 1;
            }
        }
        cuts.push_back(0.5 * (a + b));
    }
    cuts.push_back(radius);

    constexpr double max_width = 0.5;
    constexpr int order = 12;
    quad::Rule const gl = quad::gauss_legendre(order);
    std::vector<double> nodes, weights;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        double const lo = cuts[c], hi = cuts[c + 1];
        int const panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
        if (c == 0) {
            quad::Rule const first = quad::half_line_rule(hi, panels, order, power);
            nodes.insert(nodes.end(), first.nodes.begin(), first.nodes.end());
            weights.insert(weights.end(), first.weights.begin(), first.weights.end());
            continue;
        }
        double const h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p)
            for (std::size_t i = 0; i < gl.size(); ++i) {
                double const r = lo + p * h + 0.5 * h * (1.0 + gl.nodes[i]);
                nodes.push_back(r);
                weights.push_back(0.5 * h * gl.weights[i] * std::pow(r, power));
            }
    }
    std::vector<double> const values = eval_all(nodes);
    quad::CompensatedSum total;
    for (std::size_t i = 0; i < nodes.size(); ++i) total.add(weights[i] * std::fabs(values[i]));
    return radial_mass(setup_) * total.value();
}

AdmissibleSequence AdmissibleSequence::with_j_max(int j_max) const
{
    if (j_max < 2) throw std::invalid_argument("with_j_max: j_max must be at least 2");
    AdmissibleSequence out(setup_, j_max, kind_);
    for (int j = 0; j <= j_max; ++j) out.l1_norms_.push_back(l1_norms_[static_cast<std::size_t>(std::min(j, 1))]);
    return out;
}

double AdmissibleSequence::max_phi_l1() const { return *std::max_element(l1_norms_.begin(), l1_norms_.end()); }

double radial_mass(const MultiplicitySetup& setup)
{
    if (setup.dim() == 1) return 2.0 * setup.axis_scale(0);
    return sphere_constant(setup);
}

Spectrum dyadic_block_spectrum(const Spectrum& spectrum, const AdmissibleSequence& seq, int j)
{
    std::vector<Complex> v = multiply_radial(spectrum, [&](double r) { return seq.psi(j, r); });
    FunctionTag const tag = spectrum.samples.tag();
    return Spectrum{SampledFunction(spectrum.grid(), std::move(v), tag), "block-" + std::to_string(j)};
}

SampledFunction dyadic_block(const Spectrum& spectrum, const AdmissibleSequence& seq, int j, const DunklTransform& plan)
{
    require_frequency_grid(spectrum, plan);
    return plan.invert(dyadic_block_spectrum(spectrum, seq, j));
}

SeminormResult besov_seminorm(const Spectrum& spectrum, const AdmissibleSequence& seq, const BesovParams& params,
                              const DunklTransform& plan)
{
    params.validate();
    require_frequency_grid(spectrum, plan);
    SeminormResult out;
    for (int j = 0; j <= seq.j_max(); ++j) {
        double const norm = lp_norm(dyadic_block(spectrum, seq, j, plan), params.p);
        out.block_norms.push_back(norm);
        out.weighted_terms.push_back(std::pow(2.0, j * params.beta) * norm);
    }
    out.value = lq_combine(out.weighted_terms, params.q);
    out.truncation_residual = out.weighted_terms.back();
    out.certified = !std::isinf(params.q);
    return out;
}

Reconstruction reconstruct(const SampledFunction& f, const Spectrum& spectrum, const AdmissibleSequence& seq, int J,
                           double p, const DunklTransform& plan)
{
    require_frequency_grid(spectrum, plan);
    if (J < 0 || J > seq.j_max()) throw std::invalid_argument("reconstruct: J outside 0..j_max");
    std::vector<Complex> v = multiply_radial(spectrum, [&](double r) {
        double s = 0.0;
        for (int j = 0; j <= J; ++j) s += seq.psi(j, r);
        return s;
    });
    SampledFunction partial = plan.invert_values(v, spectrum.samples.tag());
    double const error = lp_norm(f - partial, p);
    return {std::move(partial), error};
}

double outside_mass_fraction(const Spectrum& spectrum, double a, double b)
{
    WeightedGrid const& grid = *spectrum.grid();
    quad::CompensatedSum inside, outside;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double const m = std::norm(spectrum.values()[i]) * grid.weight(i);
        double const r = grid.norm(i);
        (r < a || r > b ? outside : inside).add(m);
    }
    double const total = inside.value() + outside.value();
    return total > 0.0 ? outside.value() / total : 0.0;
}

DecompositionResult decompose_verify(const BlockSequence& g, const AdmissibleSequence& seq, const BesovParams& params,
                                     const DunklTransform& plan)
{
    params.validate();
    if (g.blocks.empty()) throw std::invalid_argument("decompose_verify: empty block sequence");
    GridPtr const& freq = plan.frequency_grid();
    std::vector<Complex> total(freq->size(), Complex{});
    std::vector<double> block_terms;
    for (std::size_t j = 0; j < g.blocks.size(); ++j) {
        Spectrum const& block = g.blocks[j];
        require_frequency_grid(block, plan);
        auto const [a, b] = seq.support(static_cast<int>(j));
        if (outside_mass_fraction(block, a, b) > kBlockSupportTolerance)
            throw std::invalid_argument("decompose_verify: block " + std::to_string(j) + " has spectrum outside its annulus");
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += block.values()[i];
        block_terms.push_back(std::pow(2.0, static_cast<double>(j) * params.beta) *
                              lp_norm(plan.invert(block), params.p));
    }
    DecompositionResult out{Spectrum{SampledFunction(freq, std::move(total)), "assembled"}, {}, {}, {}, {}, {}, {}};
    out.seminorm = besov_seminorm(out.assembled, seq, params, plan).value;
    out.block_star = lq_combine(block_terms, params.q);
    out.empirical_constant = out.block_star > 0.0 ? out.seminorm / out.block_star : 0.0;
    out.assembly_constant = seq.max_phi_l1() * (std::pow(2.0, params.beta) + 1.0 + std::pow(2.0, -params.beta));
    for (int j = 0; j <= seq.j_max(); ++j) {
        std::vector<int> coupled;
        for (std::size_t i = 0; i < g.blocks.size(); ++i) {
            double peak = 0.0;
            WeightedGrid const& grid = *g.blocks[i].grid();
            for (std::size_t n = 0; n < grid.size(); ++n)
                peak = std::max(peak, std::abs(seq.psi(j, grid.norm(n)) * g.blocks[i].values()[n]));
            if (peak > 1e-14) coupled.push_back(static_cast<int>(i));
        }
        out.coupling.push_back(std::move(coupled));
    }
    out.holds = out.seminorm <= out.assembly_constant * out.block_star * (1.0 + 1e-9) + 1e-12;
    return out;
}

EquivalenceResult compact_spectrum_equivalence(const Spectrum& spectrum, double a, double b,
                                               const AdmissibleSequence& seq, const BesovParams& params,
                                               const DunklTransform& plan)
{
    params.validate();
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("compact_spectrum_equivalence: K must be an annulus away from 0");
    if (outside_mass_fraction(spectrum, a, b) > kBlockSupportTolerance)
        throw std::invalid_argument("compact_spectrum_equivalence: spectrum not contained in K");
    EquivalenceResult out;
    out.seminorm = besov_seminorm(spectrum, seq, params, plan).value;
    out.lp_norm = lp_norm(plan.invert(spectrum), params.p);
    if (out.lp_norm <= kZeroThreshold || out.seminorm <= kZeroThreshold)
        throw std::invalid_argument("compact_spectrum_equivalence: zero function");
    out.ratio_high = out.seminorm / out.lp_norm;
    out.ratio_low = out.lp_norm / out.seminorm;
    std::vector<double> high_terms, low_terms;
    double const qc = conjugate_exponent(params.q);
    for (int j = 0; j <= seq.j_max(); ++j) {
        auto const [lo, hi] = seq.support(j);
        if (!(lo < b && hi > a)) continue;
        out.index_set.push_back(j);
        high_terms.push_back(std::pow(2.0, j * params.beta) * seq.phi_l1_norms()[static_cast<std::size_t>(j)]);
        low_terms.push_back(std::pow(2.0, -j * params.beta));
    }
    out.bound_high = lq_combine(high_terms, params.q);
    out.bound_low = lq_combine(low_terms, qc);
    return out;
}

SpaceProfile annular_profile()
{
    SpaceProfile out;
    out.name = "annular_bump";
    out.cls = ProfileClass::annular;
    out.spectrum = [](double s) {
        s = std::fabs(s);
        if (s <= 1.0 || s >= 2.0) return 0.0;
        double const u = 2.0 * s - 3.0;
        return std::exp(1.0 - 1.0 / (1.0 - u * u));
    };
    return out;
}

SpaceProfile gaussian_derivative_profile(double alpha)
{
    SpaceProfile out;
    out.name = "gaussian_derivative";
    out.cls = ProfileClass::zero_mean;
    out.spectrum = [](double s) { return -s * s * std::exp(-0.5 * s * s); };
    out.space = [alpha](double x) { return (x * x - 2.0 * (alpha + 1.0)) * std::exp(-0.5 * x * x); };
    return out;
}

double zero_mean_integral(const SpaceProfile& profile, double alpha)
{
    if (!profile.space) throw std::invalid_argument("zero_mean_integral: profile has no closed-form space side");
    quad::Rule const rule = quad::half_line_rule(40.0, 80, 16, 2.0 * alpha + 1.0);
    double const scale = 1.0 / (std::pow(2.0, alpha + 1.0) * gamma_fn(alpha + 1.0));
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < rule.size(); ++i) sum.add(rule.weights[i] * profile.space(rule.nodes[i]));
    return scale * sum.value();
}

std::vector<double> log_uniform_t(int octaves, int per_octave)
{
    if (octaves < 1 || per_octave < 1) throw std::invalid_argument("log_uniform_t: empty range");
    std::vector<double> t;
    for (int m = -octaves * per_octave; m <= octaves * per_octave; ++m)
        t.push_back(std::exp2(static_cast<double>(m) / per_octave));
    return t;
}

std::vector<std::vector<double>> profile_block_norms(const Spectrum& spectrum, const SpaceProfile& profile,
                                                     std::span<const double> p_values, const DunklTransform& plan,
                                                     int octaves, int per_octave)
{
    require_frequency_grid(spectrum, plan);
    MultiplicitySetup const& setup = plan.frequency_grid()->setup();
    if (profile.cls == ProfileClass::annular) {
        for (double s : {0.0, 0.5, 0.999, 2.001, 3.0, 10.0})
            if (profile.spectrum(s) != 0.0)
                throw std::invalid_argument("continuous_seminorm: profile spectrum leaves 1 <= |xi| <= 2");
    } else {
        if (setup.dim() != 1) throw std::invalid_argument("continuous_seminorm: zero-mean class is one-dimensional");
        if (std::fabs(profile.spectrum(0.0)) > 1e-12)
            throw std::invalid_argument("continuous_seminorm: profile does not have zero mean");
    }
    std::vector<double> const t = log_uniform_t(octaves, per_octave);
    std::vector<std::vector<double>> norms(p_values.size(), std::vector<double>(t.size(), 0.0));
    for (std::size_t m = 0; m < t.size(); ++m) {
        std::vector<Complex> const v = multiply_radial(spectrum, [&](double r) { return profile.spectrum(t[m] * r); });
        if (std::all_of(v.begin(), v.end(), [](Complex z) { return z == Complex{}; })) continue;
        std::vector<Complex> const conv = plan.inverse(v);
        for (std::size_t i = 0; i < p_values.size(); ++i) norms[i][m] = lp_norm(*plan.space_grid(), conv, p_values[i]);
    }
    return norms;
}

LogIntegral integrate_log_uniform(std::vector<double> t, const std::vector<double>& values, double beta, double q,
                                  int per_octave)
{
    std::vector<double> integrand(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) integrand[i] = values[i] / std::pow(t[i], beta);
    return integrate_log(std::move(t), std::move(integrand), q, per_octave);
}

LogIntegral continuous_seminorm(const Spectrum& spectrum, const SpaceProfile& profile, const BesovParams& params,
                                const DunklTransform& plan, int octaves, int per_octave)
{
    params.validate();
    double const ps[] = {params.p};
    auto const norms = profile_block_norms(spectrum, profile, ps, plan, octaves, per_octave);
    return integrate_log_uniform(log_uniform_t(octaves, per_octave), norms.front(), params.beta, params.q, per_octave);
}

LogIntegral modulus_seminorm(const Spectrum& spectrum, const BesovParams& params, const DunklTransform& plan,
                             int octaves, int per_octave)
{
    params.validate();
    std::vector<double> const t = log_uniform_t(octaves, per_octave);
    double const ps[] = {params.p};
    ModulusCurve const curve = modulus_1d(spectrum, plan, ps, t).front();
    return integrate_log_uniform(t, curve.omega_values, params.beta, params.q, per_octave);
}

}  // namespace dunkl
