#include "dunkl/suites.hpp"

#include "dunkl/besov.hpp"
#include "dunkl/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace dunkl {

namespace {

TransformPtr plan_1d(double alpha, double radius, int n)
{
    GridPtr const grid = WeightedGrid::make(MultiplicitySetup::rank_one(alpha), radius, n);
    return make_transform(grid, grid);
}

TransformPtr plan_radial(const VerifyConfig& cfg, int n)
{
    MultiplicitySetup const setup = MultiplicitySetup::product(cfg.k);
    return make_transform(WeightedGrid::make(setup, cfg.radial_radius, n),
                          WeightedGrid::make(setup, cfg.radial_frequency_radius, n));
}

Json grid_json(const DunklTransform& plan)
{
    WeightedGrid const& s = *plan.space_grid();
    WeightedGrid const& f = *plan.frequency_grid();
    return Json{{"setup", s.setup().describe()},
                {"space_radius", s.radius()},
                {"frequency_radius", f.radius()},
                {"n", s.n()},
                {"order", s.order()}};
}

std::vector<CatalogSample> realize_all(const std::vector<std::string>& names, const DunklTransform& plan,
                                       std::uint64_t seed)
{
    std::vector<CatalogSample> out;
    for (const auto& name : names)
        out.push_back(realize(catalog_entry(name, plan.space_grid()->setup(), seed), plan));
    return out;
}

std::string truncation_note(const CatalogSample& s)
{
    return s.spectrum.truncation_warning ? "space samples not decayed at the grid boundary" : "";
}

std::vector<double> unique_values(std::vector<double> v)
{
    std::vector<double> out;
    for (double x : v)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

double sphere_area(int d)
{
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

// ---------------------------------------------------------------- normalization

SuiteReport suite_normalization(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "normalization";
    for (double alpha : unique_values({-0.25, 0.5, 1.5, cfg.alpha})) {
        MultiplicitySetup const setup = MultiplicitySetup::rank_one(alpha);
        GridPtr const grid = WeightedGrid::make(setup, cfg.radius, cfg.grid_n);
        Json const in{{"alpha", alpha}, {"radius", cfg.radius}, {"n", cfg.grid_n}};
        r.check_close("mehta constant closed form", in, mehta_constant(setup), 1.0, 1e-8);
        r.check_close("mehta constant by quadrature", in, grid->mehta_estimate(), mehta_constant(setup), 1e-8);
    }
    MultiplicitySetup const flat = MultiplicitySetup::product({0.0, 0.0});
    r.check_close("sphere constant d=2 k=0", Json{{"k", {0.0, 0.0}}}, sphere_constant(flat), 2.0 * std::numbers::pi, 1e-6);

    MultiplicitySetup const demo = MultiplicitySetup::product(cfg.k);
    Json const kin{{"k", cfg.k}};
    if (demo.dim() == 2)
        r.check_close("sphere constant vs circle quadrature", kin, sphere_mass_quadrature(demo), sphere_constant(demo),
                      1e-10);
    GridPtr const grid = WeightedGrid::make(demo, cfg.radial_radius, cfg.radial_n);
    Json const gin{{"k", cfg.k}, {"radius", cfg.radial_radius}, {"n", cfg.radial_n}};
    r.check_close("mehta constant by quadrature", gin, grid->mehta_estimate(), mehta_constant(demo),
                  1e-8 * mehta_constant(demo));
    auto const [lhs, rhs] = radial_integral_check([](double s) { return std::exp(-0.5 * s * s); }, *grid);
    r.check_close("polar formula for the Gaussian", gin, lhs, rhs, 1e-8 * std::fabs(rhs));
    r.setup = Json{{"alpha_values", {-0.25, 0.5, 1.5, cfg.alpha}}, {"k", cfg.k}};
    return r;
}

// ---------------------------------------------------------------- plancherel

SuiteReport suite_plancherel(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "plancherel";
    TransformPtr const plan = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n);
    r.setup = grid_json(*plan);
    for (const auto& s : realize_all(catalog_names(1), *plan, cfg.seed)) {
        double const tol = s.entry.name == "gaussian" ? 1e-6 : 1e-5;
        double const defect = plancherel_defect(s.f, *plan);
        Json const in{{"f", s.entry.name}};
        r.check_upper("isometry defect", in, defect, tol, truncation_note(s));
        for (double p : cfg.p) {
            if (p == 2.0) continue;
            r.check_upper("Hausdorff-Young ratio", Json{{"f", s.entry.name}, {"p", p}},
                          hausdorff_young_ratio(s.f, p, *plan), 1.0);
        }
    }
    TransformPtr const radial = plan_radial(cfg, cfg.radial_n);
    double const ck = radial->prefactor();
    for (const auto& s : realize_all(catalog_names(2), *radial, cfg.seed)) {
        Json const in{{"f", s.entry.name}, {"k", cfg.k}};
        r.check_upper("isometry defect", in, plancherel_defect(s.f, *radial), s.entry.name == "gaussian" ? 1e-6 : 1e-5);
        for (double p : cfg.p) {
            if (p == 2.0) continue;
            // Riesz-Thorin between |F f| <= c_k ||f||_1 and Plancherel
            r.check_upper("Hausdorff-Young ratio", Json{{"f", s.entry.name}, {"k", cfg.k}, {"p", p}},
                          hausdorff_young_ratio(s.f, p, *radial), std::pow(ck, 2.0 / p - 1.0));
        }
    }
    return r;
}

// ---------------------------------------------------------------- self-reciprocity

double sup_error(const Spectrum& spectrum, const PointFunction& exact)
{
    WeightedGrid const& grid = *spectrum.grid();
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        err = std::max(err, std::abs(spectrum.values()[i] - exact(grid.point(i))));
    return err;
}

SuiteReport suite_self_reciprocity(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "self-reciprocity";
    for (double alpha : unique_values({cfg.alpha, -0.25})) {
        TransformPtr const plan = plan_1d(alpha, cfg.radius, cfg.grid_n);
        for (const char* name : {"gaussian", "laguerre"}) {
            CatalogSample const s = realize(catalog_entry(name, plan->space_grid()->setup()), *plan);
            r.check_upper("sup error against closed form", Json{{"f", name}, {"alpha", alpha}},
                          sup_error(s.spectrum, s.entry.spectrum), 1e-6);
        }
    }
    TransformPtr const radial = plan_radial(cfg, cfg.radial_n);
    r.setup = Json{{"one_dimensional", {{"alpha", unique_values({cfg.alpha, -0.25})}, {"radius", cfg.radius}, {"n", cfg.grid_n}}},
                   {"radial", grid_json(*radial)}};
    MultiplicitySetup const& setup = radial->space_grid()->setup();
    double const nu = setup.bessel_order();
    CatalogSample const g = realize(catalog_entry("gaussian", setup), *radial);
    Json const in{{"f", "gaussian"}, {"k", cfg.k}, {"n", cfg.radial_n}};
    r.check_upper("tensor transform sup error against closed form", in, sup_error(g.spectrum, g.entry.spectrum), 1e-5);

    // Hankel path on every distinct frequency radius of the first quadrant
    WeightedGrid const& freq = *radial->frequency_grid();
    std::map<double, Complex> tensor;
    for (std::size_t i = 0; i < freq.size(); ++i) {
        bool positive = true;
        for (int j = 0; j < freq.dim(); ++j) positive = positive && freq.coordinate(i, j) > 0.0;
        if (positive) tensor.emplace(freq.norm(i), g.spectrum.values()[i]);
    }
    std::vector<double> radii;
    for (const auto& [rad, v] : tensor) radii.push_back(rad);
    RadialGrid const rg = make_radial_grid(cfg.radial_radius, 2.0 * nu + 1.0);
    std::vector<double> const hankel = hankel_transform(nu, g.entry.radial, rg, radii);
    double err = 0.0;
    std::size_t i = 0;
    for (const auto& [rad, v] : tensor) err = std::max(err, std::abs(v - hankel[i++]));
    r.check_upper("tensor transform vs Hankel transform", in, err, 1e-5);
    return r;
}

// ---------------------------------------------------------------- kernel identity

SuiteReport suite_kernel_identity(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "kernel-identity";
    constexpr int side = 100;
    std::vector<double> ts, xs;
    for (int i = 0; i < side; ++i) {
        ts.push_back(-30.0 + 60.0 * (i + 0.5) / side);
        xs.push_back(-20.0 + 40.0 * (i + 0.5) / side);
    }
    for (double alpha : unique_values({-0.25, 0.5, 1.5, cfg.alpha})) {
        double worst = 0.0, modulus = 0.0;
        for (double t : ts)
            for (double x : xs) {
                KernelValue const plus = dunkl_kernel_1d(alpha, t, x);
                KernelValue const minus = dunkl_kernel_1d(alpha, -t, x);
                double const lhs = std::abs(plus + minus - 2.0);
                double const rhs = 2.0 * std::fabs(bessel_gap(alpha, t * x));
                worst = std::max(worst, std::fabs(lhs - rhs));
                modulus = std::max(modulus, std::abs(plus));
            }
        Json const in{{"alpha", alpha}, {"lattice", side * side}};
        r.check_upper("|E(itx)+E(-itx)-2| - 2|1-j(tx)|", in, worst, 1e-12);
        r.check_upper("|E(itx)| <= 1", in, modulus, 1.0);
    }
    MultiplicitySetup const setup = MultiplicitySetup::product(cfg.k);
    double modulus = 0.0;
    std::vector<double> y(static_cast<std::size_t>(setup.dim())), x(y.size());
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            for (std::size_t a = 0; a < y.size(); ++a) {
                y[a] = ts[static_cast<std::size_t>((i + 7 * static_cast<int>(a)) % side)];
                x[a] = xs[static_cast<std::size_t>((j + 13 * static_cast<int>(a)) % side)];
            }
            modulus = std::max(modulus, std::abs(dunkl_kernel_product(setup, y, x)));
        }
    r.check_upper("|E_k(iy, x)| <= 1", Json{{"k", cfg.k}, {"lattice", side * side}}, modulus, 1.0);
    r.setup = Json{{"t_range", {-30.0, 30.0}}, {"x_range", {-20.0, 20.0}}, {"side", side}};
    return r;
}

// ---------------------------------------------------------------- translation and Young

SuiteReport suite_translation_young(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "translation-young";
    TransformPtr const plan = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n);
    auto const samples = realize_all(catalog_names(1), *plan, cfg.seed);
    for (const auto& f : samples) {
        for (double x0 : {-1.5, 0.5, 1.0, 2.0, 4.0}) {
            double const shift[] = {x0};
            SampledFunction const tf = translate(f.spectrum, shift, *plan);
            for (double p : cfg.p)
                r.check_upper("||tau_x f||_p <= 3 ||f||_p", Json{{"f", f.entry.name}, {"x", x0}, {"p", p}},
                              lp_norm(tf, p), 3.0 * lp_norm(f.f, p));
        }
    }
    for (const auto& g : samples) {
        bool const even = g.entry.tag == FunctionTag::even;
        double const g1 = lp_norm(g.f, 1.0);
        for (const auto& f : samples) {
            SampledFunction const conv = convolve(f.spectrum, g.spectrum, *plan);
            for (double p : cfg.p) {
                Json const in{{"f", f.entry.name}, {"g", g.entry.name}, {"p", p}};
                double const lhs = lp_norm(conv, p);
                double const rhs = lp_norm(f.f, p) * g1;
                if (even) r.check_upper("Young ||f*g||_p <= ||f||_p ||g||_1", in, lhs, rhs);
                else r.info("Young ratio (g not even; no assertion)", in, rhs > 0.0 ? lhs / rhs : 0.0);
            }
        }
    }
    TransformPtr const radial = plan_radial(cfg, cfg.radial_n);
    auto const rsamples = realize_all(catalog_names(2), *radial, cfg.seed);
    std::vector<std::vector<double>> const shifts{{0.5, 0.0}, {1.0, 1.0}, {-2.0, 1.5}};
    for (const auto& f : rsamples) {
        for (const auto& x0 : shifts) {
            std::vector<double> shift(x0.begin(), x0.end());
            shift.resize(static_cast<std::size_t>(radial->space_grid()->dim()), 0.0);
            SampledFunction const tf = translate(f.spectrum, shift, *radial);
            for (double p : cfg.p)
                r.check_upper("||tau_x f||_p <= ||f||_p (radial f)", Json{{"f", f.entry.name}, {"x", shift}, {"p", p}},
                              lp_norm(tf, p), lp_norm(f.f, p));
        }
        for (const auto& g : rsamples) {
            SampledFunction const conv = convolve(f.spectrum, g.spectrum, *radial);
            double const g1 = lp_norm(g.f, 1.0);
            for (double p : cfg.p)
                r.check_upper("Young ||f*g||_p <= ||f||_p ||g||_1 (radial)",
                              Json{{"f", f.entry.name}, {"g", g.entry.name}, {"p", p}}, lp_norm(conv, p),
                              lp_norm(f.f, p) * g1);
        }
    }
    r.setup = Json{{"one_dimensional", grid_json(*plan)}, {"radial", grid_json(*radial)}};
    return r;
}

// ---------------------------------------------------------------- Bessel gap ratio

SuiteReport suite_bessel_gap(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "bessel-gap";
    double const radial_nu = MultiplicitySetup::product(cfg.k).bessel_order();
    std::vector<double> const orders = unique_values({-0.25, 0.5, 1.5, cfg.alpha, cfg.l1_alpha, radial_nu});
    for (double nu : orders) {
        GapRatioSample const g = sample_gap_ratio(nu);
        Json const in{{"nu", nu}, {"s_range", {1e-3, 1e3}}};
        r.check("min ratio > 0", in, g.min > 0.0, g.min, 0.0, "lhs > 0");
        r.check("max ratio finite", in, std::isfinite(g.max), g.max, 0.0, "lhs finite");
        r.check_upper("small-s limit", Json{{"nu", nu}, {"s", 1e-4}}, std::fabs(g.at_small_s / g.limit - 1.0), 0.01,
                      "relative deviation from 1/(4(nu+1))");
        if (nu == 0.5) r.check_upper("max ratio", in, g.max, 2.1);
    }
    r.setup = Json{{"orders", orders}, {"samples", 2001}};
    return r;
}

// ---------------------------------------------------------------- transform estimates (line)

struct EstimateCurves {
    std::vector<double> t;
    std::vector<std::vector<double>> lhs, tail, omega;  // [p][t]
};

EstimateCurves estimate_curves(const CatalogSample& s, const DunklTransform& plan, const std::vector<double>& ps,
                               const std::vector<double>& ts, bool radial, int angles)
{
    EstimateCurves c;
    c.t = ts;
    std::vector<ModulusCurve> const curves =
        radial ? modulus_radial(s.spectrum, plan, ps, ts, angles) : modulus_1d(s.spectrum, plan, ps, ts);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        c.omega.push_back(curves[i].omega_values);
        std::vector<double> lhs, tail;
        for (double t : ts) {
            lhs.push_back(smoothness_weighted_norm(s.spectrum, t, ps[i]));
            tail.push_back(spectral_tail_norm(s.spectrum, t, ps[i]));
        }
        c.lhs.push_back(std::move(lhs));
        c.tail.push_back(std::move(tail));
    }
    return c;
}

double max_ratio(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, b[i] > 0.0 ? a[i] / b[i] : (a[i] > 0.0 ? INFINITY : 0.0));
    return m;
}

struct EstimateContext {
    std::string label;
    double sphere = 2.0;  // factor between omega_2 and the multiplier (2 on the line, |S^{d-1}| radial)
    GapRatioSample gap;
};

void record_estimates(SuiteReport& r, const EstimateContext& ctx, const std::string& name, const std::vector<double>& ps,
                      const EstimateCurves& fine, const EstimateCurves& coarse, const std::string& note)
{
    for (std::size_t i = 0; i < ps.size(); ++i) {
        double const p = ps[i];
        Json const in{{"f", name}, {"p", p}};
        double const c_fine = max_ratio(fine.lhs[i], fine.omega[i]);
        double const c_coarse = max_ratio(coarse.lhs[i], coarse.omega[i]);
        r.refinement(ctx.label + ": LHS <= C omega_p, C = max_t LHS/omega", in, c_coarse, c_fine, kRefinementTolerance,
                     note);
        r.check_upper("tail form <= full form", in, max_ratio(fine.tail[i], fine.lhs[i]), 1.0,
                      "max over t of tail/LHS");
        // small-t behaviour: ratio at the two smallest t
        r.info("LHS/omega at smallest t", Json{{"f", name}, {"p", p}, {"t", fine.t.front()}},
               fine.omega[i].front() > 0.0 ? fine.lhs[i].front() / fine.omega[i].front() : 0.0);
        for (std::size_t m = 0; m < fine.t.size(); ++m)
            r.table.push_back({name + "/p=" + std::to_string(p).substr(0, 4), fine.t[m], fine.lhs[i][m], fine.omega[i][m]});
        if (p != 2.0) continue;
        // two-sided bound with the sampled gap-ratio extremes c1 = min, c2 = max and 5 % slack
        double lower = 0.0, upper = 0.0;
        for (std::size_t m = 0; m < fine.t.size(); ++m) {
            double const mid = fine.lhs[i][m];
            double const w = fine.omega[i][m];
            double const lo = 0.95 * w / (ctx.sphere * ctx.gap.max);
            double const hi = 1.05 * w / (ctx.sphere * ctx.gap.min);
            lower = std::max(lower, mid > 0.0 ? lo / mid : (lo > 0.0 ? INFINITY : 0.0));
            upper = std::max(upper, hi > 0.0 ? mid / hi : (mid > 0.0 ? INFINITY : 0.0));
        }
        Json const two{{"f", name}, {"p", 2.0}, {"c1", ctx.gap.min}, {"c2", ctx.gap.max}};
        r.check_upper("two-sided p=2 bound: lower side", two, lower, 1.0,
                      "max over t of [0.95 omega_2 / (" + std::string(ctx.label == "line" ? "2" : "|S|*2") +
                          " c2)] / mid");
        r.check_upper("two-sided p=2 bound: upper side", two, upper, 1.0,
                      "max over t of mid / [1.05 omega_2 / (" + std::string(ctx.label == "line" ? "2" : "|S|") +
                          " c1)]");
    }
}

SuiteReport suite_transform_estimates(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "transform-estimates";
    TransformPtr const fine = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n);
    TransformPtr const coarse = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n / 2);
    std::vector<double> const ts = dyadic_t(cfg.t_min_exp, cfg.t_max_exp);
    EstimateContext const ctx{"line", 2.0, sample_gap_ratio(cfg.alpha)};
    for (const auto& name : catalog_names(1)) {
        CatalogSample const sf = realize(catalog_entry(name, fine->space_grid()->setup(), cfg.seed), *fine);
        CatalogSample const sc = realize(catalog_entry(name, coarse->space_grid()->setup(), cfg.seed), *coarse);
        record_estimates(r, ctx, name, cfg.p, estimate_curves(sf, *fine, cfg.p, ts, false, cfg.angles),
                         estimate_curves(sc, *coarse, cfg.p, ts, false, cfg.angles), truncation_note(sf));
    }
    r.setup = grid_json(*fine);
    r.setup["coarse_n"] = cfg.grid_n / 2;
    r.setup["t"] = ts;
    r.setup["gap_ratio"] = {{"nu", cfg.alpha}, {"c1", ctx.gap.min}, {"c2", ctx.gap.max}};
    return r;
}

// ---------------------------------------------------------------- integrability

void record_integrability(SuiteReport& r, const std::string& label, const std::string& name, double beta,
                          double threshold, const ModulusCurve& fine, const ModulusCurve& coarse,
                          const Spectrum& spectrum)
{
    Json const in{{"f", name}, {"beta", beta}, {"threshold", threshold}};
    HypothesisCheck const hf = smoothness_hypothesis(fine, beta, threshold);
    HypothesisCheck const hc = smoothness_hypothesis(coarse, beta, threshold);
    r.refinement(label + ": A = max_t omega_1/t^beta", in, hc.sup_ratio, hf.sup_ratio);
    r.check("omega_1/t^beta bounded as t -> 0", in, hf.bounded_near_zero, hf.ratios.front(),
            hf.ratios.size() > 1 ? hf.ratios[1] : 0.0, "sup inside the t-grid and lhs < rhs (ratio at the two smallest t)");
    double const tail = spectral_l1_outside(spectrum, 1.0);
    r.check("integral over |x| >= 1 of |F f| w finite", in, std::isfinite(tail), tail, 0.0, "lhs finite");
    r.info("integral of t^(beta - threshold - 1) over (0,1)", in, 1.0 / (beta - threshold));
    for (std::size_t m = 0; m < fine.t_values.size(); ++m)
        r.table.push_back({label + "/" + name, fine.t_values[m], fine.omega_values[m], hf.ratios[m]});
}

void record_gate(SuiteReport& r, const ModulusCurve& curve, double beta, double threshold)
{
    bool rejected = false;
    std::string message;
    try {
        (void)smoothness_hypothesis(curve, beta, threshold);
    } catch (const std::invalid_argument& e) {
        rejected = true;
        message = e.what();
    }
    r.check("precondition gate rejects beta <= threshold", Json{{"beta", beta}, {"threshold", threshold}}, rejected,
            beta, threshold, "rejected", message);
}

SuiteReport suite_l1_integrability(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "l1-integrability";
    TransformPtr const fine = plan_1d(cfg.l1_alpha, cfg.radius, cfg.grid_n);
    TransformPtr const coarse = plan_1d(cfg.l1_alpha, cfg.radius, cfg.grid_n / 2);
    double const threshold = 2.0 * (cfg.l1_alpha + 1.0);
    std::vector<double> const ts = dyadic_t(cfg.t_min_exp, cfg.t_max_exp);
    double const one[] = {1.0};
    ModulusCurve first;
    for (const char* name : {"gaussian", "smooth_bump", "oscillatory"}) {
        CatalogSample const sf = realize(catalog_entry(name, fine->space_grid()->setup(), cfg.seed), *fine);
        CatalogSample const sc = realize(catalog_entry(name, coarse->space_grid()->setup(), cfg.seed), *coarse);
        ModulusCurve const cf = modulus_1d(sf.spectrum, *fine, one, ts).front();
        ModulusCurve const cc = modulus_1d(sc.spectrum, *coarse, one, ts).front();
        record_integrability(r, "line", name, cfg.l1_beta, threshold, cf, cc, sf.spectrum);
        if (first.t_values.empty()) first = cf;
    }
    record_gate(r, first, threshold - 0.1, threshold);
    record_gate(r, first, threshold, threshold);
    r.setup = grid_json(*fine);
    r.setup["beta"] = cfg.l1_beta;
    r.setup["t"] = ts;
    return r;
}

// ---------------------------------------------------------------- radial estimates

EstimateCurves select_p(const EstimateCurves& c, const std::vector<double>& all, const std::vector<double>& wanted)
{
    EstimateCurves out;
    out.t = c.t;
    for (double p : wanted) {
        auto const i = static_cast<std::size_t>(std::find(all.begin(), all.end(), p) - all.begin());
        out.lhs.push_back(c.lhs[i]);
        out.tail.push_back(c.tail[i]);
        out.omega.push_back(c.omega[i]);
    }
    return out;
}

SuiteReport suite_radial_estimates(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "radial-estimates";
    TransformPtr const fine = plan_radial(cfg, cfg.radial_n);
    TransformPtr const coarse = plan_radial(cfg, cfg.radial_n / 2);
    MultiplicitySetup const& setup = fine->space_grid()->setup();
    std::vector<double> const ts = dyadic_t(cfg.t_min_exp, cfg.t_max_exp);
    GapRatioSample const gap = sample_gap_ratio(setup.bessel_order());
    // lower side: |S| * 2 c2; upper side: |S| c1
    EstimateContext ctx{"radial", sphere_area(setup.dim()), gap};
    ctx.gap.max = 2.0 * gap.max;
    double const threshold = setup.measure_degree();

    std::vector<double> all = cfg.p;
    if (std::find(all.begin(), all.end(), 1.0) == all.end()) all.insert(all.begin(), 1.0);
    std::size_t const one = static_cast<std::size_t>(std::find(all.begin(), all.end(), 1.0) - all.begin());
    ModulusCurve first;
    for (const auto& name : catalog_names(setup.dim())) {
        CatalogSample const sf = realize(catalog_entry(name, setup, cfg.seed), *fine);
        CatalogSample const sc = realize(catalog_entry(name, setup, cfg.seed), *coarse);
        EstimateCurves const ef = estimate_curves(sf, *fine, all, ts, true, cfg.angles);
        EstimateCurves const ec = estimate_curves(sc, *coarse, all, ts, true, cfg.angles);
        record_estimates(r, ctx, name, cfg.p, select_p(ef, all, cfg.p), select_p(ec, all, cfg.p), truncation_note(sf));
        ModulusCurve const w1f{ts, ef.omega[one], 1.0, ModulusKind::sphere_averaged_radial};
        ModulusCurve const w1c{ts, ec.omega[one], 1.0, ModulusKind::sphere_averaged_radial};
        record_integrability(r, "radial", name, cfg.radial_beta, threshold, w1f, w1c, sf.spectrum);
        if (first.t_values.empty()) first = w1f;
    }
    record_gate(r, first, threshold - 0.1, threshold);
    r.setup = grid_json(*fine);
    r.setup["coarse_n"] = cfg.radial_n / 2;
    r.setup["angles"] = cfg.angles;
    r.setup["t"] = ts;
    r.setup["beta"] = cfg.radial_beta;
    r.setup["gap_ratio"] = {{"nu", setup.bessel_order()}, {"c1", gap.min}, {"c2", gap.max}};
    return r;
}

// ---------------------------------------------------------------- Besov

struct SeminormTable {
    // [f][combo] seminorm for each (beta, p, q) combination
    std::vector<std::vector<double>> values;
};

struct Combo {
    double beta, p, q;
};

std::vector<Combo> combos(const VerifyConfig& cfg)
{
    std::vector<Combo> out;
    for (double b : cfg.beta)
        for (double p : cfg.p)
            for (double q : cfg.q) out.push_back({b, p, q});
    return out;
}

Json combo_json(const Combo& c) { return Json{{"beta", c.beta}, {"p", c.p}, {"q", c.q}}; }

/// Seminorms of every sample for every combination, sharing the blocks across combinations.
std::vector<std::vector<double>> seminorm_table(const std::vector<CatalogSample>& samples, const AdmissibleSequence& seq,
                                                const std::vector<Combo>& cs, const DunklTransform& plan)
{
    std::vector<std::vector<double>> out;
    for (const auto& s : samples) {
        std::vector<SampledFunction> blocks;
        for (int j = 0; j <= seq.j_max(); ++j) blocks.push_back(dyadic_block(s.spectrum, seq, j, plan));
        std::vector<double> row;
        for (const auto& c : cs) {
            std::vector<double> terms;
            for (int j = 0; j <= seq.j_max(); ++j)
                terms.push_back(std::pow(2.0, j * c.beta) * lp_norm(blocks[static_cast<std::size_t>(j)], c.p));
            double v = 0.0;
            if (std::isinf(c.q)) {
                for (double t : terms) v = std::max(v, t);
            } else {
                quad::CompensatedSum sum;
                for (double t : terms) sum.add(std::pow(t, c.q));
                v = std::pow(sum.value(), 1.0 / c.q);
            }
            row.push_back(v);
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// Largest max(r, 1/r) over the seminorm ratios of two sequences.
double independence_constant(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                             std::size_t combo)
{
    double c = 1.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        double const ratio = a[f][combo] / b[f][combo];
        c = std::max(c, std::max(ratio, 1.0 / ratio));
    }
    return c;
}

Spectrum dilated_spectrum(const CatalogEntry& entry, double factor, const DunklTransform& plan)
{
    // F(xi / factor): a band moved from [a, b] to [factor a, factor b]
    PointFunction const base = entry.spectrum;
    SampledFunction s = SampledFunction::sample(
        plan.frequency_grid(),
        [&](std::span<const double> xi) {
            std::vector<double> y(xi.begin(), xi.end());
            for (double& v : y) v /= factor;
            return base(y);
        },
        entry.tag);
    return Spectrum{std::move(s), "dilated:" + entry.name};
}

void besov_inclusion(SuiteReport& r, const VerifyConfig& cfg, const std::vector<CatalogSample>& fine_samples,
                     const std::vector<CatalogSample>& coarse_samples, const std::vector<std::vector<double>>& sn_fine,
                     const std::vector<std::vector<double>>& sn_coarse, const std::vector<Combo>& cs,
                     const DunklTransform& fine, const DunklTransform& coarse)
{
    SpaceProfile const annular = annular_profile();
    constexpr int per_octave = 16;
    std::vector<double> const t = log_uniform_t(cfg.j_max, per_octave);
    std::vector<double> ps;
    for (const auto& c : cs)
        if (std::find(ps.begin(), ps.end(), c.p) == ps.end()) ps.push_back(c.p);
    auto constants = [&](const std::vector<CatalogSample>& samples, const std::vector<std::vector<double>>& sn,
                         const DunklTransform& plan) {
        std::vector<double> worst(cs.size(), 0.0);
        for (std::size_t f = 0; f < samples.size(); ++f) {
            auto const norms = profile_block_norms(samples[f].spectrum, annular, ps, plan, cfg.j_max, per_octave);
            for (std::size_t c = 0; c < cs.size(); ++c) {
                auto const pi = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), cs[c].p) - ps.begin());
                double const cont = integrate_log_uniform(t, norms[pi], cs[c].beta, cs[c].q, per_octave).value;
                worst[c] = std::max(worst[c], sn[f][c] > 0.0 ? cont / sn[f][c] : 0.0);
            }
        }
        return worst;
    };
    std::vector<double> const cf = constants(fine_samples, sn_fine, fine);
    std::vector<double> const cc = constants(coarse_samples, sn_coarse, coarse);
    for (std::size_t c = 0; c < cs.size(); ++c) {
        Json in = combo_json(cs[c]);
        in["profile"] = annular.name;
        r.check("inclusion: continuous <= C besov, C finite", in, std::isfinite(cf[c]) && cf[c] > 0.0, cf[c], 0.0,
                "0 < lhs < inf (max over catalog)");
        r.refinement("inclusion constant", in, cc[c], cf[c]);
    }
}

SuiteReport suite_besov(const VerifyConfig& cfg)
{
    SuiteReport r;
    r.name = "besov";
    TransformPtr const fine = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n);
    TransformPtr const coarse = plan_1d(cfg.alpha, cfg.radius, cfg.grid_n / 2);
    MultiplicitySetup const& setup = fine->space_grid()->setup();
    AdmissibleSequence const seq = AdmissibleSequence::build(setup, cfg.j_max, PlateauKind::mollifier);
    AdmissibleSequence const alt = AdmissibleSequence::build(setup, cfg.j_max, PlateauKind::logistic);
    std::vector<Combo> const cs = combos(cfg);
    auto const samples = realize_all(catalog_names(1), *fine, cfg.seed);
    auto const coarse_samples = realize_all(catalog_names(1), *coarse, cfg.seed);
    auto find = [&](const std::string& name) -> const CatalogSample& {
        for (const auto& s : samples)
            if (s.entry.name == name) return s;
        throw std::logic_error("missing catalog sample " + name);
    };

    r.info("||phi_j||_1 (j >= 1)", Json{{"sequence", to_string(seq.kind())}}, seq.phi_l1_norms()[1]);
    r.info("||phi_0||_1", Json{{"sequence", to_string(seq.kind())}}, seq.phi_l1_norms()[0]);

    // reconstruction
    CatalogSample const& band = find("band_limited");
    CatalogSample const& gauss = find("gaussian");
    for (double p : cfg.p) {
        Reconstruction const rb = reconstruct(band.f, band.spectrum, seq, 4, p, *fine);
        r.check_upper("band-limited reconstruction error", Json{{"f", "band_limited"}, {"J", 4}, {"p", p}}, rb.error,
                      1e-10);
    }
    Reconstruction const rg = reconstruct(gauss.f, gauss.spectrum, seq, 8, 2.0, *fine);
    r.check_upper("Gaussian reconstruction error", Json{{"f", "gaussian"}, {"J", 8}, {"p", 2.0}}, rg.error, 1e-4);
    for (const auto& s : samples) {
        std::vector<double> errors;
        for (int J = 0; J <= seq.j_max(); ++J) errors.push_back(reconstruct(s.f, s.spectrum, seq, J, 2.0, *fine).error);
        std::size_t worst = 0;
        for (std::size_t J = 1; J + 1 < errors.size(); ++J)
            if (errors[J + 1] - errors[J] > errors[worst + 1] - errors[worst]) worst = J;
        r.check_upper("reconstruction error nonincreasing in J", Json{{"f", s.entry.name}, {"J", worst + 1}, {"p", 2.0}},
                      errors[worst + 1], errors[worst]);
    }

    // support structure of blocks
    double const block0 = lp_norm(dyadic_block(band.spectrum, seq, 0, *fine), 2.0);
    r.check_upper("block j=0 of a spectrum inside A_2", Json{{"f", "band_limited"}}, block0, 1e-12);
    {
        SeminormResult const sr = besov_seminorm(band.spectrum, seq, BesovParams{cfg.beta.front(), 2.0, 2.0}, *fine);
        double outside = 0.0;
        for (int j = 0; j <= seq.j_max(); ++j)
            if (j < 1 || j > 3) outside = std::max(outside, sr.weighted_terms[static_cast<std::size_t>(j)]);
        r.check_upper("seminorm of a spectrum inside A_2 uses only j = 1, 2, 3", Json{{"f", "band_limited"}}, outside,
                      1e-12);
    }
    {
        WeightedGrid const& freq = *fine->frequency_grid();
        for (int j = 0; j <= 4; ++j) {
            auto const [lo, hi] = seq.support(j);
            quad::CompensatedSum sum;
            for (std::size_t i = 0; i < freq.size(); ++i)
                if (freq.norm(i) >= lo && freq.norm(i) <= hi)
                    sum.add(std::norm(gauss.spectrum.values()[i]) * freq.weight(i));
            double const block = lp_norm(dyadic_block(gauss.spectrum, seq, j, *fine), 2.0);
            r.check_upper("Gaussian block <= spectral mass on supp psi_j", Json{{"f", "gaussian"}, {"j", j}}, block,
                          std::sqrt(sum.value()));
        }
    }

    // three-neighbour coupling of the partition
    {
        double worst = 0.0;
        for (int j = 0; j <= seq.j_max(); ++j)
            for (int jj = j + 2; jj <= seq.j_max(); ++jj)
                for (int m = 0; m <= 4000; ++m) {
                    double const s = std::ldexp(static_cast<double>(m) / 4000.0, seq.j_max() + 1);
                    worst = std::max(worst, std::fabs(seq.psi(j, s) * seq.psi(jj, s)));
                }
        r.check_upper("psi_j psi_j' = 0 for |j - j'| >= 2", Json{{"samples", 4001}}, worst, 0.0);
    }

    // decomposition
    for (const auto& c : cs) {
        if (std::isinf(c.q)) continue;
        BesovParams const params{c.beta, c.p, c.q};
        BlockSequence g;
        for (int j = 0; j <= seq.j_max(); ++j) g.blocks.push_back(dyadic_block_spectrum(gauss.spectrum, seq, j));
        DecompositionResult const d = decompose_verify(g, seq, params, *fine);
        Json in = combo_json(c);
        in["blocks"] = "gaussian";
        Record& rec = r.check_upper("assembly: seminorm <= C (sum (2^{j beta}||g_j||_p)^q)^{1/q}", in, d.seminorm,
                                    d.assembly_constant * d.block_star);
        rec.constant = d.empirical_constant;
        SampledFunction const assembled = fine->invert(d.assembled);
        r.check_upper("assembled blocks reproduce the Gaussian", in, lp_norm(gauss.f - assembled, c.p), 1e-8);

        CatalogEntry const rb = catalog_entry("random_band_limited", setup, cfg.seed);
        BlockSequence two;
        for (int j = 0; j <= 3; ++j)
            two.blocks.push_back(Spectrum{SampledFunction::zero(fine->frequency_grid()), "zero"});
        two.blocks[2] = realize(rb, *fine).spectrum;
        two.blocks[3] = dilated_spectrum(rb, 2.0, *fine);
        DecompositionResult const d2 = decompose_verify(two, seq, params, *fine);
        in["blocks"] = "random two-block";
        Record& rec2 = r.check_upper("assembly: seminorm <= C (sum (2^{j beta}||g_j||_p)^q)^{1/q}", in, d2.seminorm,
                                     d2.assembly_constant * d2.block_star);
        rec2.constant = d2.empirical_constant;

        BlockSequence single;
        for (int j = 0; j <= 2; ++j)
            single.blocks.push_back(Spectrum{SampledFunction::zero(fine->frequency_grid()), "zero"});
        single.blocks[2] = realize(rb, *fine).spectrum;
        DecompositionResult const d3 = decompose_verify(single, seq, params, *fine);
        std::vector<int> coupled;
        for (int j = 0; j <= seq.j_max(); ++j)
            if (!d3.coupling[static_cast<std::size_t>(j)].empty()) coupled.push_back(j);
        in["blocks"] = "single g_2";
        r.check("single block couples only to j in {1, 2, 3}", in, coupled == std::vector<int>{1, 2, 3},
                static_cast<double>(coupled.size()), 3.0, "coupled j == {1, 2, 3}");
    }
    {
        bool rejected = false;
        try {
            BlockSequence bad;
            bad.blocks.push_back(gauss.spectrum);
            (void)decompose_verify(bad, seq, BesovParams{1.0, 2.0, 2.0}, *fine);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        r.check("support violation rejected", Json{{"blocks", "gaussian as g_0"}}, rejected, 0.0, 0.0, "rejected");
    }

    // equivalence on a compact spectral set
    {
        CatalogSample const& rb = find("random_band_limited");
        CatalogSample const rbc = realize(catalog_entry("random_band_limited", setup, cfg.seed), *coarse);
        for (const auto& c : cs) {
            if (std::isinf(c.q)) continue;
            BesovParams const params{c.beta, c.p, c.q};
            EquivalenceResult const e = compact_spectrum_equivalence(rb.spectrum, 2.0, 8.0, seq, params, *fine);
            Spectrum doubled{2.0 * rb.spectrum.samples, "doubled"};
            EquivalenceResult const e2 = compact_spectrum_equivalence(doubled, 2.0, 8.0, seq, params, *fine);
            EquivalenceResult const ec = compact_spectrum_equivalence(rbc.spectrum, 2.0, 8.0, seq, params, *coarse);
            Json in = combo_json(c);
            in["K"] = {2.0, 8.0};
            r.check_upper("seminorm/||f||_p <= bound", in, e.ratio_high, e.bound_high);
            r.check_upper("||f||_p/seminorm <= bound", in, e.ratio_low, e.bound_low);
            r.check_upper("ratio invariant under f -> 2f", in, relative_change(e.ratio_high, e2.ratio_high), 1e-12);
            r.refinement("seminorm/||f||_p", in, ec.ratio_high, e.ratio_high, 0.02);
            in["K"] = {1.0, 8.0};
            EquivalenceResult const e3 = compact_spectrum_equivalence(rb.spectrum, 1.0, 8.0, seq, params, *fine);
            r.check("index set I finite", in, !e3.index_set.empty() && e3.index_set.size() <= 4,
                    static_cast<double>(e3.index_set.size()), 4.0, "1 <= |I| <= 4");
        }
        bool rejected = false;
        try {
            (void)compact_spectrum_equivalence(rb.spectrum, 0.0, 8.0, seq, BesovParams{}, *fine);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        r.check("K containing 0 rejected", Json{{"K", {0.0, 8.0}}}, rejected, 0.0, 0.0, "rejected");
    }

    // independence of the admissible sequence
    auto const sn_fine = seminorm_table(samples, seq, cs, *fine);
    auto const sn_alt = seminorm_table(samples, alt, cs, *fine);
    auto const sn_coarse = seminorm_table(coarse_samples, seq, cs, *coarse);
    auto const sn_alt_coarse = seminorm_table(coarse_samples, alt, cs, *coarse);
    for (std::size_t c = 0; c < cs.size(); ++c) {
        double const cf = independence_constant(sn_fine, sn_alt, c);
        double const cc = independence_constant(sn_coarse, sn_alt_coarse, c);
        Json in = combo_json(cs[c]);
        in["sequences"] = {to_string(seq.kind()), to_string(alt.kind())};
        r.check_upper("seminorm ratios within [1/C, C], C <= 10", in, cf, 10.0);
        r.refinement("sequence-independence constant C", in, cc, cf, 0.10);
    }

    // truncation in j
    {
        BesovParams const params{1.0, 2.0, 2.0};
        double const v8 = besov_seminorm(gauss.spectrum, seq.with_j_max(8), params, *fine).value;
        double const v12 = besov_seminorm(gauss.spectrum, seq.with_j_max(12), params, *fine).value;
        r.check_upper("Gaussian seminorm stable under j_max 8 -> 12", Json{{"beta", 1.0}, {"p", 2.0}, {"q", 2.0}},
                      relative_change(v8, v12), 0.02);
    }

    besov_inclusion(r, cfg, samples, coarse_samples, sn_fine, sn_coarse, cs, *fine, *coarse);

    // zero-mean profile
    SpaceProfile const h = gaussian_derivative_profile(cfg.alpha);
    r.check_upper("zero-mean profile: |integral of phi d mu_alpha|", Json{{"alpha", cfg.alpha}},
                  std::fabs(zero_mean_integral(h, cfg.alpha)), 1e-10);
    {
        double worst = 0.0;
        double const a = cfg.alpha;
        auto gt = [a](double t, double x) { return std::pow(t, -(2.0 * a + 2.0)) * std::exp(-x * x / (2.0 * t * t)); };
        for (double t : {0.5, 1.0, 2.0})
            for (double x : {0.0, 0.7, 1.9, 3.1}) {
                double const step = 1e-4 * t;
                double const derivative = t * (gt(t + step, x) - gt(t - step, x)) / (2.0 * step);
                double const phi_t = std::pow(t, -(2.0 * a + 2.0)) * h.space(x / t);
                worst = std::max(worst, std::fabs(derivative - phi_t) / std::max(1.0, std::fabs(phi_t)));
            }
        r.check_upper("phi_t = t d/dt (Gaussian_t)", Json{{"alpha", cfg.alpha}, {"step", "1e-4 t"}}, worst, 1e-6);
    }
    {
        BesovParams const params{0.5, 2.0, 2.0};
        auto ratio = [&](const CatalogSample& s, const DunklTransform& plan) {
            double const m = modulus_seminorm(s.spectrum, params, plan, cfg.j_max).value;
            double const c = continuous_seminorm(s.spectrum, h, params, plan, cfg.j_max).value;
            return m / c;
        };
        CatalogSample const gc = realize(catalog_entry("gaussian", setup, cfg.seed), *coarse);
        double const rf = ratio(gauss, *fine);
        double const rc = ratio(gc, *coarse);
        r.check("modulus seminorm / zero-mean continuous seminorm finite", Json{{"f", "gaussian"}, {"beta", 0.5}},
                std::isfinite(rf) && rf > 0.0, rf, 0.0, "0 < lhs < inf");
        r.refinement("modulus / continuous seminorm ratio", Json{{"f", "gaussian"}, {"beta", 0.5}}, rc, rf);
    }

    r.setup = grid_json(*fine);
    r.setup["coarse_n"] = cfg.grid_n / 2;
    r.setup["j_max"] = cfg.j_max;
    Json cj = Json::array();
    for (const auto& c : cs) cj.push_back(combo_json(c));
    r.setup["parameters"] = cj;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- public helpers

std::vector<double> dyadic_t(int a, int b)
{
    if (a > b) throw std::invalid_argument("dyadic_t: empty range");
    std::vector<double> t;
    for (int e = a; e <= b; ++e) t.push_back(std::ldexp(1.0, e));
    return t;
}

double smoothness_weighted_norm(const Spectrum& spectrum, double t, double p)
{
    WeightedGrid const& grid = *spectrum.grid();
    double const pc = conjugate_exponent(p);
    if (std::isinf(pc)) {
        double m = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double const s = t * grid.norm(i);
            m = std::max(m, std::min(1.0, s * s) * std::abs(spectrum.values()[i]));
        }
        return m;
    }
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double const s = t * grid.norm(i);
        sum.add(std::pow(std::min(1.0, s * s) * std::abs(spectrum.values()[i]), pc) * grid.weight(i));
    }
    return std::pow(std::max(sum.value(), 0.0), 1.0 / pc);
}

double spectral_tail_norm(const Spectrum& spectrum, double t, double p)
{
    WeightedGrid const& grid = *spectrum.grid();
    double const pc = conjugate_exponent(p);
    double const cut = 1.0 / t;
    if (std::isinf(pc)) {
        double m = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid.norm(i) > cut) m = std::max(m, std::abs(spectrum.values()[i]));
        return m;
    }
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid.norm(i) > cut) sum.add(std::pow(std::abs(spectrum.values()[i]), pc) * grid.weight(i));
    return std::pow(std::max(sum.value(), 0.0), 1.0 / pc);
}

double spectral_l1_outside(const Spectrum& spectrum, double a)
{
    WeightedGrid const& grid = *spectrum.grid();
    quad::CompensatedSum sum;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid.norm(i) >= a) sum.add(std::abs(spectrum.values()[i]) * grid.weight(i));
    return sum.value();
}

GapRatioSample sample_gap_ratio(double nu, int samples)
{
    if (samples < 2) throw std::invalid_argument("sample_gap_ratio: need at least two samples");
    GapRatioSample g;
    g.nu = nu;
    g.min = INFINITY;
    g.max = 0.0;
    for (int i = 0; i < samples; ++i) {
        double const s = std::pow(10.0, -3.0 + 6.0 * i / (samples - 1));
        double const ratio = bessel_gap_ratio(nu, s);
        g.min = std::min(g.min, ratio);
        g.max = std::max(g.max, ratio);
    }
    g.at_small_s = bessel_gap_ratio(nu, 1e-4);
    g.limit = bessel_gap_ratio_limit(nu);
    return g;
}

HypothesisCheck smoothness_hypothesis(const ModulusCurve& omega1, double beta, double threshold)
{
    if (!(beta > threshold))
        throw std::invalid_argument("integrability: requires beta > " + std::to_string(threshold) + " (got beta = " +
                                    std::to_string(beta) + ")");
    if (omega1.t_values.size() < 2) throw std::invalid_argument("integrability: need at least two t values");
    HypothesisCheck h;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < omega1.t_values.size(); ++i) {
        double const ratio = omega1.omega_values[i] / std::pow(omega1.t_values[i], beta);
        h.ratios.push_back(ratio);
        if (ratio > h.ratios[arg]) arg = i;
    }
    h.sup_ratio = h.ratios[arg];
    h.t_at_sup = omega1.t_values[arg];
    h.bounded_near_zero = arg > 0 && h.ratios[0] < h.ratios[1];
    return h;
}

}  // namespace dunkl

namespace dunkl {

void VerifyConfig::validate() const
{
    if (!(alpha > -0.5)) throw std::invalid_argument("alpha must exceed -1/2");
    if (!(l1_alpha > -0.5)) throw std::invalid_argument("l1 alpha must exceed -1/2");
    if (grid_n <= 0 || grid_n % 64 != 0) throw std::invalid_argument("grid n must be a positive multiple of 64");
    if (radial_n <= 0 || radial_n % 64 != 0) throw std::invalid_argument("radial n must be a positive multiple of 64");
    if (!(radius > 0.0) || !(radial_radius > 0.0) || !(radial_frequency_radius > 0.0))
        throw std::invalid_argument("radii must be positive");
    if (k.size() < 2) throw std::invalid_argument("k must have at least two entries (radial suites)");
    for (double p : this->p)
        if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
    for (double q : this->q)
        if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    for (double b : beta)
        if (!(b > 0.0)) throw std::invalid_argument("beta must be positive");
    if (p.empty() || q.empty() || beta.empty()) throw std::invalid_argument("p, q and beta lists must be nonempty");
    if (j_max < 2) throw std::invalid_argument("j_max must be at least 2");
    if (angles < 4 || angles % 4 != 0) throw std::invalid_argument("angles must be a positive multiple of 4");
}

Json VerifyConfig::to_json() const
{
    Json q_json = Json::array();
    for (double v : q) q_json.push_back(std::isinf(v) ? Json("inf") : Json(v));
    return Json{{"alpha", alpha},
                {"radius", radius},
                {"grid_n", grid_n},
                {"k", k},
                {"radial_radius", radial_radius},
                {"radial_frequency_radius", radial_frequency_radius},
                {"radial_n", radial_n},
                {"angles", angles},
                {"p", p},
                {"q", q_json},
                {"beta", beta},
                {"l1_alpha", l1_alpha},
                {"l1_beta", l1_beta},
                {"radial_beta", radial_beta},
                {"j_max", j_max},
                {"t_exponents", {t_min_exp, t_max_exp}},
                {"seed", seed}};
}

std::vector<std::string> suite_names()
{
    return {"normalization",       "plancherel",       "self-reciprocity", "kernel-identity",
            "translation-young",   "bessel-gap",       "transform-estimates", "l1-integrability",
            "radial-estimates",    "besov"};
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config)
{
    using Fn = SuiteReport (*)(const VerifyConfig&);
    static const std::map<std::string, Fn> table{
        {"normalization", suite_normalization},
        {"plancherel", suite_plancherel},
        {"self-reciprocity", suite_self_reciprocity},
        {"kernel-identity", suite_kernel_identity},
        {"translation-young", suite_translation_young},
        {"bessel-gap", suite_bessel_gap},
        {"transform-estimates", suite_transform_estimates},
        {"l1-integrability", suite_l1_integrability},
        {"radial-estimates", suite_radial_estimates},
        {"besov", suite_besov},
    };
    auto const it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    try {
        return it->second(config);
    } catch (const std::exception& e) {
        SuiteReport r;
        r.name = name;
        r.error = e.what();
        return r;
    }
}

Report run(const std::vector<std::string>& names, const VerifyConfig& config)
{
    config.validate();
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            for (const auto& s : suite_names()) expanded.push_back(s);
            continue;
        }
        auto const known = suite_names();
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw std::invalid_argument("unknown suite '" + n + "' (known: all, " + [&] {
                std::string s;
                for (const auto& k : known) s += (s.empty() ? "" : ", ") + k;
                return s;
            }() + ")");
        expanded.push_back(n);
    }
    Report report;
    report.config = config.to_json();
    for (const auto& n : expanded) report.suites.push_back(run_suite(n, config));
    return report;
}

}  // namespace dunkl
