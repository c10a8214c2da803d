#include "dunkl/besov.hpp"
#include "dunkl/catalog.hpp"
#include "dunkl/io.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/suites.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

using namespace dunkl;

namespace {

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Grid and input options shared by transform, modulus and besov.
struct GridOptions {
    double alpha = 0.5;
    int dim = 1;
    std::string k = "0.25,0.5";
    int grid_n = 0;
    double radius = 0.0;
    double frequency_radius = 0.0;
    std::string input = "catalog:gaussian";
    std::string config;
    std::uint64_t seed = kDefaultSeed;

    void attach(CLI::App& app)
    {
        app.add_option("--alpha", alpha, "multiplicity index in dimension one")->capture_default_str();
        app.add_option("--dim", dim, "1, or 2 for the Z_2^2 tensor setup")->check(CLI::IsMember({1, 2}))
            ->capture_default_str();
        app.add_option("--k", k, "multiplicities per axis when --dim 2")->capture_default_str();
        app.add_option("--grid-n", grid_n, "nodes per half-axis (default 4096 in 1D, 256 in 2D)");
        app.add_option("--radius", radius, "space radius (default 20 in 1D, 16 in 2D)");
        app.add_option("--frequency-radius", frequency_radius, "frequency radius (default: radius in 1D, 8 in 2D)");
        app.add_option("--input", input, "csv file or catalog:<name>")->capture_default_str();
        app.add_option("--seed", seed, "seed for random catalog entries")->capture_default_str();
        app.add_option("--config", config, "grid file with d, k, R, n lines; explicit flags take precedence");
    }

    /// Fills unset grid options from --config.
    void apply_config(const CLI::App& app)
    {
        if (config.empty()) return;
        GridConfig const c = read_config_file(config);
        if (app.count("--dim") == 0) dim = c.d;
        if (app.count("--k") == 0 && c.d >= 2) {
            k.clear();
            for (double v : c.k) k += (k.empty() ? "" : ",") + number(v);
        }
        if (app.count("--alpha") == 0 && c.d == 1) alpha = c.k[0] - 0.5;
        if (app.count("--radius") == 0) radius = c.R;
        if (app.count("--grid-n") == 0) grid_n = c.n;
    }

    [[nodiscard]] MultiplicitySetup setup() const
    {
        if (dim == 1) return MultiplicitySetup::rank_one(alpha);
        std::vector<double> const ks = parse_list(k);
        if (static_cast<int>(ks.size()) != dim) throw std::invalid_argument("--k needs one value per axis");
        return MultiplicitySetup::product(ks);
    }

    [[nodiscard]] TransformPtr plan() const
    {
        MultiplicitySetup const s = setup();
        int const n = grid_n > 0 ? grid_n : (dim == 1 ? 4096 : 256);
        double const r = radius > 0.0 ? radius : (dim == 1 ? 20.0 : 16.0);
        double const fr = frequency_radius > 0.0 ? frequency_radius : (dim == 1 ? r : 8.0);
        return make_transform(WeightedGrid::make(s, r, n), WeightedGrid::make(s, fr, n));
    }

    [[nodiscard]] Spectrum spectrum(const DunklTransform& plan) const
    {
        constexpr std::string_view prefix = "catalog:";
        if (input.starts_with(prefix)) {
            std::string const name = input.substr(prefix.size());
            return realize(catalog_entry(name, plan.space_grid()->setup(), seed), plan).spectrum;
        }
        return plan.transform(ingest(read_csv_file(input), plan.space_grid()));
    }
};

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

std::vector<double> parse_t_grid(const std::string& text)
{
    // dyadic:<jmin>:<jmax>
    constexpr std::string_view prefix = "dyadic:";
    auto const colon = text.find(':', prefix.size());
    if (!text.starts_with(prefix) || colon == std::string::npos)
        throw std::invalid_argument("--t-grid expects dyadic:<jmin>:<jmax>");
    int const a = std::stoi(text.substr(prefix.size(), colon - prefix.size()));
    int const b = std::stoi(text.substr(colon + 1));
    if (a > b) throw std::invalid_argument("--t-grid: jmin exceeds jmax");
    return dyadic_t(a, b);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dunkl transforms, moduli of continuity and Besov-Dunkl seminorms"};
    app.require_subcommand(1);

    // transform
    GridOptions tr;
    std::string tr_output;
    CLI::App* transform = app.add_subcommand("transform", "Dunkl transform of sampled or catalog input");
    tr.attach(*transform);
    transform->add_option("--output", tr_output, "csv path for the spectrum ('-' for stdout)");

    // modulus
    GridOptions mo;
    std::string mo_kind = "1d";
    std::string mo_p = "2";
    std::string mo_t = "dyadic:-8:4";
    std::string mo_output;
    int mo_angles = 64;
    CLI::App* modulus = app.add_subcommand("modulus", "Modulus of continuity over a dyadic t-grid");
    mo.attach(*modulus);
    modulus->add_option("--kind", mo_kind, "1d (second order) or radial (sphere averaged)")
        ->check(CLI::IsMember({"1d", "radial"}))->capture_default_str();
    modulus->add_option("--p", mo_p, "comma-separated exponents in [1, 2]")->capture_default_str();
    modulus->add_option("--t-grid", mo_t, "dyadic:<jmin>:<jmax>")->capture_default_str();
    modulus->add_option("--angles", mo_angles, "sphere nodes for the radial kind")->capture_default_str();
    modulus->add_option("--output", mo_output, "csv path with rows p,t,omega ('-' for stdout)");

    // besov
    GridOptions be;
    BesovParams be_params;
    int be_jmax = 10;
    std::string be_breakdown;
    CLI::App* besov = app.add_subcommand("besov", "Besov-Dunkl seminorm from dyadic blocks");
    be.attach(*besov);
    besov->add_option("--beta", be_params.beta, "smoothness index, > 0")->capture_default_str();
    besov->add_option("--p", be_params.p, "integrability exponent in [1, 2]")->capture_default_str();
    besov->add_option("--q", be_params.q, "inf for the sup norm")->capture_default_str();
    besov->add_option("--jmax", be_jmax, "largest dyadic block index")->capture_default_str();
    besov->add_option("--breakdown", be_breakdown, "csv path for per-j block norms ('-' for stdout)");

    // verify
    VerifyConfig vc;
    std::vector<std::string> suites;
    int v_dim = 1;
    std::string v_k, v_p, v_q, v_beta, v_report, v_tables;
    int v_n = 0;
    double v_radius = 0.0;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites and report");
    verify->add_option("suite", suites, "suite names or 'all'")->required();
    verify->add_option("--alpha", vc.alpha, "1D multiplicity index")->capture_default_str();
    verify->add_option("--dim", v_dim, "2 applies --grid-n and --radius to the radial grid")
        ->check(CLI::IsMember({1, 2}))->capture_default_str();
    verify->add_option("--k", v_k, "radial multiplicities, e.g. 0.25,0.5");
    verify->add_option("--grid-n", v_n, "nodes per half-axis");
    verify->add_option("--radius", v_radius, "space radius");
    verify->add_option("--p", v_p, "comma-separated exponents");
    verify->add_option("--q", v_q, "comma-separated fine indices for the Besov suite");
    verify->add_option("--beta", v_beta, "comma-separated smoothness indices for the Besov suite");
    verify->add_option("--seed", vc.seed, "seed for random catalog draws")->capture_default_str();
    verify->add_option("--report", v_report, "JSON report path (- for stdout)");
    verify->add_option("--tables", v_tables, "directory for per-suite CSV tables");

    verify->footer("Suites: all, " + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + "\nDUNKL_THREADS sets the worker count.");

    CLI11_PARSE(app, argc, argv);

    try {
        tr.apply_config(*transform);
        mo.apply_config(*modulus);
        be.apply_config(*besov);
        if (transform->parsed()) {
            TransformPtr const plan = tr.plan();
            Spectrum const s = tr.spectrum(*plan);
            if (s.truncation_warning)
                std::cerr << "warning: input not decayed at the grid boundary (estimate "
                          << s.truncation_estimate << ")\n";
            std::ofstream file;
            write_csv(open_output(tr_output, file), s.samples);
            return 0;
        }
        if (modulus->parsed()) {
            if (mo_kind == "radial" && mo.dim != 2) throw std::invalid_argument("--kind radial needs --dim 2");
            if (mo_kind == "1d" && mo.dim != 1) throw std::invalid_argument("--kind 1d needs --dim 1");
            TransformPtr const plan = mo.plan();
            Spectrum const s = mo.spectrum(*plan);
            std::vector<double> const ps = parse_list(mo_p);
            std::vector<double> const ts = parse_t_grid(mo_t);
            auto const curves = mo_kind == "1d" ? modulus_1d(s, *plan, ps, ts) : modulus_radial(s, *plan, ps, ts, mo_angles);
            std::ofstream file;
            std::ostream& out = open_output(mo_output, file);
            out << "p,t,omega\n";
            for (const auto& c : curves)
                for (std::size_t i = 0; i < c.t_values.size(); ++i)
                    out << number(c.p) << ',' << number(c.t_values[i]) << ',' << number(c.omega_values[i]) << '\n';
            return 0;
        }
        if (besov->parsed()) {
            be_params.validate();
            TransformPtr const plan = be.plan();
            Spectrum const s = be.spectrum(*plan);
            AdmissibleSequence const seq = AdmissibleSequence::build(plan->space_grid()->setup(), be_jmax);
            SeminormResult const r = besov_seminorm(s, seq, be_params, *plan);
            std::cout << "seminorm " << number(r.value) << '\n'
                      << "truncation_residual " << number(r.truncation_residual) << '\n';
            if (!r.certified) std::cout << "note: q = inf is computed but not certified\n";
            if (!be_breakdown.empty()) {
                std::ofstream file;
                std::ostream& out = open_output(be_breakdown, file);
                out << "j,block_norm,weighted_term,phi_l1\n";
                for (std::size_t j = 0; j < r.block_norms.size(); ++j)
                    out << j << ',' << number(r.block_norms[j]) << ',' << number(r.weighted_terms[j]) << ','
                        << number(seq.phi_l1_norms()[j]) << '\n';
            }
            return 0;
        }

        // verify
        if (!v_p.empty()) vc.p = parse_list(v_p);
        if (!v_q.empty()) vc.q = parse_list(v_q);
        if (!v_beta.empty()) vc.beta = parse_list(v_beta);
        if (!v_k.empty()) vc.k = parse_list(v_k);
        if (v_dim == 1) {
            if (v_n > 0) vc.grid_n = v_n;
            if (v_radius > 0.0) vc.radius = v_radius;
        } else {
            if (v_n > 0) vc.radial_n = v_n;
            if (v_radius > 0.0) vc.radial_radius = v_radius;
        }
        Report const report = run(suites, vc);
        if (v_report == "-") {
            std::cout << report.dump();
        } else if (!v_report.empty()) {
            std::ofstream out(v_report, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + v_report);
            out << report.dump();
        }
        if (!v_tables.empty()) {
            std::filesystem::create_directories(v_tables);
            report.write_tables(v_tables);
        }
        // the summary moves to stderr when the report goes to stdout
        std::ostream& summary = v_report == "-" ? std::cerr : std::cout;
        for (const auto& s : report.suites) {
            std::size_t failed = 0, under = 0;
            for (const auto& rec : s.records) {
                failed += rec.status == Status::fail;
                under += rec.status == Status::under_resolved;
            }
            summary << (s.passed() ? "PASS " : "FAIL ") << s.name << "  records=" << s.records.size()
                      << " failed=" << failed << " under_resolved=" << under;
            if (!s.error.empty()) summary << "  error: " << s.error;
            summary << '\n';
            for (const auto& rec : s.records)
                if (rec.status == Status::fail || rec.status == Status::under_resolved)
                    summary << "    " << rec.name << ' ' << rec.inputs.dump() << "  lhs=" << number(rec.lhs)
                              << " rhs=" << number(rec.rhs) << '\n';
        }
        return report.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "dunkl-kit: " << e.what() << '\n';
        return 2;
    }
}
