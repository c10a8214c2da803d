#include "dunkl/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

std::string trim(const std::string& s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto const e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what)
{
    std::string const t = trim(text);
    double v = 0.0;
    auto const [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

CsvSamples read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
    std::vector<std::string> const header = split(trim(line), ',');
    if (header.size() < 3 || trim(header[header.size() - 2]) != "re" || trim(header.back()) != "im")
        throw std::invalid_argument("csv: header must be x[,y,...],re,im");
    CsvSamples out;
    out.dim = static_cast<int>(header.size()) - 2;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        std::vector<std::string> const cells = split(line, ',');
        if (cells.size() != header.size())
            throw std::invalid_argument("csv: row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                                        " fields");
        std::vector<double> p;
        for (int j = 0; j < out.dim; ++j) p.push_back(parse_double(cells[static_cast<std::size_t>(j)], "coordinate"));
        double const re = parse_double(cells[cells.size() - 2], "re");
        double const im = parse_double(cells.back(), "im");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("csv: non-finite value in row " + std::to_string(row));
        out.points.push_back(std::move(p));
        out.values.emplace_back(re, im);
    }
    if (out.values.empty()) throw std::invalid_argument("csv: no data rows");
    return out;
}

CsvSamples read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_csv(in);
}

void write_csv(std::ostream& out, const SampledFunction& f)
{
    WeightedGrid const& grid = *f.grid();
    static const char* names[] = {"x", "y", "z"};
    for (int j = 0; j < grid.dim(); ++j) out << (j < 3 ? names[j] : ("x" + std::to_string(j)).c_str()) << ',';
    out << "re,im\n";
    char buf[32];
    auto put = [&](double v) {
        auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, end - buf);
    };
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (int j = 0; j < grid.dim(); ++j) {
            put(grid.coordinate(i, j));
            out << ',';
        }
        put(f.values()[i].real());
        out << ',';
        put(f.values()[i].imag());
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const SampledFunction& f)
{
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    write_csv(out, f);
}

SampledFunction ingest(const CsvSamples& samples, const GridPtr& grid)
{
    if (samples.dim != grid->dim())
        throw std::invalid_argument("csv: data has dimension " + std::to_string(samples.dim) + ", grid has " +
                                    std::to_string(grid->dim()));
    if (samples.values.size() == grid->size()) {
        std::map<std::vector<double>, Complex> by_point;
        for (std::size_t i = 0; i < samples.values.size(); ++i) by_point[samples.points[i]] = samples.values[i];
        std::vector<Complex> v(grid->size());
        bool exact = true;
        for (std::size_t i = 0; i < grid->size() && exact; ++i) {
            auto const p = grid->point(i);
            auto it = by_point.lower_bound(p);
            if (it == by_point.end()) it = std::prev(it);
            double dist = 0.0;
            for (std::size_t j = 0; j < p.size(); ++j) dist = std::max(dist, std::fabs(it->first[j] - p[j]));
            if (dist > 1e-9 * std::max(1.0, grid->radius())) exact = false;
            else v[i] = it->second;
        }
        if (exact) return SampledFunction(grid, std::move(v));
    }
    if (samples.dim != 1)
        throw std::invalid_argument("csv: multi-dimensional data must list exactly the grid nodes");
    std::vector<std::size_t> order(samples.values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return samples.points[a][0] < samples.points[b][0]; });
    std::vector<double> xs;
    std::vector<Complex> ys;
    for (std::size_t i : order) {
        xs.push_back(samples.points[i][0]);
        ys.push_back(samples.values[i]);
    }
    return SampledFunction::sample(grid, [&](std::span<const double> x) {
        double const t = x[0];
        if (t < xs.front() || t > xs.back()) return Complex{};
        auto const hi = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), t) - xs.begin());
        if (hi >= xs.size()) return ys.back();
        std::size_t const lo = hi - 1;
        double const h = xs[hi] - xs[lo];
        double const u = h > 0.0 ? (t - xs[lo]) / h : 0.0;
        return (1.0 - u) * ys[lo] + u * ys[hi];
    });
}

MultiplicitySetup GridConfig::setup() const
{
    if (static_cast<int>(k.size()) != d)
        throw std::invalid_argument("config: k has " + std::to_string(k.size()) + " entries but d = " +
                                    std::to_string(d));
    return MultiplicitySetup::product(k);
}

GridConfig read_config(std::istream& in)
{
    GridConfig cfg;
    bool k_set = false;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (auto const hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(row) + ": expected key = value");
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        if (key == "d") cfg.d = static_cast<int>(parse_double(value, "d"));
        else if (key == "k") {
            cfg.k = parse_list(value);
            k_set = true;
        } else if (key == "R") cfg.R = parse_double(value, "R");
        else if (key == "n") cfg.n = static_cast<int>(parse_double(value, "n"));
        else throw std::invalid_argument("config line " + std::to_string(row) + ": unknown key '" + key + "'");
    }
    if (!k_set) cfg.k.assign(static_cast<std::size_t>(cfg.d), cfg.d == 1 ? 1.0 : 0.0);
    if (cfg.d < 1) throw std::invalid_argument("config: d must be positive");
    if (!(cfg.R > 0.0)) throw std::invalid_argument("config: R must be positive");
    if (cfg.n < 1) throw std::invalid_argument("config: n must be positive");
    (void)cfg.setup();
    return cfg;
}

GridConfig read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_config(in);
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    for (const auto& cell : split(text, ',')) out.push_back(parse_double(cell, "list entry"));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

}  // namespace dunkl
