#include "dunkl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dunkl {

namespace {

Json number(double v)
{
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

std::string format(double v)
{
    char buf[32];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

const char* to_string(Status status)
{
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::under_resolved: return "under-resolved";
    case Status::info: return "info";
    }
    return "?";
}

bool within(double lhs, double rhs, double rel, double abs)
{
    return std::isfinite(lhs) && lhs <= rhs * (1.0 + rel) + abs;
}

double relative_change(double a, double b)
{
    double const scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return 0.0;
    return std::fabs(a - b) / scale;
}

Json Record::to_json() const
{
    Json j;
    j["name"] = name;
    j["inputs"] = inputs;
    j["lhs"] = number(lhs);
    j["rhs"] = number(rhs);
    j["ratio"] = number(ratio);
    j["constant"] = constant ? number(*constant) : Json(nullptr);
    j["refinement_delta"] = refinement_delta ? number(*refinement_delta) : Json(nullptr);
    j["tolerance"] = tolerance;
    j["status"] = to_string(status);
    if (!note.empty()) j["note"] = note;
    return j;
}

Record& SuiteReport::check_upper(std::string name, Json inputs, double lhs, double rhs, std::string note)
{
    Record r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : INFINITY);
    r.tolerance = "lhs <= rhs*(1+1e-9) + 1e-12";
    r.status = within(lhs, rhs) ? Status::pass : Status::fail;
    r.note = std::move(note);
    records.push_back(std::move(r));
    return records.back();
}

Record& SuiteReport::check_close(std::string name, Json inputs, double value, double expected, double tol,
                                 std::string note)
{
    Record r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = value;
    r.rhs = expected;
    r.ratio = std::fabs(value - expected);
    r.tolerance = "|lhs - rhs| <= " + format(tol);
    r.status = std::fabs(value - expected) <= tol ? Status::pass : Status::fail;
    r.note = std::move(note);
    records.push_back(std::move(r));
    return records.back();
}

Record& SuiteReport::check(std::string name, Json inputs, bool ok, double lhs, double rhs, std::string tolerance,
                           std::string note)
{
    Record r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs != 0.0 ? lhs / rhs : 0.0;
    r.tolerance = std::move(tolerance);
    r.status = ok ? Status::pass : Status::fail;
    r.note = std::move(note);
    records.push_back(std::move(r));
    return records.back();
}

Record& SuiteReport::info(std::string name, Json inputs, double value, std::string note)
{
    Record r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = value;
    r.tolerance = "none (reported)";
    r.status = Status::info;
    r.note = std::move(note);
    records.push_back(std::move(r));
    return records.back();
}

Record& SuiteReport::refinement(std::string name, Json inputs, double coarse, double fine, double tol,
                                std::string note)
{
    Record r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.lhs = fine;
    r.rhs = coarse;
    r.ratio = coarse != 0.0 ? fine / coarse : 0.0;
    r.constant = fine;
    r.refinement_delta = relative_change(coarse, fine);
    r.tolerance = "finite and relative change <= " + format(tol);
    bool const finite = std::isfinite(coarse) && std::isfinite(fine);
    r.status = !finite ? Status::fail
               : *r.refinement_delta <= tol ? Status::pass
                                                              : Status::under_resolved;
    r.note = std::move(note);
    records.push_back(std::move(r));
    return records.back();
}

bool SuiteReport::passed() const
{
    if (!error.empty()) return false;
    return std::none_of(records.begin(), records.end(), [](const Record& r) {
        return r.status == Status::fail || r.status == Status::under_resolved;
    });
}

Json SuiteReport::to_json() const
{
    Json j;
    j["suite"] = name;
    j["setup"] = setup;
    j["status"] = passed() ? "pass" : "fail";
    if (!error.empty()) j["error"] = error;
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : records) ++counts[static_cast<int>(r.status)];
    j["counts"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"under-resolved", counts[2]}, {"info", counts[3]}};
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(r.to_json());
    j["records"] = std::move(recs);
    return j;
}

bool Report::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

Json Report::to_json() const
{
    Json j;
    j["schema"] = "dunkl-kit-report/1";
    j["config"] = config;
    j["status"] = passed() ? "pass" : "fail";
    Json arr = Json::array();
    for (const auto& s : suites) arr.push_back(s.to_json());
    j["suites"] = std::move(arr);
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

void Report::write_tables(const std::string& directory) const
{
    std::filesystem::create_directories(directory);
    for (const auto& s : suites) {
        if (s.table.empty()) continue;
        std::ofstream out(std::filesystem::path(directory) / (s.name + ".csv"));
        if (!out) throw std::runtime_error("cannot write table for " + s.name);
        out << "case,t,lhs,rhs\n";
        for (const auto& row : s.table)
            out << row.case_name << ',' << format(row.t) << ',' << format(row.lhs) << ',' << format(row.rhs) << '\n';
    }
}

}  // namespace dunkl
