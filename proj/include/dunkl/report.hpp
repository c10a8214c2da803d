#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dunkl {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, under_resolved, info };

const char* to_string(Status status);

/// One-sided comparison used by every asserted inequality.
inline constexpr double kRelativeSlack = 1e-9;
inline constexpr double kAbsoluteFloor = 1e-12;
/// Largest relative change of an empirical constant when the grid is refined.
inline constexpr double kRefinementTolerance = 0.05;

[[nodiscard]] bool within(double lhs, double rhs, double rel = kRelativeSlack, double abs = kAbsoluteFloor);

/// Relative change |a - b| / max(|a|, |b|) (0 when both vanish).
[[nodiscard]] double relative_change(double a, double b);

struct Record {
    std::string name;
    Json inputs = Json::object();
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    std::optional<double> constant;
    std::optional<double> refinement_delta;
    std::string tolerance;
    Status status = Status::info;
    std::string note;

    [[nodiscard]] Json to_json() const;
};

/// Row of a plot-ready table: one per (case, t).
struct TableRow {
    std::string case_name;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct SuiteReport {
    std::string name;
    Json setup = Json::object();
    std::vector<Record> records;
    std::vector<TableRow> table;
    std::string error;  ///< set when the suite threw before finishing

    /// Inequality records: lhs <= rhs (1 + 1e-9) + 1e-12.
    Record& check_upper(std::string name, Json inputs, double lhs, double rhs, std::string note = {});
    /// |value - expected| <= tol.
    Record& check_close(std::string name, Json inputs, double value, double expected, double tol, std::string note = {});
    /// Plain predicate with a description of what was checked.
    Record& check(std::string name, Json inputs, bool ok, double lhs, double rhs, std::string tolerance,
                  std::string note = {});
    /// Reported value, no assertion.
    Record& info(std::string name, Json inputs, double value, std::string note = {});
    /// Empirical constant at two resolutions; under-resolved when the relative change exceeds tol.
    Record& refinement(std::string name, Json inputs, double coarse, double fine,
                       double tol = kRefinementTolerance, std::string note = {});

    [[nodiscard]] bool passed() const;
    [[nodiscard]] Json to_json() const;
};

struct Report {
    Json config = Json::object();
    std::vector<SuiteReport> suites;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] Json to_json() const;
    /// Serialized form; identical configurations give identical bytes.
    [[nodiscard]] std::string dump() const;
    /// One CSV per suite with a non-empty table: case,t,lhs,rhs.
    void write_tables(const std::string& directory) const;
};

}  // namespace dunkl
