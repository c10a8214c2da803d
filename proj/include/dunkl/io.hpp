#pragma once

#include "dunkl/measure.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl {

/// Rows `x[,y,...],re,im` with a header line.
struct CsvSamples {
    int dim = 0;
    std::vector<std::vector<double>> points;
    std::vector<Complex> values;
};

CsvSamples read_csv(std::istream& in);
CsvSamples read_csv_file(const std::string& path);

void write_csv(std::ostream& out, const SampledFunction& f);
void write_csv_file(const std::string& path, const SampledFunction& f);

/// Places CSV samples on a grid. Rows that list exactly the grid nodes (any order) are
/// used as is; 1D data is otherwise interpolated linearly, zero outside its range.
SampledFunction ingest(const CsvSamples& samples, const GridPtr& grid);

/// Grid setup read from `key = value` lines (keys d, k, R, n; '#' starts a comment).
struct GridConfig {
    int d = 1;
    std::vector<double> k{1.0};
    double R = 20.0;
    int n = 4096;

    [[nodiscard]] MultiplicitySetup setup() const;
};

GridConfig read_config(std::istream& in);
GridConfig read_config_file(const std::string& path);

/// Comma-separated list of reals.
std::vector<double> parse_list(const std::string& text);

}  // namespace dunkl
