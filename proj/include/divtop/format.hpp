// Rendering of report data as CSV, JSON, or aligned text tables. All output
// is deterministic for fixed input.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divtop/asymptotics.hpp"
#include "divtop/betti.hpp"

namespace divtop {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(const std::string& name);  // throws invalid_argument

// CSV schema: quantity,n,measured,predicted,ratio,residual (header included).
// Degenerate rows carry "nan" in the ratio column (null in JSON).
std::string rows_to_csv(const std::vector<ConvergenceRow>& rows);
std::string rows_to_json(const std::vector<ConvergenceRow>& rows);
std::string rows_to_table(const std::vector<ConvergenceRow>& rows);
std::string render_rows(const std::vector<ConvergenceRow>& rows, OutputFormat f);

// Series output: quantity,n,value.
struct SeriesRow {
    std::string quantity;
    uint64_t n = 0;
    int64_t value = 0;
};
std::string series_to_csv(const std::vector<SeriesRow>& rows);
std::string series_to_json(const std::vector<SeriesRow>& rows);
std::string render_series(const std::vector<SeriesRow>& rows, OutputFormat f);

std::string betti_to_table(const BettiVector& v);
std::string betti_to_csv(const BettiVector& v);
std::string betti_to_json(const BettiVector& v);
std::string render_betti(const BettiVector& v, OutputFormat f);

// Shortest decimal form that round-trips a double; "nan"/"inf" spelled out.
std::string format_double(double v);

}  // namespace divtop
