#pragma once

#include <string>
#include <vector>

#include "magpump/config.hpp"

namespace magpump {

/// One grid point. Failed points keep their axis value, carry NaN in every
/// column and name the failure in `status`.
struct Row {
    double axis = 0.0;  ///< display units (phase in units of pi)
    std::vector<double> values;
    std::string status = "ok";
    std::string message;

    bool flagged() const { return status != "ok"; }
};

struct Table {
    std::string axis_column;
    std::vector<std::string> columns;  ///< value columns, excluding the axis
    std::vector<Row> rows;

    std::size_t flagged() const;
    /// Column index by name; throws std::out_of_range.
    std::size_t column(const std::string& name) const;
};

/// Column names the config produces, in order.
std::vector<std::string> table_columns(const RunConfig& cfg);

/// Evaluates grid point i. Library errors become a flagged row.
Row evaluate_point(const RunConfig& cfg, std::size_t i);

/// OpenMP-parallel over grid points; threads <= 0 uses the runtime default.
/// Rows come back in grid order and match run_sweep_serial bit for bit.
Table run_sweep(const RunConfig& cfg, int threads = 0);

/// Reference loop, one point after another.
Table run_sweep_serial(const RunConfig& cfg);

}  // namespace magpump
