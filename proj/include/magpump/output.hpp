#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "magpump/config.hpp"
#include "magpump/sweep.hpp"

namespace magpump {

const char* version();

/// CSV with a `#` header echoing the config (itself a valid config file once
/// the `# ` prefixes are stripped). Values use %.12e; flagged rows hold nan.
void write_csv(std::ostream& out, const Table& table, const RunConfig& cfg);

/// Companion metadata: config, columns, row counts and flagged-row messages.
nlohmann::json run_metadata(const Table& table, const RunConfig& cfg);

/// gnuplot script plotting every column of `csv_name` against the axis.
std::string gnuplot_script(const Table& table, const RunConfig& cfg, const std::string& csv_name);

struct RunFiles {
    std::filesystem::path csv;
    std::filesystem::path json;
    std::filesystem::path plot;
};

/// Writes <dir>/<cfg.name>.{csv,json,gp}, creating dir if needed.
RunFiles write_run(const Table& table, const RunConfig& cfg, const std::filesystem::path& dir);

}  // namespace magpump
