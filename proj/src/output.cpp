#include "magpump/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "magpump/error.hpp"

namespace magpump {

namespace {

std::string fixed(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

}  // namespace

const char* version() { return MAGPUMP_VERSION; }

void write_csv(std::ostream& out, const Table& table, const RunConfig& cfg) {
    out << "# magpump " << version() << "\n";
    for (const auto& [key, value] : describe(cfg)) out << "# " << key << " = " << value << "\n";
    out << "# flagged = " << table.flagged() << "\n";

    out << table.axis_column;
    for (const auto& c : table.columns) out << "," << c;
    out << ",status\n";
    for (const auto& row : table.rows) {
        out << fixed(row.axis);
        for (double v : row.values) out << "," << fixed(v);
        out << "," << row.status << "\n";
    }
}

nlohmann::json run_metadata(const Table& table, const RunConfig& cfg) {
    nlohmann::json meta;
    meta["version"] = version();
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : describe(cfg)) {
        if (key != "values") config[key] = value;
    }
    meta["config"] = config;
    meta["axis"] = table.axis_column;
    meta["columns"] = table.columns;
    meta["rows"] = table.rows.size();
    meta["flagged"] = table.flagged();
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const Row& r = table.rows[i];
        if (!r.flagged()) continue;
        failures.push_back({{"index", i}, {"axis", r.axis}, {"status", r.status},
                            {"message", r.message}});
    }
    meta["failures"] = failures;
    meta["units"] = cfg.mode == PumpMode::Weak
                        ? "currents normalized by i0 = xp^2 sin(phi)"
                        : "pumped charge per cycle (units of e); dc current = e f value";
    return meta;
}

std::string gnuplot_script(const Table& table, const RunConfig& cfg, const std::string& csv_name) {
    std::ostringstream gp;
    gp << "# " << cfg.name << "\n";
    gp << "set datafile separator ','\n";
    gp << "set datafile commentschars '#'\n";
    gp << "set key autotitle columnhead\n";
    gp << "set xlabel '" << table.axis_column << "'\n";
    gp << "set grid\n";
    gp << "set terminal pngcairo size 900,600\n";
    gp << "set output '" << cfg.name << ".png'\n";
    gp << "plot ";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) gp << ", \\\n     ";
        gp << "'" << csv_name << "' using 1:" << c + 2 << " with lines";
    }
    gp << "\n";
    return gp.str();
}

RunFiles write_run(const Table& table, const RunConfig& cfg, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    RunFiles files{dir / (cfg.name + ".csv"), dir / (cfg.name + ".json"), dir / (cfg.name + ".gp")};

    auto open = [](const std::filesystem::path& p) {
        std::ofstream f(p, std::ios::binary);
        if (!f) throw ConfigError("cannot write '" + p.string() + "'");
        return f;
    };
    {
        auto f = open(files.csv);
        write_csv(f, table, cfg);
    }
    {
        auto f = open(files.json);
        f << run_metadata(table, cfg).dump(2) << "\n";
    }
    {
        auto f = open(files.plot);
        f << gnuplot_script(table, cfg, files.csv.filename().string());
    }
    return files;
}

}  // namespace magpump
