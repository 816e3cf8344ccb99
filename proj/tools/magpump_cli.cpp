// magpump command line: config-driven sweeps, figure presets, SI conversion.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#include "magpump/error.hpp"
#include "magpump/output.hpp"
#include "magpump/presets.hpp"
#include "magpump/sweep.hpp"
#include "magpump/units.hpp"

namespace {

// Returns the number of flagged rows.
std::size_t run_and_write(const magpump::RunConfig& cfg, const std::string& out, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const magpump::Table table = magpump::run_sweep(cfg, threads);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto files = magpump::write_run(table, cfg, out);
    std::fprintf(stderr, "%s: %zu points, %zu flagged, %.1f s -> %s\n", cfg.name.c_str(),
                 table.rows.size(), table.flagged(), secs, files.csv.string().c_str());
    for (const auto& row : table.rows) {
        if (row.flagged()) {
            std::fprintf(stderr, "  %s = %g: %s\n", table.axis_column.c_str(), row.axis,
                         row.message.c_str());
        }
    }
    return table.flagged();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adiabatic spin pump through a magnetic double-delta barrier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", magpump::version());

    std::string config_path;
    std::string out_dir = ".";
    int threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a key = value file");
    sweep->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out_dir, "Output directory");
    sweep->add_option("--threads", threads, "Worker threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    std::string preset;
    auto* figure = app.add_subcommand("figure", "Regenerate a figure preset (all panels)");
    figure->add_option("preset", preset, "fig2a ... fig9b")
        ->required()
        ->check(CLI::IsMember(magpump::figure_names()));
    figure->add_option("--out", out_dir, "Output directory");
    figure->add_option("--threads", threads, "Worker threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    double b0 = 0.1, meff = 0.067, freq = 1e8, value = 0.0;
    auto* convert = app.add_subcommand("convert-si", "Pumped charge per cycle -> amperes");
    convert->add_option("--b0", b0, "Reference field in tesla")->check(CLI::PositiveNumber);
    convert->add_option("--meff", meff, "Effective mass ratio m*/m_e")->check(CLI::PositiveNumber);
    convert->add_option("--freq", freq, "Pump frequency in Hz")->check(CLI::PositiveNumber);
    convert->add_option("--value", value, "Dimensionless pumped charge per cycle")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            return run_and_write(magpump::load_config(config_path), out_dir, threads) == 0 ? 0 : 1;
        }
        if (*figure) {
            std::size_t flagged = 0;
            for (const auto& panel : magpump::figure_preset(preset)) {
                flagged += run_and_write(panel, out_dir, threads);
            }
            return flagged == 0 ? 0 : 1;
        }
        if (*convert) {
            magpump::SiScales scales{b0, meff, 0.44};
            scales.validate();
            std::printf("l_B    = %.6g Angstrom\n", scales.magnetic_length_angstrom());
            std::printf("E0     = %.6g meV\n", scales.energy_unit_mev());
            std::printf("w_c    = %.6g rad/s\n", scales.cyclotron_frequency());
            std::printf("I      = %.6e A\n", magpump::to_si(value, freq));
        }
    } catch (const magpump::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
