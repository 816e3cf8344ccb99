// Serial reference vs OpenMP sweep on a figure preset: wall time, speedup and
// a bitwise comparison of the two tables.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "magpump/presets.hpp"
#include "magpump/sweep.hpp"

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel sweep benchmark"};
    std::string preset = "fig2b";
    int threads = 0, repeats = 1, points = 0;
    app.add_option("preset", preset, "Figure preset (first panel is used)")
        ->check(CLI::IsMember(magpump::figure_names()));
    app.add_option("--threads", threads, "Worker threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--repeats", repeats, "Timed repetitions, best is reported")
        ->check(CLI::PositiveNumber);
    app.add_option("--points", points, "Resample the grid to this many points (0 = preset)")
        ->check(CLI::NonNegativeNumber);
    CLI11_PARSE(app, argc, argv);

    magpump::RunConfig cfg = magpump::figure_preset(preset).front();
    if (points > 1) cfg.grid = magpump::linspace(cfg.grid.front(), cfg.grid.back(), points);

    magpump::Table serial, parallel;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        t_serial = std::min(t_serial, seconds([&] { serial = magpump::run_sweep_serial(cfg); }));
        t_parallel = std::min(t_parallel, seconds([&] { parallel = magpump::run_sweep(cfg, threads); }));
    }

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        for (std::size_t c = 0; c < serial.columns.size(); ++c) {
            mismatches += !same_bits(serial.rows[i].values[c], parallel.rows[i].values[c]);
        }
    }

    std::printf("preset %s, %zu points, %zu flagged\n", cfg.name.c_str(), cfg.grid.size(),
                serial.flagged());
    std::printf("serial    %8.3f s\n", t_serial);
    std::printf("parallel  %8.3f s  (%d threads requested, 0 = default)\n", t_parallel, threads);
    std::printf("speedup   %8.2fx\n", t_serial / t_parallel);
    std::printf("mismatching values: %zu\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
