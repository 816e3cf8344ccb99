#include "magpump/presets.hpp"

#include <numbers>

#include "magpump/error.hpp"

namespace magpump {

namespace {

constexpr double kPi = std::numbers::pi;

// Energy window of the GaAs estimate, 4-12 meV at B0 = 0.1 T.
constexpr double kFig2Emin = 23.5;
constexpr double kFig2Emax = 70.6;

RunConfig base(const std::string& name, PumpMode mode, double xp) {
    RunConfig c;
    c.name = name;
    c.mode = mode;
    c.amplitude = xp;
    c.energy = 64.3;
    c.barrier = BarrierConfig{5.0, 5.0, 0.44, 0.0};
    c.phase = 0.5 * kPi;
    return c;
}

RunConfig sweep(RunConfig c, Axis axis, double start, double stop, int points) {
    c.axis = axis;
    c.grid = linspace(start, stop, points);
    return c;
}

// Weak-mode presets report currents normalized by i0; the amplitude only
// scales the heat columns.
constexpr double kWeakXp = 0.01;

std::vector<RunConfig> build(const std::string& name) {
    const PumpMode weak = PumpMode::Weak;
    const PumpMode cycle = PumpMode::Cycle;

    if (name == "fig2a") return {sweep(base(name, weak, kWeakXp), Axis::Energy, kFig2Emin, kFig2Emax, 400)};
    if (name == "fig2b") return {sweep(base(name, cycle, 1.0), Axis::Energy, kFig2Emin, kFig2Emax, 400)};
    if (name == "fig3") return {sweep(base(name, cycle, 0.1), Axis::Amplitude, 0.05, 4.0, 80)};

    if (name == "fig4a" || name == "fig4b") {
        RunConfig c = base(name, cycle, name == "fig4a" ? 0.1 : 1.0);
        c.energy = 23.12;
        return {sweep(c, Axis::Phase, 0.0, 2.0 * kPi, 101)};
    }

    if (name == "fig5a" || name == "fig5b") {
        const bool strong = name == "fig5b";
        RunConfig c = base(name, strong ? cycle : weak, strong ? 1.0 : kWeakXp);
        c.energy = 44.6;
        const int n = strong ? 120 : 200;
        RunConfig inset = c;
        inset.name = name + "_inset";
        return {sweep(c, Axis::Field, 0.5, 9.0, n),
                sweep(inset, Axis::Width, strong ? 1.5 : 0.5, 10.0, n)};
    }

    if (name == "fig6a" || name == "fig6b") {
        const bool strong = name == "fig6b";
        RunConfig c = base(name, strong ? cycle : weak, strong ? 1.0 : kWeakXp);
        c.model = Model::Soc;
        const int n = strong ? 100 : 200;
        RunConfig inset = c;
        inset.name = name + "_inset";
        return {sweep(c, Axis::AlphaRashba, 0.0, 2.0, n),
                sweep(inset, Axis::AlphaDresselhaus, 0.0, 2.0, n)};
    }

    if (name == "fig8a" || name == "fig8b") {
        const bool strong = name == "fig8b";
        RunConfig c = base(name, strong ? cycle : weak, strong ? 1.0 : kWeakXp);
        c.model = Model::Dephased;
        c.energy = strong ? 23.0 : 21.56;
        RunConfig inset = c;
        inset.name = name + "_inset";
        inset.energy = strong ? 38.0 : 22.17;
        const int n = strong ? 51 : 101;
        return {sweep(c, Axis::Epsilon, 0.0, 1.0, n), sweep(inset, Axis::Epsilon, 0.0, 1.0, n)};
    }

    if (name == "fig9a") {
        RunConfig c = base(name, weak, kWeakXp);
        c.observables = {true, true, false};
        return {sweep(c, Axis::Energy, kFig2Emin, 200.0, 400)};
    }
    if (name == "fig9b") {
        RunConfig c = base(name, cycle, 6.0);
        c.phase = 0.1 * kPi;
        c.allow_width_inversion = true;
        c.observables = {true, true, false};
        return {sweep(c, Axis::Energy, kFig2Emin, 200.0, 80)};
    }

    throw ConfigError("unknown figure preset '" + name + "'");
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {
        "fig2a", "fig2b", "fig3",  "fig4a", "fig4b", "fig5a", "fig5b",
        "fig6a", "fig6b", "fig8a", "fig8b", "fig9a", "fig9b"};
    return names;
}

std::vector<RunConfig> figure_preset(const std::string& name) {
    std::vector<RunConfig> panels = build(name);
    for (const auto& p : panels) p.validate();
    return panels;
}

}  // namespace magpump
