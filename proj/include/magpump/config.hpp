#pragma once

#include <iosfwd>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "magpump/pump.hpp"
#include "magpump/soc.hpp"

namespace magpump {

enum class Model { Coherent, Soc, Dephased };

/// The single swept parameter of a run.
enum class Axis { Energy, Amplitude, Phase, Field, Width, AlphaRashba, AlphaDresselhaus, Epsilon };

struct Observables {
    bool currents = true;
    bool heat = false;
    bool transmission = false;
};

/// Everything one sweep needs. Angles are stored in radians; the text form
/// uses units of pi (`phi = 0.5`).
struct RunConfig {
    std::string name = "run";
    Model model = Model::Coherent;
    PumpMode mode = PumpMode::Cycle;
    Observables observables;

    double energy = 64.3;
    BarrierConfig barrier;      ///< b and d are the cycle centers
    double amplitude = 0.1;     ///< x_p, applied to both parameters
    double phase = 0.5 * std::numbers::pi;
    bool allow_width_inversion = false;
    SocConfig soc;
    double epsilon = 0.0;

    QuadratureOptions quadrature;
    int nodes = 256;

    Axis axis = Axis::Energy;
    std::vector<double> grid;

    /// Throws ConfigError. Checks every grid point against the module
    /// preconditions, so a valid config never fails on a malformed cycle.
    void validate() const;

    /// Copy with the axis value of grid point i applied.
    RunConfig at(std::size_t i) const;
    PumpCycle cycle() const;
};

/// Evenly spaced grid including both end points.
std::vector<double> linspace(double start, double stop, int points);

constexpr int kDefaultGridPoints = 400;

/// Flat `key = value` text, `#` comments. Unknown keys are errors.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Canonical key/value echo; parse_config of it reproduces the config.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg);

std::string axis_key(Axis axis);     ///< config spelling: E, xp, phi, ...
std::string axis_column(Axis axis);  ///< column header: E, x_p, phi_over_pi, ...
/// Axis value as written to tables (phase in units of pi).
double axis_display(Axis axis, double value);
std::string model_name(Model model);

}  // namespace magpump
