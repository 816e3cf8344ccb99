#include "magpump/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "magpump/error.hpp"

namespace magpump {

namespace {

constexpr double kPi = std::numbers::pi;

struct AxisName {
    Axis axis;
    const char* key;
    const char* column;
};

constexpr AxisName kAxes[] = {
    {Axis::Energy, "E", "E"},
    {Axis::Amplitude, "xp", "x_p"},
    {Axis::Phase, "phi", "phi_over_pi"},
    {Axis::Field, "bx", "B_x"},
    {Axis::Width, "d0", "d0"},
    {Axis::AlphaRashba, "alpha_r", "alpha_R"},
    {Axis::AlphaDresselhaus, "alpha_d", "alpha_D"},
    {Axis::Epsilon, "epsilon", "epsilon"},
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ConfigError("key '" + key + "': expected a finite number, got '" + text + "'");
    }
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
    }
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("key '" + key + "': expected true/false, got '" + text + "'");
}

Axis to_axis(const std::string& text) {
    for (const auto& a : kAxes) {
        if (text == a.key) return a.axis;
    }
    throw ConfigError("unknown sweep axis '" + text + "'");
}

// Axis values in config text use the same units as the scalar keys (phase in
// units of pi).
double from_display(Axis axis, double v) { return axis == Axis::Phase ? v * kPi : v; }

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw ConfigError("sweep grid is empty");
    for (double v : grid) {
        if (!std::isfinite(v)) throw ConfigError("sweep grid contains a non-finite value");
    }
    if (grid.size() < 2) return;
    const bool increasing = grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] == grid[i - 1]) {
            throw ConfigError("sweep grid has duplicate value " + format_double(grid[i]));
        }
        if ((grid[i] > grid[i - 1]) != increasing) {
            throw ConfigError("sweep grid is not strictly monotone");
        }
    }
}

}  // namespace

std::string axis_key(Axis axis) {
    for (const auto& a : kAxes) {
        if (a.axis == axis) return a.key;
    }
    return "?";
}

std::string axis_column(Axis axis) {
    for (const auto& a : kAxes) {
        if (a.axis == axis) return a.column;
    }
    return "?";
}

double axis_display(Axis axis, double value) { return axis == Axis::Phase ? value / kPi : value; }

std::string model_name(Model model) {
    switch (model) {
        case Model::Coherent: return "coherent";
        case Model::Soc: return "soc";
        case Model::Dephased: return "dephased";
    }
    return "?";
}

std::vector<double> linspace(double start, double stop, int points) {
    if (points < 1) throw ConfigError("grid needs at least one point");
    if (points == 1) return {start};
    std::vector<double> out(points);
    const double step = (stop - start) / (points - 1);
    for (int i = 0; i < points; ++i) out[i] = start + step * i;
    out.back() = stop;
    return out;
}

PumpCycle RunConfig::cycle() const {
    PumpCycle c = PumpCycle::make(barrier.d, barrier.b, amplitude, phase, nodes);
    c.allow_width_inversion = allow_width_inversion;
    return c;
}

RunConfig RunConfig::at(std::size_t i) const {
    RunConfig c = *this;
    const double v = grid.at(i);
    switch (axis) {
        case Axis::Energy: c.energy = v; break;
        case Axis::Amplitude: c.amplitude = v; break;
        case Axis::Phase: c.phase = v; break;
        case Axis::Field: c.barrier.b = v; break;
        case Axis::Width: c.barrier.d = v; break;
        case Axis::AlphaRashba: c.soc.alpha_rashba = v; break;
        case Axis::AlphaDresselhaus: c.soc.alpha_dresselhaus = v; break;
        case Axis::Epsilon: c.epsilon = v; break;
    }
    return c;
}

void RunConfig::validate() const {
    check_grid(grid);
    if (!observables.currents && !observables.heat && !observables.transmission) {
        throw ConfigError("no observables requested");
    }
    if ((axis == Axis::AlphaRashba || axis == Axis::AlphaDresselhaus) && model != Model::Soc) {
        throw ConfigError("spin-orbit sweep axis requires model = soc");
    }
    if (axis == Axis::Epsilon && model != Model::Dephased) {
        throw ConfigError("epsilon sweep axis requires model = dephased");
    }
    if (quadrature.max_nodes < nodes) {
        throw ConfigError("max_nodes is smaller than the initial node count");
    }
    if (!(quadrature.rel_tol > 0.0) || !(quadrature.abs_tol >= 0.0) ||
        !(quadrature.diff.rel_step > 0.0)) {
        throw ConfigError("tolerances and step must be positive");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const RunConfig p = at(i);
        try {
            p.cycle().validate();
            if (model == Model::Soc) p.soc.validate();
        } catch (const Error& e) {
            throw ConfigError("grid point " + std::to_string(i) + ": " + e.what());
        }
        if (!(2.0 * p.energy > p.barrier.q * p.barrier.q)) {
            throw ConfigError("grid point " + std::to_string(i) +
                              ": no propagating lead mode (2E <= q^2)");
        }
        if (!(p.epsilon >= 0.0 && p.epsilon <= 1.0)) {
            throw ConfigError("grid point " + std::to_string(i) + ": epsilon outside [0, 1]");
        }
    }
}

RunConfig parse_config(std::istream& in) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_config(in);
    } catch (const CLI::Error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }

    std::map<std::string, std::vector<std::string>> kv;
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;
        const std::string key = item.fullname();
        if (!kv.emplace(key, item.inputs).second) {
            throw ConfigError("key '" + key + "' given more than once");
        }
    }

    RunConfig cfg;
    auto take = [&](const std::string& key) -> const std::vector<std::string>* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto single = [&](const std::string& key) -> const std::string* {
        const auto* v = take(key);
        if (!v) return nullptr;
        if (v->size() != 1) throw ConfigError("key '" + key + "' expects a single value");
        return &v->front();
    };
    auto num = [&](const std::string& key, double& out) {
        if (const auto* v = single(key)) out = to_double(key, *v);
    };

    if (const auto* v = single("name")) cfg.name = *v;
    if (const auto* v = single("model")) {
        if (*v == "coherent") cfg.model = Model::Coherent;
        else if (*v == "soc") cfg.model = Model::Soc;
        else if (*v == "dephased") cfg.model = Model::Dephased;
        else throw ConfigError("unknown model '" + *v + "'");
    }
    if (const auto* v = single("mode")) {
        if (*v == "weak") cfg.mode = PumpMode::Weak;
        else if (*v == "cycle") cfg.mode = PumpMode::Cycle;
        else throw ConfigError("unknown mode '" + *v + "'");
    }
    if (const auto* v = take("observables")) {
        cfg.observables = {false, false, false};
        for (const auto& raw : *v) {
            std::stringstream ss(raw);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok.erase(0, tok.find_first_not_of(" \t"));
                tok.erase(tok.find_last_not_of(" \t") + 1);
                if (tok == "currents") cfg.observables.currents = true;
                else if (tok == "heat") cfg.observables.heat = true;
                else if (tok == "transmission") cfg.observables.transmission = true;
                else throw ConfigError("unknown observable '" + tok + "'");
            }
        }
    }

    num("energy", cfg.energy);
    num("b", cfg.barrier.b);
    num("d", cfg.barrier.d);
    num("g_star", cfg.barrier.g_star);
    num("q", cfg.barrier.q);
    num("xp", cfg.amplitude);
    if (const auto* v = single("phi")) cfg.phase = to_double("phi", *v) * kPi;
    if (const auto* v = single("allow_width_inversion")) {
        cfg.allow_width_inversion = to_bool("allow_width_inversion", *v);
    }
    num("alpha_r", cfg.soc.alpha_rashba);
    num("alpha_d", cfg.soc.alpha_dresselhaus);
    if (const auto* v = single("branch_sign")) cfg.soc.branch_sign = to_int("branch_sign", *v);
    num("epsilon", cfg.epsilon);
    if (const auto* v = single("nodes")) cfg.nodes = to_int("nodes", *v);
    if (const auto* v = single("max_nodes")) cfg.quadrature.max_nodes = to_int("max_nodes", *v);
    num("rel_tol", cfg.quadrature.rel_tol);
    num("abs_tol", cfg.quadrature.abs_tol);
    num("rel_step", cfg.quadrature.diff.rel_step);

    const auto* axis = single("axis");
    if (!axis) throw ConfigError("missing sweep axis ('axis = ...')");
    cfg.axis = to_axis(*axis);

    const auto* values = take("values");
    const bool ranged = take("start") || take("stop") || take("points");
    if (values && ranged) throw ConfigError("give either 'values' or start/stop/points, not both");
    if (values) {
        for (const auto& raw : *values) {
            std::stringstream ss(raw);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok.erase(0, tok.find_first_not_of(" \t"));
                tok.erase(tok.find_last_not_of(" \t") + 1);
                if (tok.empty()) continue;
                cfg.grid.push_back(from_display(cfg.axis, to_double("values", tok)));
            }
        }
    } else {
        const auto* start = single("start");
        const auto* stop = single("stop");
        if (!start || !stop) throw ConfigError("sweep needs 'values' or both 'start' and 'stop'");
        int points = kDefaultGridPoints;
        if (const auto* p = single("points")) points = to_int("points", *p);
        if (points < 1) throw ConfigError("'points' must be at least 1");
        cfg.grid = linspace(from_display(cfg.axis, to_double("start", *start)),
                            from_display(cfg.axis, to_double("stop", *stop)), points);
    }

    static const char* known[] = {
        "name",   "model",  "mode",      "observables", "energy",  "b",       "d",
        "g_star", "q",      "xp",        "phi",         "allow_width_inversion",
        "alpha_r", "alpha_d", "branch_sign", "epsilon", "nodes",   "max_nodes",
        "rel_tol", "abs_tol", "rel_step", "axis",       "values",  "start",   "stop",
        "points"};
    for (const auto& [key, _] : kv) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg) {
    std::string obs;
    auto add_obs = [&](bool on, const char* n) {
        if (!on) return;
        if (!obs.empty()) obs += ",";
        obs += n;
    };
    add_obs(cfg.observables.currents, "currents");
    add_obs(cfg.observables.heat, "heat");
    add_obs(cfg.observables.transmission, "transmission");

    std::string values;
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        if (i) values += ", ";
        values += format_double(axis_display(cfg.axis, cfg.grid[i]));
    }

    return {
        {"name", cfg.name},
        {"model", model_name(cfg.model)},
        {"mode", cfg.mode == PumpMode::Weak ? "weak" : "cycle"},
        {"observables", "\"" + obs + "\""},
        {"energy", format_double(cfg.energy)},
        {"b", format_double(cfg.barrier.b)},
        {"d", format_double(cfg.barrier.d)},
        {"g_star", format_double(cfg.barrier.g_star)},
        {"q", format_double(cfg.barrier.q)},
        {"xp", format_double(cfg.amplitude)},
        {"phi", format_double(cfg.phase / kPi)},
        {"allow_width_inversion", cfg.allow_width_inversion ? "true" : "false"},
        {"alpha_r", format_double(cfg.soc.alpha_rashba)},
        {"alpha_d", format_double(cfg.soc.alpha_dresselhaus)},
        {"branch_sign", std::to_string(cfg.soc.branch_sign)},
        {"epsilon", format_double(cfg.epsilon)},
        {"nodes", std::to_string(cfg.nodes)},
        {"max_nodes", std::to_string(cfg.quadrature.max_nodes)},
        {"rel_tol", format_double(cfg.quadrature.rel_tol)},
        {"abs_tol", format_double(cfg.quadrature.abs_tol)},
        {"rel_step", format_double(cfg.quadrature.diff.rel_step)},
        {"axis", axis_key(cfg.axis)},
        {"values", values},
    };
}

}  // namespace magpump
