#include "magpump/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "magpump/dephasing.hpp"
#include "magpump/error.hpp"
#include "magpump/thermo.hpp"

namespace magpump {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SProvider provider_for(const RunConfig& p, Spin spin) {
    const double g = p.barrier.g_star;
    const double q = p.barrier.q;
    switch (p.model) {
        case Model::Coherent: return coherent_provider(p.energy, spin, g, q);
        case Model::Soc: return soc_provider(p.energy, spin, g, q, p.soc);
        case Model::Dephased: return dephased_provider(p.energy, spin, g, q, p.epsilon);
    }
    throw ConfigError("unknown model");
}

double lead1_current(const RunConfig& p, Spin spin, const PumpCycle& cycle) {
    const bool weak = p.mode == PumpMode::Weak;
    if (p.model == Model::Dephased) {
        return pumped_current_dephased(p.energy, spin, cycle, p.epsilon, p.barrier.g_star,
                                       p.barrier.q, weak, p.quadrature)
            .lead1;
    }
    const SProvider provider = provider_for(p, spin);
    if (weak) return pumped_current_weak(provider, cycle, kLeftLead, p.quadrature.diff).normalized;
    return pumped_current_cycle(provider, cycle, kLeftLead, p.quadrature);
}

HeatSplit lead1_heat(const RunConfig& p, Spin spin, const PumpCycle& cycle) {
    const SProvider provider = provider_for(p, spin);
    if (p.mode == PumpMode::Weak) {
        return weak_heat_joule_noise(provider, cycle, kLeftLead, p.quadrature.diff);
    }
    return joule_noise_split(provider, cycle, kLeftLead, p.quadrature);
}

std::string status_of(const std::exception& e) {
    if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const DegenerateInput*>(&e)) return "degenerate";
    if (dynamic_cast<const ProviderError*>(&e)) return "provider";
    return "error";
}

}  // namespace

std::size_t Table::flagged() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.flagged();
    return n;
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw std::out_of_range("no column '" + name + "'");
}

std::vector<std::string> table_columns(const RunConfig& cfg) {
    std::vector<std::string> cols;
    if (cfg.observables.currents) {
        cols.insert(cols.end(), {"i_up", "i_down", "i_spin", "i_charge"});
    }
    if (cfg.observables.heat) {
        cols.insert(cols.end(),
                    {"heat", "joule", "noise", "noise_ratio", "joule_ratio", "optimal"});
    }
    if (cfg.observables.transmission) {
        cols.insert(cols.end(), {"T_up", "T_down"});
    }
    return cols;
}

Row evaluate_point(const RunConfig& cfg, std::size_t i) {
    Row row;
    row.axis = axis_display(cfg.axis, cfg.grid.at(i));
    const std::size_t width = table_columns(cfg).size();
    try {
        const RunConfig p = cfg.at(i);
        const PumpCycle cycle = p.cycle();
        if (p.observables.currents) {
            const CurrentResult c = spin_charge(lead1_current(p, Spin::Up, cycle),
                                                lead1_current(p, Spin::Down, cycle),
                                                p.mode == PumpMode::Weak);
            row.values.insert(row.values.end(), {c.i_up, c.i_down, c.i_spin, c.i_charge});
        }
        if (p.observables.heat) {
            HeatResult h;
            h.up = lead1_heat(p, Spin::Up, cycle);
            h.down = lead1_heat(p, Spin::Down, cycle);
            const OptimalityRow o = optimality_row(p.energy, h);
            row.values.insert(row.values.end(),
                              {h.heat(), h.joule(), h.noise(), o.noise_ratio.value_or(kNaN),
                               o.joule_ratio.value_or(kNaN), o.optimal ? 1.0 : 0.0});
        }
        if (p.observables.transmission) {
            const PumpPoint x = cycle.center();
            for (Spin s : kSpins) {
                row.values.push_back(provider_for(p, s)(x).probability(kRightLead, kLeftLead));
            }
        }
    } catch (const std::exception& e) {
        row.values.assign(width, kNaN);
        row.status = status_of(e);
        row.message = e.what();
    }
    return row;
}

Table run_sweep_serial(const RunConfig& cfg) {
    cfg.validate();
    Table t{axis_column(cfg.axis), table_columns(cfg), {}};
    t.rows.reserve(cfg.grid.size());
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) t.rows.push_back(evaluate_point(cfg, i));
    return t;
}

Table run_sweep(const RunConfig& cfg, int threads) {
    cfg.validate();
    Table t{axis_column(cfg.axis), table_columns(cfg), {}};
    t.rows.resize(cfg.grid.size());
    const long n = static_cast<long>(cfg.grid.size());
    const int workers = threads > 0 ? threads : omp_get_max_threads();
    // Points differ wildly in cost (adaptive quadrature), hence dynamic.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long i = 0; i < n; ++i) {
        t.rows[static_cast<std::size_t>(i)] = evaluate_point(cfg, static_cast<std::size_t>(i));
    }
    return t;
}

}  // namespace magpump
