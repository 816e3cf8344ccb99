#include "magpump/soc.hpp"

#include <cmath>
#include <limits>

#include "magpump/error.hpp"

namespace magpump {

double SocConfig::spin_orbit_length() const {
    const double a = alpha();
    return a > 0.0 ? 1.0 / a : std::numeric_limits<double>::infinity();
}

void SocConfig::validate() const {
    if (alpha_rashba < 0.0 || alpha_dresselhaus < 0.0) {
        throw DomainError("spin-orbit strengths must be non-negative");
    }
    if (alpha_rashba != 0.0 && alpha_dresselhaus != 0.0) {
        throw DomainError("only one of Rashba or Dresselhaus coupling may be set per run");
    }
    if (branch_sign != 1 && branch_sign != -1) {
        throw DomainError("branch_sign must be +1 or -1");
    }
}

std::pair<double, double> rashba_split_energies(double energy, double q, double b, double alpha) {
    const double root = std::sqrt(2.0 * energy + (q + b) * (q + b));
    return {energy + alpha * root, energy - alpha * root};
}

double branch_energy(double energy, Spin spin, const BarrierConfig& cfg, const SocConfig& soc) {
    const double root = std::sqrt(2.0 * energy + (cfg.q + cfg.b) * (cfg.q + cfg.b));
    return energy - soc.branch_sign * sign(spin) * soc.alpha() * root;
}

ScatterMatrix s_matrix_soc(double energy, Spin spin, const BarrierConfig& cfg,
                           const SocConfig& soc) {
    soc.validate();
    const WaveVectors kv = wavevectors(energy, cfg);
    const double e_branch = branch_energy(energy, spin, cfg, soc);
    const double kappa_sq = 2.0 * e_branch - (cfg.q + cfg.b) * (cfg.q + cfg.b);
    const double jump = 0.5 * cfg.g_star * sign(spin) * cfg.b;
    return detail::double_interface(kv.k1, kappa_sq, cfg.d, jump);
}

SProvider soc_provider(double energy, Spin spin, double g_star, double q, const SocConfig& soc) {
    soc.validate();
    return [=](const PumpPoint& x) {
        return s_matrix_soc(energy, spin, BarrierConfig{x.b, x.d, g_star, q}, soc);
    };
}

CurrentResult soc_pumped_currents(double energy, const PumpCycle& cycle, double g_star, double q,
                                  const SocConfig& soc, PumpMode mode,
                                  const QuadratureOptions& opts) {
    double current[2];
    for (Spin s : kSpins) {
        const SProvider p = soc_provider(energy, s, g_star, q, soc);
        const double v = mode == PumpMode::Weak ? pumped_current_weak(p, cycle, kLeftLead, opts.diff).normalized
                                                : pumped_current_cycle(p, cycle, kLeftLead, opts);
        current[s == Spin::Up ? 0 : 1] = v;
    }
    return spin_charge(current[0], current[1], mode == PumpMode::Weak);
}

}  // namespace magpump
