#pragma once

#include <utility>

#include "magpump/pump.hpp"

namespace magpump {

/// Linear-in-k spin-orbit coupling inside the barrier region. At most one of
/// the two strengths may be nonzero per run.
struct SocConfig {
    double alpha_rashba = 0.0;
    double alpha_dresselhaus = 0.0;
    /// Which split branch spin up occupies: E_sigma = E - branch_sign sigma
    /// alpha sqrt(2E + (q+b)^2). +1 lowers the up-spin barrier energy.
    int branch_sign = +1;

    double alpha() const { return alpha_rashba != 0.0 ? alpha_rashba : alpha_dresselhaus; }
    /// l_so ~ 1/alpha; infinite when the coupling is off.
    double spin_orbit_length() const;
    void validate() const;
};

/// Split in-barrier energies E +- alpha sqrt(2E + (q+b)^2).
std::pair<double, double> rashba_split_energies(double energy, double q, double b, double alpha);

/// Barrier-region energy seen by one spin channel.
double branch_energy(double energy, Spin spin, const BarrierConfig& cfg, const SocConfig& soc);

/// Two-port S-matrix with the spin-dependent barrier-region wavevector
/// k2 = sqrt(2 E_sigma - (q+b)^2). No spin-flip amplitudes.
ScatterMatrix s_matrix_soc(double energy, Spin spin, const BarrierConfig& cfg,
                           const SocConfig& soc);

SProvider soc_provider(double energy, Spin spin, double g_star, double q, const SocConfig& soc);

enum class PumpMode { Weak, Cycle };

/// Both spin channels through the pump engine with the SOC provider. Weak
/// mode reports currents normalized by i0.
CurrentResult soc_pumped_currents(double energy, const PumpCycle& cycle, double g_star, double q,
                                  const SocConfig& soc, PumpMode mode,
                                  const QuadratureOptions& opts = {});

}  // namespace magpump
