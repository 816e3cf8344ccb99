#pragma once

#include <optional>
#include <vector>

#include "magpump/pump.hpp"

namespace magpump {

/// Heat pumped into one lead per cycle and its decomposition. With
/// A = dS/dt S^dagger, the joule part is |A_aa|^2 and the noise part
/// sum_{b != a} |A_ab|^2, both averaged over the cycle and divided by 8 pi.
struct HeatSplit {
    double heat = 0.0;
    double joule = 0.0;
    double noise = 0.0;
};

struct HeatResult {
    HeatSplit up;
    HeatSplit down;

    double heat() const { return up.heat + down.heat; }
    double joule() const { return up.joule + down.joule; }
    double noise() const { return up.noise + down.noise; }
};

/// Time-domain heat, joule and noise for one spin channel.
HeatSplit joule_noise_split(const SProvider& provider, const PumpCycle& cycle,
                            int lead = kLeftLead, const QuadratureOptions& opts = {});

/// Heat alone: (1/8 pi tau) int [dS/dt dS^dagger/dt]_aa dt.
double heat_current(const SProvider& provider, const PumpCycle& cycle, int lead = kLeftLead,
                    const QuadratureOptions& opts = {});

/// Bilinear weak-pumping forms evaluated at the cycle center with the
/// modulation amplitudes as the parameter excursions.
HeatSplit weak_heat_joule_noise(const SProvider& provider, const PumpCycle& cycle,
                                int lead = kLeftLead, const DifferenceOptions& opts = {});

struct OptimalityRow {
    double energy;
    std::optional<double> noise_ratio;  ///< N/H, empty when H is negligible
    std::optional<double> joule_ratio;  ///< J/H
    bool optimal;                       ///< N/H < kOptimalNoiseRatio
};

inline constexpr double kOptimalNoiseRatio = 2e-3;

OptimalityRow optimality_row(double energy, const HeatResult& heat);
std::vector<OptimalityRow> optimality_report(const std::vector<std::pair<double, HeatResult>>& sweep);

}  // namespace magpump
