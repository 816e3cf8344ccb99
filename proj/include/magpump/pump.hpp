#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "magpump/scattering.hpp"

namespace magpump {

/// A point in the two-dimensional pumping parameter space: X1 = width d,
/// X2 = field strength b.
struct PumpPoint {
    double d;
    double b;
};

enum class Param : int { Width = 0, Field = 1 };

/// Anything that maps a parameter point to a unitary S-matrix. Energy, spin
/// and the static parameters are captured by the closure.
using SProvider = std::function<ScatterMatrix(const PumpPoint&)>;

/// Coherent two-port barrier at fixed energy and spin.
SProvider coherent_provider(double energy, Spin spin, double g_star, double q = 0.0);

/// Sinusoidal modulation of both parameters:
///   d(t) = d0 + amp_d sin(omega t),  b(t) = b0 + amp_b sin(omega t + phase)
struct PumpCycle {
    double d0 = 5.0;
    double b0 = 5.0;
    double amp_d = 0.0;
    double amp_b = 0.0;
    double phase = 0.0;
    double omega = 1.0;
    int nodes = 256;  ///< initial trapezoid node count, doubled until converged
    /// Permit amp_d >= d0. The kernel continues analytically to d <= 0.
    bool allow_width_inversion = false;

    /// Equal amplitudes on both parameters.
    static PumpCycle make(double d0, double b0, double amplitude, double phase, int nodes = 256);

    double period() const;
    PumpPoint at(double t) const;
    PumpPoint velocity(double t) const;
    PumpPoint center() const { return {d0, b0}; }

    /// Throws DomainError when the cycle is malformed.
    void validate() const;
};

struct DifferenceOptions {
    double rel_step = 1e-3;       ///< h = rel_step * max(1, |X|)
    double unitarity_tol = 1e-8;  ///< provider output check at the center point
    double refine_tol = 1e-14;    ///< target error estimate of the extrapolation tableau
    double accept_tol = 1e-6;     ///< fallback when rounding stalls the refinement
    int max_refinements = 10;     ///< step halvings; 0 = one Richardson level, no check
};

/// S and its parameter derivatives at one point (extrapolated central
/// differences).
struct Derivatives {
    ScatterMatrix s;
    ScatterMatrix d_width;
    ScatterMatrix d_field;

    const ScatterMatrix& along(Param p) const { return p == Param::Width ? d_width : d_field; }
};

Derivatives differentiate(const SProvider& provider, const PumpPoint& x,
                          const DifferenceOptions& opts = {});

/// dN_lead/dX = (1/2pi) sum_beta Im(ds_{lead,beta}/dX conj(s_{lead,beta})).
double emissivity(const Derivatives& ds, int lead, Param which);
double emissivity(const SProvider& provider, const PumpPoint& x, int lead, Param which,
                  const DifferenceOptions& opts = {});

/// sum_beta Im(conj(ds/db) ds/dd) for one outgoing lead. The weak-pumping
/// charge per cycle is amp_d amp_b sin(phase) times this.
double bilinear_response(const Derivatives& ds, int lead);

struct QuadratureOptions {
    int max_nodes = 1 << 16;
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;  ///< relative to the integral of |integrand|
    DifferenceOptions diff;
};

/// What the periodic integrator sees at each node.
struct CycleSample {
    double t;
    PumpPoint x;
    PumpPoint x_dot;
    const Derivatives& ds;

    /// dS/dt by the chain rule.
    PortMatrix dt_s() const {
        return ds.d_width.matrix() * x_dot.d + ds.d_field.matrix() * x_dot.b;
    }
};

using CycleObservable = std::function<void(const CycleSample&, std::span<double>)>;

struct CycleIntegral {
    std::vector<double> values;  ///< integral over one period per component
    int nodes = 0;
    double max_change = 0.0;     ///< largest component change at the last doubling
};

/// Periodic trapezoid integration of `observable` over one period, doubling
/// the node count until every component changes by less than
/// rel_tol |I| + abs_tol int|f|. Throws ConvergenceError otherwise.
CycleIntegral integrate_cycle(const SProvider& provider, const PumpCycle& cycle, int components,
                              const CycleObservable& observable,
                              const QuadratureOptions& opts = {});

/// Pumped charge per cycle (units of e) into every port of the provider.
/// The dc current is (e omega / 2 pi) times this.
CycleIntegral pumped_charges_cycle(const SProvider& provider, const PumpCycle& cycle,
                                   const QuadratureOptions& opts = {});

/// Pumped charge per cycle into one lead.
double pumped_current_cycle(const SProvider& provider, const PumpCycle& cycle,
                            int lead = kLeftLead, const QuadratureOptions& opts = {});

/// Weak-pumping result, bilinear in the amplitudes. `value()` is in the same
/// units as pumped_current_cycle; `normalized` is the value divided by
/// i0 = amp_d amp_b sin(phase).
struct WeakCurrent {
    double normalized = 0.0;
    double i0 = 0.0;
    double value() const { return normalized * i0; }
};

WeakCurrent pumped_current_weak(const SProvider& provider, const PumpCycle& cycle,
                                int lead = kLeftLead, const DifferenceOptions& opts = {});

/// Analytic weak-pumping current at q = 0, normalized by i0:
///   -sigma 2 b^2 g* g' k1^3 k2^3 sin(2 k2 d) / T_d^2
/// Requires 2E > b^2.
double pumped_current_closed_form(double energy, Spin spin, double d, double b, double g_star);

/// Closed form with T_d expanded around 2E >> b^2 (keeps the bracket
/// [1 + b^4 sin^2(k2 d) / (8E(2E - b^2))]^2 and g' = 1 in T_d).
double pumped_current_large_energy(double energy, Spin spin, double d, double b,
                                   double g_star);

/// Per-spin, spin and charge currents for one operating point.
struct CurrentResult {
    double i_up = 0.0;
    double i_down = 0.0;
    double i_spin = 0.0;
    double i_charge = 0.0;
    bool normalized = false;  ///< true when divided by i0 (weak mode)
};

CurrentResult spin_charge(double i_up, double i_down, bool normalized = false);

struct Resonance {
    int n;
    double energy;
    bool high_energy;  ///< 2E_n > 4 b^2, where the estimate is meant to hold
};

/// Published linear estimate E_n = (2n+1) pi / (8 d) + b^2 / 2.
std::vector<Resonance> resonance_energies(int n_max, double d, double b);

/// Energies solving 2 k2 d = (2n+1) pi / 2 exactly:
///   E_n = b^2/2 + ((2n+1) pi / (4 d))^2 / 2.
std::vector<Resonance> resonance_energies_from_phase(int n_max, double d, double b);

}  // namespace magpump
