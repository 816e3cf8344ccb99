#pragma once

#include "magpump/pump.hpp"

namespace magpump {

/// Coupling of the fictitious voltage probe, 0 (decoupled) to 1 (fully
/// incoherent).
struct SplitterConfig {
    double epsilon = 0.0;
};

/// Real orthogonal 4x4 wave splitter. Ports 0/1 face the left/right halves
/// of the barrier, ports 2/3 the probe.
ScatterMatrix splitter_matrix(double epsilon);

/// Flux-normalized S-matrix of a single interface at x = 0 between a region
/// with wavevector k_left and one with k_right, carrying the derivative jump
/// psi'(0+) - psi'(0-) = jump psi(0). Port 0 faces left, port 1 right.
ScatterMatrix interface_s_matrix(double k_left, double k_right, double jump);

/// Four-port barrier with the splitter at x = 0. Ports: 0 left lead, 1 right
/// lead, 2 and 3 probe channels.
struct CompositeSystem {
    ScatterMatrix s;
    cplx segment_phase;  ///< e^{i k2 d/2}, applied on each half of the barrier
};

/// Joins left half-barrier, splitter and right half-barrier. `left` and
/// `right` are two-port interface matrices whose lead ports are already
/// referenced to x = 0 and whose inner ports sit at -d/2 and +d/2.
CompositeSystem compose(const ScatterMatrix& left, const ScatterMatrix& splitter,
                        const ScatterMatrix& right, cplx k2, double d);

/// Composite system for one spin channel. Requires a propagating in-barrier
/// wave (2E > (q+b)^2); throws DomainError otherwise.
CompositeSystem composite_system(double energy, Spin spin, const BarrierConfig& cfg,
                                 double epsilon);

SProvider dephased_provider(double energy, Spin spin, double g_star, double q, double epsilon);

/// Fraction of probe-absorbed flux re-injected into each lead.
struct ReinjectionRatio {
    double lead1 = 0.0;
    double lead2 = 0.0;
    bool decoupled = false;  ///< probe carries no flux; lead1 reported as 0
};

ReinjectionRatio k_in(const ScatterMatrix& composite);
inline ReinjectionRatio k_in(const CompositeSystem& c) { return k_in(c.s); }

/// Pumped charge with probe re-injection into both leads. In weak mode the
/// values are normalized by i0.
struct DephasedCurrent {
    double lead1 = 0.0;
    double lead2 = 0.0;
    double i0 = 1.0;
    bool normalized = false;
};

DephasedCurrent pumped_current_dephased(double energy, Spin spin, const PumpCycle& cycle,
                                        double epsilon, double g_star, double q,
                                        bool weak_mode, const QuadratureOptions& opts = {});

/// 1 - exp(-d / d_phi).
double epsilon_from_coherence(double d, double d_phi);

}  // namespace magpump
