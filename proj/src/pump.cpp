#include "magpump/pump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "magpump/error.hpp"

namespace magpump {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double step_for(double x, double rel_step) {
    const double h = rel_step * std::max(1.0, std::abs(x));
    if (!(h > 0.0) || x + 0.5 * h == x || x - 0.5 * h == x) {
        throw ProviderError("finite-difference step underflows at X = " + std::to_string(x));
    }
    return h;
}

PortMatrix central(const SProvider& provider, PumpPoint x, Param which, double h) {
    PumpPoint lo = x;
    PumpPoint hi = x;
    if (which == Param::Width) {
        lo.d -= h;
        hi.d += h;
    } else {
        lo.b -= h;
        hi.b += h;
    }
    return (provider(hi).matrix() - provider(lo).matrix()) / (2.0 * h);
}

// Central differences on successively halved steps, extrapolated through a
// Neville tableau (even error powers). The entry with the smallest error
// estimate wins; refinement stops once it meets refine_tol or rounding makes
// the diagonal drift away from it. Narrow transmission features otherwise
// leave a step bias that survives the quadrature.
PortMatrix richardson(const SProvider& provider, PumpPoint x, Param which, double h,
                      const DifferenceOptions& opts) {
    const int levels = opts.max_refinements + 2;
    std::vector<std::vector<PortMatrix>> a(levels, std::vector<PortMatrix>(levels));
    a[0][0] = central(provider, x, which, h);
    PortMatrix best = a[0][0];
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 1; i < levels; ++i) {
        h *= 0.5;
        a[0][i] = central(provider, x, which, h);
        const double scale = std::max(1.0, a[0][i].norm());
        double fac = 4.0;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (fac * a[j - 1][i] - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= 4.0;
            const double err = std::max((a[j][i] - a[j - 1][i]).norm(),
                                        (a[j][i] - a[j - 1][i - 1]).norm()) / scale;
            if (err < best_err) {
                best_err = err;
                best = a[j][i];
            }
        }
        if (opts.max_refinements == 0) return a[1][1];
        if (best_err <= opts.refine_tol) return best;
        // Rounding has taken over once the diagonal drifts away from an
        // already acceptable estimate; before that keep halving.
        if (best_err <= opts.accept_tol &&
            (a[i][i] - a[i - 1][i - 1]).norm() / scale >= 2.0 * best_err) {
            break;
        }
    }
    if (best_err <= opts.accept_tol) return best;
    throw ConvergenceError("finite-difference derivative did not settle", 0, best_err,
                           opts.accept_tol);
}

}  // namespace

SProvider coherent_provider(double energy, Spin spin, double g_star, double q) {
    return [=](const PumpPoint& x) {
        return s_matrix(energy, spin, BarrierConfig{x.b, x.d, g_star, q});
    };
}

PumpCycle PumpCycle::make(double d0, double b0, double amplitude, double phase, int nodes) {
    PumpCycle c;
    c.d0 = d0;
    c.b0 = b0;
    c.amp_d = amplitude;
    c.amp_b = amplitude;
    c.phase = phase;
    c.nodes = nodes;
    return c;
}

double PumpCycle::period() const { return kTwoPi / omega; }

PumpPoint PumpCycle::at(double t) const {
    return {d0 + amp_d * std::sin(omega * t), b0 + amp_b * std::sin(omega * t + phase)};
}

PumpPoint PumpCycle::velocity(double t) const {
    return {amp_d * omega * std::cos(omega * t), amp_b * omega * std::cos(omega * t + phase)};
}

void PumpCycle::validate() const {
    if (!std::isfinite(d0) || !std::isfinite(b0) || !std::isfinite(amp_d) ||
        !std::isfinite(amp_b) || !std::isfinite(phase)) {
        throw DomainError("pump cycle has non-finite parameters");
    }
    if (amp_d < 0.0 || amp_b < 0.0) {
        throw DomainError("pump amplitudes must be non-negative");
    }
    if (!(omega > 0.0)) {
        throw DomainError("pump frequency must be positive");
    }
    if (nodes < 16 || nodes % 2 != 0) {
        throw DomainError("quadrature node count must be even and >= 16");
    }
    if (!allow_width_inversion && !(d0 > 0.0 && amp_d < d0)) {
        throw DomainError("width would reach zero over the cycle (amp_d >= d0)");
    }
}

Derivatives differentiate(const SProvider& provider, const PumpPoint& x,
                          const DifferenceOptions& opts) {
    Derivatives out;
    out.s = provider(x);
    const double defect = out.s.unitarity_defect();
    if (!(defect < opts.unitarity_tol)) {
        std::ostringstream msg;
        msg << "provider returned a non-unitary S-matrix (defect " << defect << ") at d = " << x.d
            << ", b = " << x.b;
        throw ProviderError(msg.str());
    }
    out.d_width = ScatterMatrix(
        richardson(provider, x, Param::Width, step_for(x.d, opts.rel_step), opts));
    out.d_field = ScatterMatrix(
        richardson(provider, x, Param::Field, step_for(x.b, opts.rel_step), opts));
    return out;
}

double emissivity(const Derivatives& ds, int lead, Param which) {
    const ScatterMatrix& dx = ds.along(which);
    double acc = 0.0;
    for (int beta = 0; beta < ds.s.dim(); ++beta) {
        acc += std::imag(dx(lead, beta) * std::conj(ds.s(lead, beta)));
    }
    return acc / kTwoPi;
}

double emissivity(const SProvider& provider, const PumpPoint& x, int lead, Param which,
                  const DifferenceOptions& opts) {
    return emissivity(differentiate(provider, x, opts), lead, which);
}

double bilinear_response(const Derivatives& ds, int lead) {
    double acc = 0.0;
    for (int beta = 0; beta < ds.s.dim(); ++beta) {
        acc += std::imag(std::conj(ds.d_field(lead, beta)) * ds.d_width(lead, beta));
    }
    return acc;
}

CycleIntegral integrate_cycle(const SProvider& provider, const PumpCycle& cycle, int components,
                              const CycleObservable& observable, const QuadratureOptions& opts) {
    cycle.validate();
    const double period = cycle.period();

    std::vector<double> sum(components, 0.0);
    std::vector<double> abs_sum(components, 0.0);
    std::vector<double> buffer(components, 0.0);

    auto add_nodes = [&](int n, int first, int stride) {
        for (int j = first; j < n; j += stride) {
            const double t = period * static_cast<double>(j) / static_cast<double>(n);
            const PumpPoint x = cycle.at(t);
            const Derivatives ds = differentiate(provider, x, opts.diff);
            std::fill(buffer.begin(), buffer.end(), 0.0);
            observable(CycleSample{t, x, cycle.velocity(t), ds}, buffer);
            for (int c = 0; c < components; ++c) {
                sum[c] += buffer[c];
                abs_sum[c] += std::abs(buffer[c]);
            }
        }
    };

    int n = cycle.nodes;
    add_nodes(n, 0, 1);
    std::vector<double> previous(components);
    for (int c = 0; c < components; ++c) previous[c] = sum[c] * period / n;

    double change = 0.0;
    double worst_tol = 0.0;
    while (true) {
        add_nodes(2 * n, 1, 2);
        n *= 2;
        const double w = period / n;
        bool converged = true;
        change = 0.0;
        for (int c = 0; c < components; ++c) {
            const double current = sum[c] * w;
            const double delta = std::abs(current - previous[c]);
            const double tol = opts.rel_tol * std::abs(current) + opts.abs_tol * abs_sum[c] * w;
            if (delta > tol) {
                converged = false;
                worst_tol = tol;
            }
            change = std::max(change, delta);
            previous[c] = current;
        }
        if (converged) break;
        if (2 * n > opts.max_nodes) {
            std::ostringstream msg;
            msg << "cycle quadrature did not converge with " << n << " nodes (change " << change
                << ", tolerance " << worst_tol << ")";
            throw ConvergenceError(msg.str(), n, change, worst_tol);
        }
    }

    CycleIntegral out;
    out.values = std::move(previous);
    out.nodes = n;
    out.max_change = change;
    return out;
}

CycleIntegral pumped_charges_cycle(const SProvider& provider, const PumpCycle& cycle,
                                   const QuadratureOptions& opts) {
    const int ports = provider(cycle.center()).dim();
    return integrate_cycle(
        provider, cycle, ports,
        [ports](const CycleSample& smp, std::span<double> out) {
            for (int a = 0; a < ports; ++a) {
                out[a] = emissivity(smp.ds, a, Param::Width) * smp.x_dot.d +
                         emissivity(smp.ds, a, Param::Field) * smp.x_dot.b;
            }
        },
        opts);
}

double pumped_current_cycle(const SProvider& provider, const PumpCycle& cycle, int lead,
                            const QuadratureOptions& opts) {
    return integrate_cycle(
               provider, cycle, 1,
               [lead](const CycleSample& smp, std::span<double> out) {
                   out[0] = emissivity(smp.ds, lead, Param::Width) * smp.x_dot.d +
                            emissivity(smp.ds, lead, Param::Field) * smp.x_dot.b;
               },
               opts)
        .values[0];
}

WeakCurrent pumped_current_weak(const SProvider& provider, const PumpCycle& cycle, int lead,
                                const DifferenceOptions& opts) {
    const Derivatives ds = differentiate(provider, cycle.center(), opts);
    return {bilinear_response(ds, lead), cycle.amp_d * cycle.amp_b * std::sin(cycle.phase)};
}

double pumped_current_closed_form(double energy, Spin spin, double d, double b, double g_star) {
    if (!(2.0 * energy > b * b)) {
        throw DomainError("closed-form pumped current requires 2E > b^2");
    }
    const double k1 = std::sqrt(2.0 * energy);
    const double k2 = std::sqrt(2.0 * energy - b * b);
    const double g_prime = 1.0 - 0.25 * g_star * g_star;
    const double td = closed_form_td(energy, BarrierConfig{b, d, g_star, 0.0});
    return -sign(spin) * 2.0 * b * b * g_star * g_prime * k1 * k1 * k1 * k2 * k2 * k2 *
           std::sin(2.0 * k2 * d) / (td * td);
}

double pumped_current_large_energy(double energy, Spin spin, double d, double b, double g_star) {
    if (!(2.0 * energy > b * b)) {
        throw DomainError("large-energy pumped current requires 2E > b^2");
    }
    const double k1 = std::sqrt(2.0 * energy);
    const double k2 = std::sqrt(2.0 * energy - b * b);
    const double g_prime = 1.0 - 0.25 * g_star * g_star;
    const double s = std::sin(k2 * d);
    const double bracket = 1.0 + b * b * b * b * s * s / (8.0 * energy * (2.0 * energy - b * b));
    return -sign(spin) * b * b * g_star * g_prime * std::sin(2.0 * k2 * d) /
           (8.0 * k1 * k2 * bracket * bracket);
}

CurrentResult spin_charge(double i_up, double i_down, bool normalized) {
    return {i_up, i_down, i_up - i_down, i_up + i_down, normalized};
}

std::vector<Resonance> resonance_energies(int n_max, double d, double b) {
    if (!(d > 0.0)) throw DomainError("resonance estimate needs d > 0");
    std::vector<Resonance> out;
    for (int n = 0; n <= n_max; ++n) {
        const double e = (2 * n + 1) * std::numbers::pi / (8.0 * d) + 0.5 * b * b;
        out.push_back({n, e, 2.0 * e > 4.0 * b * b});
    }
    return out;
}

std::vector<Resonance> resonance_energies_from_phase(int n_max, double d, double b) {
    if (!(d > 0.0)) throw DomainError("resonance estimate needs d > 0");
    std::vector<Resonance> out;
    for (int n = 0; n <= n_max; ++n) {
        const double k2 = (2 * n + 1) * std::numbers::pi / (4.0 * d);
        const double e = 0.5 * b * b + 0.5 * k2 * k2;
        out.push_back({n, e, 2.0 * e > 4.0 * b * b});
    }
    return out;
}

}  // namespace magpump
