#include "magpump/thermo.hpp"

#include <cmath>
#include <numbers>

namespace magpump {

namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;

void heat_integrand(const CycleSample& smp, int lead, std::span<double> out) {
    const PortMatrix dt = smp.dt_s();
    const PortMatrix a = dt * smp.ds.s.matrix().adjoint();
    double heat = 0.0;
    double noise = 0.0;
    for (int beta = 0; beta < dt.cols(); ++beta) {
        heat += std::norm(dt(lead, beta));
        if (beta != lead) noise += std::norm(a(lead, beta));
    }
    out[0] = heat;
    out[1] = std::norm(a(lead, lead));
    out[2] = noise;
}

}  // namespace

HeatSplit joule_noise_split(const SProvider& provider, const PumpCycle& cycle, int lead,
                            const QuadratureOptions& opts) {
    const CycleIntegral r = integrate_cycle(
        provider, cycle, 3,
        [lead](const CycleSample& smp, std::span<double> out) { heat_integrand(smp, lead, out); },
        opts);
    const double scale = 1.0 / (kEightPi * cycle.period());
    return {r.values[0] * scale, r.values[1] * scale, r.values[2] * scale};
}

double heat_current(const SProvider& provider, const PumpCycle& cycle, int lead,
                    const QuadratureOptions& opts) {
    return joule_noise_split(provider, cycle, lead, opts).heat;
}

HeatSplit weak_heat_joule_noise(const SProvider& provider, const PumpCycle& cycle, int lead,
                                const DifferenceOptions& opts) {
    const Derivatives ds = differentiate(provider, cycle.center(), opts);
    const PortMatrix& s = ds.s.matrix();
    const PortMatrix& s1 = ds.d_width.matrix();
    const PortMatrix& s2 = ds.d_field.matrix();
    const double x1 = cycle.amp_d;
    const double x2 = cycle.amp_b;
    const double cross = 2.0 * x1 * x2 * std::cos(cycle.phase);
    const double w2 = cycle.omega * cycle.omega;
    const double pre = w2 / (16.0 * std::numbers::pi);

    // Bilinear form x1^2 |u|^2 + x2^2 |v|^2 + 2 x1 x2 cos(phi) Re(u conj(v)).
    auto form = [&](cplx u, cplx v) {
        return x1 * x1 * std::norm(u) + x2 * x2 * std::norm(v) + cross * std::real(u * std::conj(v));
    };

    HeatSplit out;
    const PortMatrix a1 = s1 * s.adjoint();
    const PortMatrix a2 = s2 * s.adjoint();
    for (int beta = 0; beta < s.cols(); ++beta) {
        out.heat += form(s1(lead, beta), s2(lead, beta));
        if (beta != lead) out.noise += form(a1(lead, beta), a2(lead, beta));
    }
    out.joule = form(a1(lead, lead), a2(lead, lead));
    out.heat *= pre;
    out.joule *= pre;
    out.noise *= pre;
    return out;
}

OptimalityRow optimality_row(double energy, const HeatResult& heat) {
    const double h = heat.heat();
    if (!(h > 1e-16)) {
        return {energy, std::nullopt, std::nullopt, false};
    }
    const double nr = heat.noise() / h;
    return {energy, nr, heat.joule() / h, nr < kOptimalNoiseRatio};
}

std::vector<OptimalityRow> optimality_report(
    const std::vector<std::pair<double, HeatResult>>& sweep) {
    std::vector<OptimalityRow> rows;
    rows.reserve(sweep.size());
    for (const auto& [e, h] : sweep) rows.push_back(optimality_row(e, h));
    return rows;
}

}  // namespace magpump
