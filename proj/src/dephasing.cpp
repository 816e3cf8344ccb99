#include "magpump/dephasing.hpp"

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "magpump/error.hpp"

namespace magpump {

namespace {

using Mat2 = Eigen::Matrix2cd;
constexpr cplx kI{0.0, 1.0};

// Flux-normalized amplitudes (A, B) -> (psi, psi') for A e^{ikx} + B e^{-ikx}.
Mat2 amplitudes_to_state(double k) {
    const double rk = std::sqrt(k);
    Mat2 m;
    m << 1.0 / rk, 1.0 / rk, kI * rk, -kI * rk;
    return m;
}

Mat2 state_to_amplitudes(double k) {
    const double rk = std::sqrt(k);
    const cplx c = 1.0 / (2.0 * kI * rk);
    Mat2 m;
    m << 0.5 * rk, c, 0.5 * rk, -c;
    return m;
}

void check_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw DomainError("splitter coupling must lie in [0, 1]");
    }
}

}  // namespace

ScatterMatrix splitter_matrix(double epsilon) {
    check_epsilon(epsilon);
    const double a = std::sqrt(1.0 - epsilon);
    const double e = std::sqrt(epsilon);
    ScatterMatrix s(4);
    s(0, 1) = a;
    s(0, 2) = e;
    s(1, 0) = a;
    s(1, 3) = e;
    s(2, 0) = e;
    s(2, 3) = -a;
    s(3, 1) = e;
    s(3, 2) = -a;
    return s;
}

ScatterMatrix interface_s_matrix(double k_left, double k_right, double jump) {
    if (!(k_left > 0.0) || !(k_right > 0.0)) {
        throw DomainError("interface matrix needs propagating waves on both sides");
    }
    Mat2 jmp;
    jmp << 1.0, 0.0, jump, 1.0;
    const Mat2 t = state_to_amplitudes(k_right) * jmp * amplitudes_to_state(k_left);
    const cplx inv = 1.0 / t(1, 1);
    ScatterMatrix s(2);
    s(0, 0) = -t(1, 0) * inv;
    s(1, 0) = inv;
    s(0, 1) = inv;
    s(1, 1) = t(0, 1) * inv;
    return s;
}

CompositeSystem compose(const ScatterMatrix& left, const ScatterMatrix& splitter,
                        const ScatterMatrix& right, cplx k2, double d) {
    if (left.dim() != 2 || right.dim() != 2 || splitter.dim() != 4) {
        throw DomainError("compose expects 2-port halves and a 4-port splitter");
    }
    // Global port numbering: 0 left lead, 1 left inner, 2..5 splitter, 6 right
    // inner, 7 right lead.
    Eigen::Matrix<cplx, 8, 8> all = Eigen::Matrix<cplx, 8, 8>::Zero();
    all.block<2, 2>(0, 0) = left.matrix();
    all.block<4, 4>(2, 2) = splitter.matrix();
    all.block<2, 2>(6, 6) = right.matrix();

    constexpr std::array<int, 4> ext{0, 7, 4, 5};
    constexpr std::array<int, 4> in{1, 2, 3, 6};
    const cplx phase = std::exp(kI * k2 * (0.5 * d));

    // Internal incoming = gamma * internal outgoing: 1<->2 and 3<->6.
    Eigen::Matrix4cd gamma = Eigen::Matrix4cd::Zero();
    gamma(0, 1) = phase;
    gamma(1, 0) = phase;
    gamma(2, 3) = phase;
    gamma(3, 2) = phase;

    Eigen::Matrix4cd s_ee, s_ei, s_ie, s_ii;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            s_ee(i, j) = all(ext[i], ext[j]);
            s_ei(i, j) = all(ext[i], in[j]);
            s_ie(i, j) = all(in[i], ext[j]);
            s_ii(i, j) = all(in[i], in[j]);
        }
    }
    const Eigen::Matrix4cd loop = Eigen::Matrix4cd::Identity() - s_ii * gamma;
    const Eigen::Matrix4cd inner = loop.partialPivLu().solve(s_ie);
    const Eigen::Matrix4cd total = s_ee + s_ei * gamma * inner;
    if (!total.allFinite()) {
        throw DegenerateInput("internal multiple-scattering solve is singular");
    }
    return {ScatterMatrix(PortMatrix(total)), phase};
}

CompositeSystem composite_system(double energy, Spin spin, const BarrierConfig& cfg,
                                 double epsilon) {
    const WaveVectors kv = wavevectors(energy, cfg);
    const double kappa_sq = 2.0 * energy - (cfg.q + cfg.b) * (cfg.q + cfg.b);
    if (!(kappa_sq > 0.0)) {
        throw DomainError("probe model requires a propagating in-barrier wave (2E > (q+b)^2)");
    }
    const double k2 = std::sqrt(kappa_sq);
    const double jump = 0.5 * cfg.g_star * sign(spin) * cfg.b;

    // Lead ports referenced to x = 0 instead of the interface position.
    const cplx lead_phase = std::exp(-kI * kv.k1 * (0.5 * cfg.d));
    ScatterMatrix left = interface_s_matrix(kv.k1, k2, jump);
    left(0, 0) *= lead_phase * lead_phase;
    left(0, 1) *= lead_phase;
    left(1, 0) *= lead_phase;
    ScatterMatrix right = interface_s_matrix(k2, kv.k1, -jump);
    right(1, 1) *= lead_phase * lead_phase;
    right(0, 1) *= lead_phase;
    right(1, 0) *= lead_phase;

    return compose(left, splitter_matrix(epsilon), right, k2, cfg.d);
}

SProvider dephased_provider(double energy, Spin spin, double g_star, double q, double epsilon) {
    check_epsilon(epsilon);
    return [=](const PumpPoint& x) {
        return composite_system(energy, spin, BarrierConfig{x.b, x.d, g_star, q}, epsilon).s;
    };
}

ReinjectionRatio k_in(const ScatterMatrix& composite) {
    if (composite.dim() != 4) {
        throw DomainError("re-injection ratio needs the four-port composite");
    }
    const double from1 = composite.probability(kProbeA, kLeftLead) +
                         composite.probability(kProbeB, kLeftLead);
    const double from2 = composite.probability(kProbeA, kRightLead) +
                         composite.probability(kProbeB, kRightLead);
    const double total = from1 + from2;
    if (!(total > 1e-14)) {
        return {0.0, 1.0, true};
    }
    const double k1 = from1 / total;
    return {k1, 1.0 - k1, false};
}

DephasedCurrent pumped_current_dephased(double energy, Spin spin, const PumpCycle& cycle,
                                        double epsilon, double g_star, double q, bool weak_mode,
                                        const QuadratureOptions& opts) {
    const SProvider provider = dephased_provider(energy, spin, g_star, q, epsilon);
    if (weak_mode) {
        const Derivatives ds = differentiate(provider, cycle.center(), opts.diff);
        const ReinjectionRatio k = k_in(ds.s);
        const double probe = bilinear_response(ds, kProbeA) + bilinear_response(ds, kProbeB);
        return {bilinear_response(ds, kLeftLead) + k.lead1 * probe,
                bilinear_response(ds, kRightLead) + k.lead2 * probe,
                cycle.amp_d * cycle.amp_b * std::sin(cycle.phase), true};
    }
    const CycleIntegral r = integrate_cycle(
        provider, cycle, 2,
        [](const CycleSample& smp, std::span<double> out) {
            std::array<double, 4> f{};
            for (int a = 0; a < 4; ++a) {
                f[a] = emissivity(smp.ds, a, Param::Width) * smp.x_dot.d +
                       emissivity(smp.ds, a, Param::Field) * smp.x_dot.b;
            }
            const ReinjectionRatio k = k_in(smp.ds.s);
            out[0] = f[0] + k.lead1 * (f[2] + f[3]);
            out[1] = f[1] + k.lead2 * (f[2] + f[3]);
        },
        opts);
    return {r.values[0], r.values[1], 1.0, false};
}

double epsilon_from_coherence(double d, double d_phi) {
    if (!(d_phi > 0.0)) throw DomainError("coherence length must be positive");
    return 1.0 - std::exp(-d / d_phi);
}

}  // namespace magpump
