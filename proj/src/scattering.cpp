#include "magpump/scattering.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "magpump/error.hpp"

namespace magpump {

namespace {

using Mat2 = Eigen::Matrix2cd;

constexpr cplx kI{0.0, 1.0};

// (A, B) amplitudes of A e^{ik x} + B e^{-ik x} -> (psi, psi') at x.
Mat2 lead_to_state(double k, double x) {
    const cplx ep = std::exp(kI * k * x);
    const cplx em = std::conj(ep);
    Mat2 m;
    m << ep, em, kI * k * ep, -kI * k * em;
    return m;
}

Mat2 state_to_lead(double k, double x) {
    const cplx ep = std::exp(kI * k * x);
    const cplx em = std::conj(ep);
    const cplx inv2ik = 1.0 / (2.0 * kI * k);
    Mat2 m;
    m << 0.5 * em, em * inv2ik, 0.5 * ep, -ep * inv2ik;
    return m;
}

Mat2 derivative_jump(double jump) {
    Mat2 m;
    m << 1.0, 0.0, jump, 1.0;
    return m;
}

}  // namespace

cplx branch_sqrt(double x) {
    return x >= 0.0 ? cplx(std::sqrt(x), 0.0) : cplx(0.0, std::sqrt(-x));
}

WaveVectors wavevectors(double energy, const BarrierConfig& cfg) {
    const double lead = 2.0 * energy - cfg.q * cfg.q;
    if (!(lead > 0.0)) {
        throw DomainError("no propagating lead mode: 2E <= q^2");
    }
    const double inside = 2.0 * energy - (cfg.q + cfg.b) * (cfg.q + cfg.b);
    const double inside_r = 2.0 * energy - (cfg.q - cfg.b) * (cfg.q - cfg.b);
    return {std::sqrt(lead), branch_sqrt(inside), branch_sqrt(inside_r)};
}

namespace detail {

Propagator propagator(double kappa_sq, double length) {
    const double u = kappa_sq * length * length;
    if (std::abs(u) < 1e-6) {
        const double s = length * (1.0 - u / 6.0 + u * u / 120.0);
        return {1.0 - u / 2.0 + u * u / 24.0, s, kappa_sq * s};
    }
    if (kappa_sq > 0.0) {
        const double k = std::sqrt(kappa_sq);
        const double sn = std::sin(k * length);
        return {std::cos(k * length), sn / k, k * sn};
    }
    const double kappa = std::sqrt(-kappa_sq);
    const double sh = std::sinh(kappa * length);
    return {std::cosh(kappa * length), sh / kappa, -kappa * sh};
}

ScatterMatrix double_interface(double k1, double kappa_sq, double d, double jump) {
    const Propagator p = propagator(kappa_sq, d);
    Mat2 m;
    m << p.cos_kd, p.sin_k, -p.k_sin, p.cos_kd;

    const Mat2 transfer = state_to_lead(k1, 0.5 * d) * derivative_jump(-jump) * m *
                          derivative_jump(jump) * lead_to_state(k1, -0.5 * d);

    // det(transfer) = 1 for identical leads, hence t = t' = 1 / T22.
    const cplx inv = 1.0 / transfer(1, 1);
    ScatterMatrix s(2);
    s(0, 0) = -transfer(1, 0) * inv;
    s(1, 0) = inv;
    s(0, 1) = inv;
    s(1, 1) = transfer(0, 1) * inv;
    if (!s.matrix().allFinite()) {
        throw DegenerateInput("barrier attenuation overflows double precision");
    }
    return s;
}

}  // namespace detail

ScatterMatrix s_matrix(double energy, Spin spin, const BarrierConfig& cfg) {
    const WaveVectors kv = wavevectors(energy, cfg);
    const double kappa_sq = 2.0 * energy - (cfg.q + cfg.b) * (cfg.q + cfg.b);
    const double jump = 0.5 * cfg.g_star * sign(spin) * cfg.b;
    return detail::double_interface(kv.k1, kappa_sq, cfg.d, jump);
}

double transmission(double energy, Spin spin, const BarrierConfig& cfg) {
    return s_matrix(energy, spin, cfg).probability(kRightLead, kLeftLead);
}

double closed_form_td(double energy, const BarrierConfig& cfg) {
    if (cfg.q != 0.0) {
        throw DomainError("closed-form T_d is only defined at q = 0");
    }
    const double k1_sq = 2.0 * energy;
    const double k2_sq = 2.0 * energy - cfg.b * cfg.b;
    if (!(k1_sq > 0.0) || !(k2_sq > 0.0)) {
        throw DomainError("closed-form T_d requires 2E > b^2");
    }
    const double g_prime = 1.0 - 0.25 * cfg.g_star * cfg.g_star;
    const double phase = std::sqrt(k2_sq) * cfg.d;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double a = 4.0 * energy - g_prime * cfg.b * cfg.b;
    return 4.0 * k1_sq * k2_sq * c * c + a * a * s * s;
}

}  // namespace magpump
