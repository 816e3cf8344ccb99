#pragma once

#include "magpump/scatter_matrix.hpp"

namespace magpump {

/// Spin projection along z. The numeric value is the sign entering the
/// Zeeman delta terms.
enum class Spin : int { Up = +1, Down = -1 };

constexpr int sign(Spin s) { return static_cast<int>(s); }
constexpr Spin flipped(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }
inline constexpr Spin kSpins[] = {Spin::Up, Spin::Down};

/// Static double-delta magnetic barrier, cyclotron units.
///
/// The field is b [delta(x + d/2) - delta(x - d/2)], so the vector potential
/// is b on (-d/2, d/2) and zero elsewhere. The same gauge is used for both
/// incidence directions.
struct BarrierConfig {
    double b = 5.0;       ///< field strength in units of B0 (sign = magnetization)
    double d = 5.0;       ///< barrier separation in units of l_B
    double g_star = 0.44; ///< effective g-factor
    double q = 0.0;       ///< transverse wavevector in units of 1/l_B
};

struct WaveVectors {
    double k1;  ///< lead wavevector, sqrt(2E - q^2)
    cplx k2;    ///< in-barrier wavevector, sqrt(2E - (q+b)^2), +i|.| when evanescent
    cplx k2_r;  ///< sqrt(2E - (q-b)^2): the right-incidence value under a
                ///< direction-dependent gauge; equals k2 at q = 0
};

/// Square root with the evanescent branch fixed to +i sqrt(|x|).
cplx branch_sqrt(double x);

/// Lead and barrier wavevectors. Throws DomainError when 2E <= q^2.
WaveVectors wavevectors(double energy, const BarrierConfig& cfg);

/// Two-port S-matrix of the double-delta barrier for one spin channel.
///
/// Lead states are e^{+-i k1 x} referenced to x = 0. The derivative jumps
/// are +g*sigma b/2 at -d/2 and -g*sigma b/2 at +d/2. Throws DomainError
/// when the leads do not propagate.
ScatterMatrix s_matrix(double energy, Spin spin, const BarrierConfig& cfg);

/// |t|^2 for one spin channel.
double transmission(double energy, Spin spin, const BarrierConfig& cfg);

/// Denominator of the closed-form q = 0 transmission |t|^2 = 4 k1^2 k2^2 / T_d
/// with g' = 1 - g*^2/4. Requires q = 0 and 2E > b^2.
double closed_form_td(double energy, const BarrierConfig& cfg);

namespace detail {

/// Region-II propagator in the (psi, psi') basis. Only depends on
/// k^2 = kappa_sq, so it is regular through the band edge.
struct Propagator {
    double cos_kd;    ///< cos(k d)
    double sin_k;     ///< sin(k d) / k
    double k_sin;     ///< k sin(k d)
};

Propagator propagator(double kappa_sq, double length);

/// S-matrix of two delta-decorated interfaces at -d/2 and +d/2 enclosing a
/// region with squared wavevector kappa_sq. Shared by the coherent and the
/// spin-orbit models.
ScatterMatrix double_interface(double k1, double kappa_sq, double d, double jump);

}  // namespace detail

}  // namespace magpump
