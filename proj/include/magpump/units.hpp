#pragma once

namespace magpump {

namespace si {
inline constexpr double kElectronCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kElectronMass = 9.1093837015e-31;   // kg
}  // namespace si

/// Conversion between cyclotron units and SI for a reference field B0.
struct SiScales {
    double b0_tesla = 0.1;
    double m_eff_ratio = 0.067;
    double g_star = 0.44;

    /// Magnetic length sqrt(hbar / (e B0)) in Angstrom.
    double magnetic_length_angstrom() const;
    /// hbar w_c in meV.
    double energy_unit_mev() const;
    /// w_c = e B0 / m* in rad/s.
    double cyclotron_frequency() const;

    void validate() const;
};

/// Dimensionless pumped charge per cycle -> amperes: e f value, with f the
/// cyclic pump frequency in Hz.
double to_si(double charge_per_cycle, double pump_freq_hz);

}  // namespace magpump
