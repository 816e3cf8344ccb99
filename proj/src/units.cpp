#include "magpump/units.hpp"

#include <cmath>

#include "magpump/error.hpp"

namespace magpump {

double SiScales::magnetic_length_angstrom() const {
    validate();
    return std::sqrt(si::kHbar / (si::kElectronCharge * b0_tesla)) * 1e10;
}

double SiScales::energy_unit_mev() const {
    return si::kHbar * cyclotron_frequency() / si::kElectronCharge * 1e3;
}

double SiScales::cyclotron_frequency() const {
    validate();
    return si::kElectronCharge * b0_tesla / (m_eff_ratio * si::kElectronMass);
}

void SiScales::validate() const {
    if (!(b0_tesla > 0.0) || !(m_eff_ratio > 0.0)) {
        throw DomainError("reference field and effective mass must be positive");
    }
}

double to_si(double charge_per_cycle, double pump_freq_hz) {
    if (!(pump_freq_hz > 0.0)) throw DomainError("pump frequency must be positive");
    return si::kElectronCharge * pump_freq_hz * charge_per_cycle;
}

}  // namespace magpump
