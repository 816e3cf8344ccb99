#pragma once

#include <string>
#include <vector>

#include "magpump/config.hpp"

namespace magpump {

/// Names accepted by figure_preset(): fig2a ... fig9b.
const std::vector<std::string>& figure_names();

/// All panels of one figure preset, main panel first, then insets
/// (config names like "fig5a_inset"). Throws ConfigError for unknown names.
std::vector<RunConfig> figure_preset(const std::string& name);

}  // namespace magpump
