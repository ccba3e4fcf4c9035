#pragma once

#include <string>
#include <vector>

#include "evtcvar/mc_harness.hpp"

namespace evtcvar {

/// Self-contained SVG line chart of ratio_asym and ratio_sim against gamma.
/// Output bytes depend only on the rows.
std::string render_ratio_svg(const std::vector<SweepRow>& rows, const std::string& title = "Variance ratio");

}  // namespace evtcvar
