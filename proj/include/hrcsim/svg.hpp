#pragma once

#include <string>
#include <vector>

#include "hrcsim/metrics.hpp"

namespace hrcsim {

// One horizontal band per agent, states color-coded by a fixed table.
std::string gantt_svg(const StateTimeline& tl);

// CI x SL heatmap of cell values (row-major, rows = sl, cols = ci).
// NaN cells render hatched gray.
std::string heatmap_svg(const std::string& title, const std::vector<double>& ci,
                        const std::vector<int>& sl, const std::vector<double>& values,
                        const std::string& value_label);

const char* state_color(StateLabel s);

}  // namespace hrcsim
