#pragma once

#include <string>
#include <vector>

#include "seriescone/support.hpp"

namespace seriescone {

struct PlotData {
  std::string svg;
  std::string csv;
};

// Deterministic 2-D scatter of a support spec (families truncated to
// `family_depth` members) with the tau cone shaded and corner points marked.
// Fixed viewport, sorted elements, integer coordinates only.
PlotData plot_spec(const SupportSpec& s, const std::vector<RatVec>& corners = {},
                   int family_depth = 8);

PlotData plot_points(const std::vector<RatVec>& pts);

}  // namespace seriescone
