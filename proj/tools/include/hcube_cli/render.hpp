#pragma once

#include <optional>
#include <string>

#include "hcube/twist.hpp"

namespace hcube::cli {

struct RenderSpec {
  CellMap map;
  int grid = 16;  // power of two >= 8
  std::optional<PointRep> trace;
  int trace_stages = 0;
};

/// Deterministic SVG: the left panel colors the source square by piece, the
/// right panel draws the image of the 2(grid+1) grid lines as polylines
/// (data-line="v<i>" / "h<j>") plus an optional trajectory of the traced
/// point's (x_n, x_m) under repeated application of the map.
std::string render_svg(const RenderSpec& spec);

}  // namespace hcube::cli
