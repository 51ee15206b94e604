#pragma once

#include <optional>
#include <string>

#include "gvt/tiling.hpp"

namespace gvt {

struct BBox {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool empty() const { return !(x0 < x1 && y0 < y1); }
};

/// SVG of the tiling patch meeting the bbox, one polygon per tile labeled
/// by f, shared faces stroked. Supported for rank (= |V|-1) at most 2;
/// rendering is the only place exact coordinates are rounded (6 decimals).
std::string render_tiling(const TilingContext& ctx, const BBox& bbox,
                          std::optional<Int> window = std::nullopt);

}  // namespace gvt
