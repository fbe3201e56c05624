#pragma once

#include <optional>
#include <string>

#include "fcover/geometry.hpp"
#include "fcover/instance_io.hpp"

namespace fcover {

struct RenderOptions {
    double scale = 40.0;   // pixels per unit
    double margin = 1.5;   // world units around the bounding box
    bool draw_tube = true;
    bool draw_labels = true;
};

/// Deterministic SVG of an instance and an optional witness curve. The
/// epsilon tube is drawn when the instance carries epsilon. Convex-polygon
/// targets are drawn closed.
std::string render_svg(const Instance& inst, const std::optional<PolyCurve>& witness = std::nullopt,
                       const RenderOptions& options = {});

}  // namespace fcover
