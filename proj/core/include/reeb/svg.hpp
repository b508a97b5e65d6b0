#pragma once

#include <span>
#include <string>

#include "reeb/drawing.hpp"

namespace reeb {

struct RenderOptions {
  double width = 800;
  double height = 600;
  double margin = 40;
  double vertex_radius = 4;
  bool level_lines = false;
  double stroke_width = 1.5;
  /// Style edges by the labels passed to render_svg ("E1".."E4").
  bool color_by_part = false;
};

/// Throws ErrorCode::InvalidArgument unless every dimension is positive and
/// the margins leave room for the picture.
void check_render_options(const RenderOptions& opts);

/// Deterministic SVG. Heights grow upward on screen: a point (x, y) maps to
/// (margin + (x - xmin) * sx, margin + (ymax - y) * sy). A drawing without
/// extent along an axis is centred on that axis. `edge_parts` optionally
/// labels each edge for color_by_part.
std::string render_svg(const Drawing& d, const RenderOptions& opts = {},
                       std::span<const std::string> edge_parts = {});

}  // namespace reeb
