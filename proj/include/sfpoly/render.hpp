#pragma once

#include <array>
#include <optional>
#include <string>

#include "sfpoly/cones.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly {

struct RenderOptions {
  /// Viewing direction for 3D input.  Unset means dropping the third
  /// coordinate; a coordinate axis drops that coordinate.
  std::optional<std::array<double, 3>> along;
  double radius = 1.5;  // cone rays are truncated at this length
  int size = 480;       // canvas width and height in pixels
};

/// Standalone SVG of a polytope: vertices labeled with exact coordinates and
/// facet outlines (edges for 2D input).  Throws DomainError for dimension > 3.
std::string render_svg(const Polytope& p, const RenderOptions& options = {});

/// Standalone SVG of a cone system: one shaded ray bundle per cone.
std::string render_svg(const DualConeSystem& sys, const RenderOptions& options = {});

}  // namespace sfpoly
