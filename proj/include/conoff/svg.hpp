#pragma once

#include "conoff/curve.hpp"

#include <string>
#include <vector>

namespace conoff {

struct SvgLayer {
  TracedCurve curve;
  bool dashed = false;  // the base conic is drawn dashed
  std::string color = "#1f4e9c";
};

struct SvgMarker {
  Point2 at;
  std::string label;
};

struct SvgStyle {
  int width = 640;
  int height = 640;
  double stroke = 1.5;
  double marker_radius = 4;
  bool axes = true;
  std::string title;
};

/// Standalone SVG document. The view box is the union of the layer boxes and
/// the markers. Coordinates are written with fixed precision so equal inputs
/// give identical bytes. Throws PreconditionError when there is nothing to
/// draw.
std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<SvgMarker>& markers,
                       const SvgStyle& style = {});

/// render_svg written to path; std::runtime_error on I/O failure.
void plot_svg(const std::vector<SvgLayer>& layers, const std::vector<SvgMarker>& markers, const SvgStyle& style,
              const std::string& path);

}  // namespace conoff
