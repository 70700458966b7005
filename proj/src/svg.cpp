#include "conoff/svg.hpp"

#include "conoff/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

namespace conoff {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<SvgMarker>& markers,
                       const SvgStyle& style) {
  if (layers.empty() && markers.empty()) throw PreconditionError("nothing to plot");
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& layer : layers) {
    grow(layer.curve.bbox.xmin, layer.curve.bbox.ymin);
    grow(layer.curve.bbox.xmax, layer.curve.bbox.ymax);
  }
  for (const auto& m : markers) grow(m.at.x, m.at.y);
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-6});
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double sx = style.width / (xmax - xmin), sy = style.height / (ymax - ymin);
  const double s = std::min(sx, sy);
  auto px = [&](double x) { return num((x - xmin) * s); };
  auto py = [&](double y) { return num((ymax - y) * s); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num((xmax - xmin) * s) + "\" height=\"" +
         num((ymax - ymin) * s) + "\">\n";
  if (!style.title.empty()) out += "  <title>" + escape(style.title) + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (style.axes) {
    if (xmin < 0 && xmax > 0) {
      out += "  <line class=\"axis\" x1=\"" + px(0) + "\" y1=\"" + py(ymin) + "\" x2=\"" + px(0) + "\" y2=\"" +
             py(ymax) + "\" stroke=\"#999\" stroke-width=\"0.75\"/>\n";
    }
    if (ymin < 0 && ymax > 0) {
      out += "  <line class=\"axis\" x1=\"" + px(xmin) + "\" y1=\"" + py(0) + "\" x2=\"" + px(xmax) + "\" y2=\"" +
             py(0) + "\" stroke=\"#999\" stroke-width=\"0.75\"/>\n";
    }
  }
  for (const auto& layer : layers) {
    for (const auto& line : layer.curve.polylines) {
      if (line.size() < 2) continue;
      out += "  <polyline class=\"curve\" fill=\"none\" stroke=\"" + escape(layer.color) + "\" stroke-width=\"" +
             num(style.stroke) + "\"";
      if (layer.dashed) out += " stroke-dasharray=\"6 4\"";
      out += " points=\"";
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (k) out += ' ';
        out += px(line[k].x) + "," + py(line[k].y);
      }
      out += "\"/>\n";
    }
  }
  for (const auto& m : markers) {
    out += "  <circle class=\"marker\" cx=\"" + px(m.at.x) + "\" cy=\"" + py(m.at.y) + "\" r=\"" +
           num(style.marker_radius) + "\" fill=\"#c0392b\"/>\n";
    if (!m.label.empty()) {
      out += "  <text x=\"" + num((m.at.x - xmin) * s + style.marker_radius + 2) + "\" y=\"" +
             num((ymax - m.at.y) * s - style.marker_radius - 2) + "\" font-size=\"12\">" + escape(m.label) +
             "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void plot_svg(const std::vector<SvgLayer>& layers, const std::vector<SvgMarker>& markers, const SvgStyle& style,
              const std::string& path) {
  const std::string text = render_svg(layers, markers, style);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace conoff
