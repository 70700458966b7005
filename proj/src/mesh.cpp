#include "conoff/mesh.hpp"

#include "conoff/errors.hpp"
#include "conoff/roots.hpp"
#include "conoff/svg.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace conoff {

void validate(const MeshSpec& spec) {
  if (spec.ellipse.kind() != ConicKind::Ellipse) throw SpecError("mesh needs an ellipse");
  if (spec.offsets.empty()) throw SpecError("mesh needs at least one offset");
  if (spec.y_stations.empty()) throw SpecError("mesh needs at least one y-station");
  const double rc = to_double(r_crit(spec.ellipse));
  const double a = to_double(spec.ellipse.a());
  for (std::size_t i = 0; i < spec.offsets.size(); ++i) {
    const double r = spec.offsets[i];
    if (!(r > 0) || !(r < rc)) {
      throw SpecError("offset " + std::to_string(r) + " is outside (0, r_crit = " + std::to_string(rc) + ")");
    }
    if (i && !(r > spec.offsets[i - 1])) throw SpecError("offsets must be strictly ascending");
  }
  for (std::size_t i = 0; i < spec.y_stations.size(); ++i) {
    const double y = spec.y_stations[i];
    if (!(y > -a) || !(y < a)) throw SpecError("y-station " + std::to_string(y) + " is outside (-a, a)");
    if (i && !(y < spec.y_stations[i - 1])) throw SpecError("y-stations must be strictly descending");
  }
}

BigRational decimal_rational(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return parse_rational(std::string(buf, res.ptr));
}

namespace {

/// Layer polynomial in 100-digit arithmetic for Newton refinement.
struct HighPoly {
  std::vector<std::tuple<unsigned, unsigned, HighFloat>> terms;

  explicit HighPoly(const MultiPoly& g) {
    for (const auto& [m, c] : g.terms()) terms.emplace_back(m[0], m[1], to_high(c));
  }

  void eval(const HighFloat& x, const HighFloat& y, HighFloat& v, HighFloat& gx, HighFloat& gy) const {
    v = gx = gy = 0;
    for (const auto& [i, j, c] : terms) {
      const HighFloat xi = pow(x, i), yj = pow(y, j);
      v += c * xi * yj;
      if (i) gx += c * i * pow(x, i - 1) * yj;
      if (j) gy += c * j * xi * pow(y, j - 1);
    }
  }
};

Point2 refine_on_normal(const HighPoly& g, double scale, const HighFloat& x0, const HighFloat& y0,
                        const HighFloat& nx, const HighFloat& ny, double r) {
  HighFloat t = r;
  const HighFloat tol = HighFloat(scale) * HighFloat("1e-30");
  for (int it = 0; it < 50; ++it) {
    HighFloat v, gx, gy;
    g.eval(x0 + t * nx, y0 + t * ny, v, gx, gy);
    if (abs(v) <= tol) return {(x0 + t * nx).convert_to<double>(), (y0 + t * ny).convert_to<double>()};
    const HighFloat d = gx * nx + gy * ny;
    if (d == 0) break;
    t -= v / d;
  }
  throw RootRefineError("Newton did not converge on the offset " + std::to_string(r) + " layer");
}

}  // namespace

Mesh generate_mesh(const MeshSpec& spec) {
  validate(spec);
  const std::size_t m = spec.offsets.size();
  const std::size_t s = spec.y_stations.size();
  Mesh mesh;
  mesh.rows = static_cast<int>(2 * m + 1);
  mesh.cols = static_cast<int>(2 * s + 2);
  for (std::size_t k = m; k-- > 0;) mesh.row_offsets.push_back(spec.offsets[k]);
  mesh.row_offsets.push_back(0.0);
  for (std::size_t k = 0; k < m; ++k) mesh.row_offsets.push_back(-spec.offsets[k]);

  const HighFloat a = to_high(spec.ellipse.a()), b = to_high(spec.ellipse.b());

  // Base points with unit outward normals, in column order.
  struct Base {
    HighFloat x, y, nx, ny;
  };
  std::vector<Base> bases;
  auto station = [&](double yd, int side) {
    const HighFloat y = yd;
    const HighFloat x = side * b * sqrt(1 - y * y / (a * a));
    HighFloat nx = x / (b * b), ny = y / (a * a);
    const HighFloat len = sqrt(nx * nx + ny * ny);
    bases.push_back({x, y, nx / len, ny / len});
  };
  for (double y : spec.y_stations) station(y, -1);
  bases.push_back({0, -a, 0, -1});
  for (std::size_t k = s; k-- > 0;) station(spec.y_stations[k], 1);
  bases.push_back({0, a, 0, 1});

  mesh.nodes.resize(static_cast<std::size_t>(mesh.rows) * mesh.cols);
  for (int row = 0; row < mesh.rows; ++row) {
    const double d = mesh.row_offsets[row];
    if (d == 0) {
      for (int col = 0; col < mesh.cols; ++col) {
        const Base& p = bases[col];
        mesh.nodes[row * mesh.cols + col] = {p.x.convert_to<double>(), p.y.convert_to<double>()};
      }
      continue;
    }
    const MultiPoly g = offset_poly_closed_form(spec.ellipse, decimal_rational(std::abs(d))).g;
    const HighPoly hg(g);
    const double scale = coefficient_scale(g);
    for (int col = 0; col < mesh.cols; ++col) {
      const Base& p = bases[col];
      mesh.nodes[row * mesh.cols + col] = refine_on_normal(hg, scale, p.x, p.y, p.nx, p.ny, d);
    }
  }

  auto idx = [&](int row, int col) { return row * mesh.cols + (col % mesh.cols); };
  // Row r lies outside row r + 1, and columns advance counterclockwise.
  for (int row = 0; row + 1 < mesh.rows; ++row) {
    for (int col = 0; col < mesh.cols; ++col) {
      mesh.quad4.push_back({idx(row + 1, col), idx(row, col), idx(row, col + 1), idx(row + 1, col + 1)});
    }
  }
  for (int row = 0; row + 2 < mesh.rows; row += 2) {
    for (int col = 0; col + 1 < mesh.cols; col += 2) {
      mesh.quad9.push_back({idx(row + 2, col), idx(row, col), idx(row, col + 2), idx(row + 2, col + 2),
                            idx(row + 1, col), idx(row, col + 1), idx(row + 1, col + 2), idx(row + 2, col + 1),
                            idx(row + 1, col + 1)});
    }
  }
  return mesh;
}

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <std::size_t N>
std::string index_lists(const std::vector<std::array<int, N>>& elems) {
  std::string out = "[";
  for (std::size_t e = 0; e < elems.size(); ++e) {
    out += e ? ",\n    [" : "\n    [";
    for (std::size_t k = 0; k < N; ++k) {
      if (k) out += ",";
      out += std::to_string(elems[e][k]);
    }
    out += "]";
  }
  out += elems.empty() ? "]" : "\n  ]";
  return out;
}

}  // namespace

std::string mesh_to_json(const Mesh& mesh) {
  std::string out = "{\n";
  out +=
      "  \"column_order\": \"counterclockwise: x<0 stations top to bottom, bottom y-axis point, "
      "x>0 stations bottom to top, top y-axis point\",\n";
  out += "  \"rows\": " + std::to_string(mesh.rows) + ",\n";
  out += "  \"cols\": " + std::to_string(mesh.cols) + ",\n";
  out += "  \"row_offsets\": [";
  for (std::size_t k = 0; k < mesh.row_offsets.size(); ++k) out += (k ? "," : "") + g17(mesh.row_offsets[k]);
  out += "],\n  \"nodes\": [";
  for (std::size_t k = 0; k < mesh.nodes.size(); ++k) {
    out += k ? ",\n    [" : "\n    [";
    out += g17(mesh.nodes[k].x) + "," + g17(mesh.nodes[k].y) + "]";
  }
  out += mesh.nodes.empty() ? "]" : "\n  ]";
  out += ",\n  \"quad4\": " + index_lists(mesh.quad4);
  out += ",\n  \"quad9\": " + index_lists(mesh.quad9);
  out += "\n}\n";
  return out;
}

Mesh mesh_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("mesh JSON: ") + e.what());
  }
  Mesh mesh;
  try {
    mesh.rows = j.at("rows").get<int>();
    mesh.cols = j.at("cols").get<int>();
    mesh.row_offsets = j.at("row_offsets").get<std::vector<double>>();
    for (const auto& n : j.at("nodes")) mesh.nodes.push_back({n.at(0).get<double>(), n.at(1).get<double>()});
    mesh.quad4 = j.at("quad4").get<std::vector<std::array<int, 4>>>();
    mesh.quad9 = j.at("quad9").get<std::vector<std::array<int, 9>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("mesh JSON: ") + e.what());
  }
  return mesh;
}

void export_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << mesh_to_json(mesh);
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

Mesh load_mesh(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return mesh_from_json(buf.str());
}

std::string mesh_svg(const Mesh& mesh) {
  BBox box{1e300, -1e300, 1e300, -1e300};
  for (const auto& p : mesh.nodes) {
    box.xmin = std::min(box.xmin, p.x);
    box.xmax = std::max(box.xmax, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.ymax = std::max(box.ymax, p.y);
  }
  std::vector<SvgLayer> layers;
  for (int row = 0; row < mesh.rows; ++row) {
    std::vector<Point2> loop;
    for (int col = 0; col <= mesh.cols; ++col) loop.push_back(mesh.nodes[row * mesh.cols + col % mesh.cols]);
    layers.push_back({TracedCurve{{loop}, box, 0}, mesh.row_offsets[row] == 0, "#1f4e9c"});
  }
  for (int col = 0; col < mesh.cols; ++col) {
    std::vector<Point2> line;
    for (int row = 0; row < mesh.rows; ++row) line.push_back(mesh.nodes[row * mesh.cols + col]);
    layers.push_back({TracedCurve{{line}, box, 0}, false, "#7f8c8d"});
  }
  std::vector<SvgMarker> markers;
  for (const auto& p : mesh.nodes) markers.push_back({p, ""});
  SvgStyle style;
  style.marker_radius = 2;
  style.stroke = 1;
  return render_svg(layers, markers, style);
}

}  // namespace conoff
