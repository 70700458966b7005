#include "conoff/curve.hpp"

#include "conoff/errors.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace conoff {

double eval_poly(const MultiPoly& g, Point2 pt, const std::map<std::string, double>& params) {
  const Ring& ring = g.ring();
  std::vector<double> values(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const std::string& name = ring.name(i);
    if (name == "x") {
      values[i] = pt.x;
    } else if (name == "y") {
      values[i] = pt.y;
    } else if (auto it = params.find(name); it != params.end()) {
      values[i] = it->second;
    } else {
      throw VarError("no value for variable '" + name + "'");
    }
  }
  double acc = 0;
  for (const auto& [m, c] : g.terms()) {
    double term = to_double(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= std::pow(values[i], static_cast<int>(m[i]));
    }
    acc += term;
  }
  return acc;
}

double coefficient_scale(const MultiPoly& g) {
  double s = 0;
  for (const auto& [m, c] : g.terms()) s = std::max(s, std::abs(to_double(c)));
  return s;
}

FloatPoly::FloatPoly(const MultiPoly& g) {
  const int ix = g.ring().index_of("x"), iy = g.ring().index_of("y");
  if (ix < 0 || iy < 0 || g.ring().size() != 2) throw VarError("FloatPoly needs a polynomial over [x, y]");
  coeffs_.assign(g.degree_in(ix) + 1, std::vector<double>(g.degree_in(iy) + 1, 0.0));
  for (const auto& [m, c] : g.terms()) coeffs_[m[ix]][m[iy]] = to_double(c);
  scale_ = coefficient_scale(g);
}

double FloatPoly::operator()(double x, double y) const {
  double acc = 0;
  for (auto i = coeffs_.rbegin(); i != coeffs_.rend(); ++i) {
    double row = 0;
    for (auto j = i->rbegin(); j != i->rend(); ++j) row = row * y + *j;
    acc = acc * x + row;
  }
  return acc;
}

void FloatPoly::eval_grad(double x, double y, double& v, double& gx, double& gy) const {
  v = gx = gy = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    double row = 0, drow = 0;
    for (std::size_t j = coeffs_[i].size(); j-- > 0;) {
      drow = drow * y + row;
      row = row * y + coeffs_[i][j];
    }
    gx = gx * x + v;
    v = v * x + row;
    gy = gy * x + drow;
  }
}

std::vector<Point2> parametric_offset_samples(const ConicSpec& conic, double r, int n) {
  if (n < 2) throw ParamError("need at least 2 samples");
  if (!(r > 0)) throw ParamError("offset r must be positive");
  std::vector<Point2> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  auto emit = [&](double x0, double y0, double nx, double ny) {
    const double len = std::hypot(nx, ny);
    nx /= len;
    ny /= len;
    out.push_back({x0 + r * nx, y0 + r * ny});
    out.push_back({x0 - r * nx, y0 - r * ny});
  };
  switch (conic.kind()) {
    case ConicKind::Parabola: {
      const double p = to_double(conic.p());
      const double L = std::max(3.0, 6 * std::abs(p));
      for (int i = 0; i < n; ++i) {
        const double t = -L + 2 * L * i / (n - 1);
        emit(t, t * t / (4 * p), t, -2 * p);
      }
      break;
    }
    case ConicKind::Ellipse: {
      const double a = to_double(conic.a()), b = to_double(conic.b());
      for (int i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * i / n;
        const double x0 = b * std::cos(t), y0 = a * std::sin(t);
        emit(x0, y0, x0 / (b * b), y0 / (a * a));
      }
      break;
    }
    case ConicKind::Hyperbola: {
      const double a = to_double(conic.a()), b = to_double(conic.b());
      const double T = std::asinh(3.0);
      const int upper = (n + 1) / 2;
      for (int i = 0; i < n; ++i) {
        const bool top = i < upper;
        const int k = top ? i : i - upper;
        const int count = top ? upper : n - upper;
        const double t = count == 1 ? 0.0 : -T + 2 * T * k / (count - 1);
        const double x0 = b * std::sinh(t), y0 = (top ? a : -a) * std::cosh(t);
        emit(x0, y0, -x0 / (b * b), y0 / (a * a));
      }
      break;
    }
  }
  return out;
}

namespace {

// Edge ids: horizontal edge (i, j) from grid node (i, j) to (i + 1, j), and
// vertical edge (i, j) from (i, j) to (i, j + 1).
long long edge_id(int i, int j, bool vertical, int res) {
  return (static_cast<long long>(j) * (res + 1) + i) * 2 + (vertical ? 1 : 0);
}

}  // namespace

TracedCurve trace_implicit(const MultiPoly& g, const BBox& bbox, int resolution) {
  if (resolution < 8) throw PreconditionError("resolution must be at least 8");
  if (!(bbox.xmax > bbox.xmin) || !(bbox.ymax > bbox.ymin)) throw PreconditionError("empty bounding box");
  TracedCurve out{{}, bbox, resolution};
  if (g.is_constant()) return out;
  const FloatPoly f(change_ring(g, plane_ring()));

  // Cells within kBand cells of a sign change are split kSub x kSub, so cusp
  // tips thinner than one cell are still followed.
  constexpr int kBand = 3;
  const int sub = std::max(1, std::min(4, 2048 / resolution));
  const int n = resolution * sub;
  const double hx = (bbox.xmax - bbox.xmin) / n, hy = (bbox.ymax - bbox.ymin) / n;
  auto gx = [&](int i) { return bbox.xmin + hx * i; };
  auto gy = [&](int j) { return bbox.ymin + hy * j; };

  std::vector<double> val(static_cast<std::size_t>(n + 1) * (n + 1), std::numeric_limits<double>::quiet_NaN());
  auto at = [&](int i, int j) -> double {
    double& v = val[static_cast<std::size_t>(j) * (n + 1) + i];
    if (std::isnan(v)) v = f(gx(i), gy(j));
    return v;
  };
  auto positive = [](double v) { return v >= 0; };

  const int m = resolution;
  std::vector<char> band(static_cast<std::size_t>(m) * m, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const bool s0 = positive(at(i * sub, j * sub)), s1 = positive(at((i + 1) * sub, j * sub));
      const bool s2 = positive(at((i + 1) * sub, (j + 1) * sub)), s3 = positive(at(i * sub, (j + 1) * sub));
      if (s0 == s1 && s1 == s2 && s2 == s3) continue;
      for (int dj = -kBand; dj <= kBand; ++dj) {
        for (int di = -kBand; di <= kBand; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii >= 0 && ii < m && jj >= 0 && jj < m) band[static_cast<std::size_t>(jj) * m + ii] = 1;
        }
      }
    }
  }

  // Crossing point on each edge with a sign change.
  std::unordered_map<long long, Point2> crossing;
  auto edge_point = [&](int i, int j, bool vertical) -> long long {
    const long long id = edge_id(i, j, vertical, n);
    if (crossing.count(id)) return id;
    const double v0 = at(i, j);
    const double v1 = vertical ? at(i, j + 1) : at(i + 1, j);
    const double t = v0 / (v0 - v1);
    crossing[id] = vertical ? Point2{gx(i), gy(j) + t * hy} : Point2{gx(i) + t * hx, gy(j)};
    return id;
  };

  std::vector<std::pair<long long, long long>> segments;
  auto march = [&](int i, int j) {
    // Corners counterclockwise: (i,j), (i+1,j), (i+1,j+1), (i,j+1).
    const bool s0 = positive(at(i, j)), s1 = positive(at(i + 1, j));
    const bool s2 = positive(at(i + 1, j + 1)), s3 = positive(at(i, j + 1));
    long long e[4];  // bottom, right, top, left in that order
    int count = 0;
    if (s0 != s1) e[count++] = edge_point(i, j, false);
    if (s1 != s2) e[count++] = edge_point(i + 1, j, true);
    if (s3 != s2) e[count++] = edge_point(i, j + 1, false);
    if (s0 != s3) e[count++] = edge_point(i, j, true);
    if (count == 2) {
      segments.emplace_back(e[0], e[1]);
    } else if (count == 4) {
      // Saddle: pair edges so the center's sign region stays connected.
      const bool center = positive(f(gx(i) + hx / 2, gy(j) + hy / 2));
      if (center == s0) {
        segments.emplace_back(e[0], e[1]);
        segments.emplace_back(e[2], e[3]);
      } else {
        segments.emplace_back(e[0], e[3]);
        segments.emplace_back(e[1], e[2]);
      }
    }
  };
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      if (!band[static_cast<std::size_t>(j) * m + i]) continue;
      for (int sj = 0; sj < sub; ++sj) {
        for (int si = 0; si < sub; ++si) march(i * sub + si, j * sub + sj);
      }
    }
  }

  // Join segments through shared edge ids, in segment creation order.
  std::unordered_map<long long, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].first].push_back(s);
    incident[segments[s].second].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  auto next_segment = [&](long long node) -> long long {
    for (std::size_t s : incident[node]) {
      if (!used[s]) return static_cast<long long>(s);
    }
    return -1;
  };
  auto walk = [&](long long node, std::vector<long long>& chain) {
    for (long long s; (s = next_segment(node)) >= 0;) {
      used[s] = true;
      node = segments[s].first == node ? segments[s].second : segments[s].first;
      chain.push_back(node);
    }
  };
  std::vector<std::vector<long long>> chains;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    used[s] = true;
    std::vector<long long> forward{segments[s].first, segments[s].second};
    walk(forward.back(), forward);
    if (forward.front() != forward.back()) {
      std::vector<long long> backward;
      walk(forward.front(), backward);
      std::reverse(backward.begin(), backward.end());
      backward.insert(backward.end(), forward.begin(), forward.end());
      forward = std::move(backward);
    }
    chains.push_back(std::move(forward));
  }

  const double cell = std::max(hx, hy);
  for (const auto& chain : chains) {
    std::vector<Point2> line;
    line.reserve(chain.size());
    for (long long id : chain) {
      Point2 p = crossing.at(id);
      double v, dx, dy;
      f.eval_grad(p.x, p.y, v, dx, dy);
      const double g2 = dx * dx + dy * dy;
      if (g2 > 0) {
        const double sx = v * dx / g2, sy = v * dy / g2;
        if (std::hypot(sx, sy) <= cell) p = {p.x - sx, p.y - sy};
      }
      line.push_back(p);
    }
    out.polylines.push_back(std::move(line));
  }
  return out;
}

namespace {

double curvature(double dx, double dy, double ddx, double ddy) {
  return std::abs(dx * ddy - dy * ddx) / std::pow(dx * dx + dy * dy, 1.5);
}

}  // namespace

double max_curvature(const ConicSpec& conic) {
  std::function<double(double)> kappa;
  double lo = 0, hi = 0;
  switch (conic.kind()) {
    case ConicKind::Parabola: {
      const double p = to_double(conic.p());
      kappa = [p](double t) { return curvature(1, t / (2 * p), 0, 1 / (2 * p)); };
      hi = std::max(3.0, 6 * std::abs(p));
      lo = -hi;
      break;
    }
    case ConicKind::Ellipse: {
      const double a = to_double(conic.a()), b = to_double(conic.b());
      kappa = [a, b](double t) {
        return curvature(-b * std::sin(t), a * std::cos(t), -b * std::cos(t), -a * std::sin(t));
      };
      // Half a turn holds one copy of every curvature value.
      lo = 0.1;
      hi = std::numbers::pi + 0.1;
      break;
    }
    case ConicKind::Hyperbola: {
      const double a = to_double(conic.a()), b = to_double(conic.b());
      kappa = [a, b](double t) {
        return curvature(b * std::cosh(t), a * std::sinh(t), b * std::sinh(t), a * std::cosh(t));
      };
      hi = std::asinh(3.0);
      lo = -hi * 0.9;
      break;
    }
  }
  const auto best = boost::math::tools::brent_find_minima([&](double t) { return -kappa(t); }, lo, hi,
                                                          std::numeric_limits<double>::digits / 2);
  return -best.second;
}

double distance_to_curve(const TracedCurve& curve, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& line : curve.polylines) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      const Point2 a = line[k];
      const Point2 b = k + 1 < line.size() ? line[k + 1] : a;
      const double vx = b.x - a.x, vy = b.y - a.y;
      const double len2 = vx * vx + vy * vy;
      double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0;
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::hypot(p.x - a.x - t * vx, p.y - a.y - t * vy));
    }
  }
  return best;
}

}  // namespace conoff
