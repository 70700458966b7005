#pragma once

#include "conoff/conics.hpp"
#include "conoff/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace conoff {

struct Point2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

/// Evaluates g at (x, y); any other ring variable must be given in params.
/// Throws VarError for an unassigned variable.
double eval_poly(const MultiPoly& g, Point2 pt, const std::map<std::string, double>& params = {});

/// Largest absolute coefficient of g as a double; the scale for residuals.
double coefficient_scale(const MultiPoly& g);

/// Bivariate polynomial over [x, y] with double coefficients, for repeated
/// evaluation.
class FloatPoly {
 public:
  explicit FloatPoly(const MultiPoly& g);

  double operator()(double x, double y) const;
  /// Value and both partial derivatives.
  void eval_grad(double x, double y, double& v, double& gx, double& gy) const;
  double scale() const { return scale_; }

 private:
  // coeffs_[i][j] multiplies x^i y^j.
  std::vector<std::vector<double>> coeffs_;
  double scale_ = 0;
};

/// Base points on the conic each moved by ±r along the unit normal; 2n points
/// in total. Parabola: x0 swept over [-L, L] with L = max(3, 6|p|). Ellipse:
/// x0 = b cos t, y0 = a sin t over a full turn. Hyperbola: x0 = b sinh t,
/// y0 = ±a cosh t for |t| <= asinh(3), half of the parameters on each branch.
std::vector<Point2> parametric_offset_samples(const ConicSpec& conic, double r, int n);

struct BBox {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct TracedCurve {
  std::vector<std::vector<Point2>> polylines;
  BBox bbox;
  int resolution = 0;
};

/// Marching squares over resolution x resolution cells. Saddle cells are
/// resolved by the sign at the cell center. Each vertex gets one Newton step
/// along the gradient; steps longer than a cell are skipped. Closed loops
/// repeat their first vertex at the end.
TracedCurve trace_implicit(const MultiPoly& g, const BBox& bbox, int resolution);

/// Largest curvature |b' x b''| / |b'|^3 of the parametrizations above, found
/// with Brent's method.
double max_curvature(const ConicSpec& conic);

/// Distance from p to the nearest segment of any polyline (infinity if none).
double distance_to_curve(const TracedCurve& curve, Point2 p);

}  // namespace conoff
