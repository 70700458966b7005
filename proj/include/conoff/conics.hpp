#pragma once

#include "conoff/groebner.hpp"
#include "conoff/poly.hpp"
#include "conoff/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conoff {

enum class ConicKind { Parabola, Ellipse, Hyperbola };

std::string to_string(ConicKind kind);
ConicKind parse_conic_kind(const std::string& text);

/// Conic in the fixed position used throughout: the parabola 4 p y = x^2 with
/// vertex at the origin, and the ellipse / hyperbola with their vertices on
/// the y-axis at (0, ±a), i.e. b^2 y^2 ± a^2 x^2 = a^2 b^2.
class ConicSpec {
 public:
  /// p != 0.
  static ConicSpec parabola(const BigRational& p);
  /// a > b > 0.
  static ConicSpec ellipse(const BigRational& a, const BigRational& b);
  /// a >= b > 0. Equal semi-axes are allowed because the rectangular case is
  /// one of the reference instances.
  static ConicSpec hyperbola(const BigRational& a, const BigRational& b);

  ConicKind kind() const { return kind_; }
  const BigRational& p() const;
  const BigRational& a() const;
  const BigRational& b() const;

  /// "parabola(p=1/3)", "ellipse(a=3,b=3/2)", ...
  std::string str() const;

  friend bool operator==(const ConicSpec& x, const ConicSpec& y) {
    return x.kind_ == y.kind_ && x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  ConicSpec(ConicKind kind, BigRational p, BigRational a, BigRational b)
      : kind_(kind), p_(std::move(p)), a_(std::move(a)), b_(std::move(b)) {}

  ConicKind kind_;
  BigRational p_, a_, b_;
};

/// Ring [y0, x0, x, y] used by every specific-parameter ideal.
const Ring& base_ring();
/// Ring [x, y] of the offset polynomials.
const Ring& plane_ring();

/// <f1, f2, f3>: the conic at (x0, y0), the circle of radius r about it, and
/// the normal-line condition. Denominators are cleared. Throws ParamError
/// unless r > 0.
Ideal build_ideal(const ConicSpec& conic, const BigRational& r);

/// The same ideal with the parameters kept as variables: ring
/// [y0, x0, x, y, r, p] for the parabola and [y0, x0, x, y, a, b, r] otherwise.
Ideal build_symbolic_ideal(ConicKind kind);

/// The general offset polynomial over [x, y, r, p] (parabola) or
/// [x, y, a, b, r] (ellipse, hyperbola).
MultiPoly general_offset_poly(ConicKind kind);

enum class OffsetSource { ClosedForm, Elimination };

struct OffsetCurve {
  ConicSpec conic;
  BigRational r;
  MultiPoly g;  // content-normalized, ring [x, y]
  OffsetSource source;
};

OffsetCurve offset_poly_closed_form(const ConicSpec& conic, const BigRational& r);

/// Eliminates {y0, x0} from build_ideal(conic, r). The order must eliminate
/// the first two slots; exactly one basis member may survive.
OffsetCurve offset_poly_elimination(const ConicSpec& conic, const BigRational& r,
                                    const MonomialOrder& ord = MonomialOrder::block(2),
                                    const GroebnerLimits& limits = {});

/// 2|p| for the parabola, b^2/a for the ellipse and hyperbola.
BigRational r_crit(const ConicSpec& conic);

enum class Regime { Subcritical, Critical, Supercritical };
std::string to_string(Regime regime);
Regime classify_regime(const ConicSpec& conic, const BigRational& r);

enum class PointTag { Virtual, OnCurve, Split };
std::string to_string(PointTag tag);

struct SingularPoint {
  double x = 0;
  double y = 0;
  /// Present when the coordinate is rational.
  std::optional<BigRational> x_exact;
  std::optional<BigRational> y_exact;
  PointTag tag = PointTag::Virtual;
  /// max(|g|, |g_x|, |g_y|) at the point divided by the largest |coefficient|.
  double residual = 0;
};

struct SingularPointReport {
  ConicSpec conic;
  BigRational r;
  BigRational r_crit;
  Regime regime = Regime::Subcritical;
  /// Set when r lies outside a > b > r (ellipse) where the closed
  /// formulas were derived; the points are still reported.
  bool outside_primary_range = false;
  /// Sorted by descending y, then descending x.
  std::vector<SingularPoint> points;
  int complex_count = 0;
};

/// Closed-form singular points of V(g) evaluated with 100-digit arithmetic.
SingularPointReport singular_points(const ConicSpec& conic, const BigRational& r);

/// Independent route: reduced lex bases of <g, g_x, g_y> in both variable
/// orders give univariate eliminants in x and in y; their real roots are
/// found in z = x^2 (resp. y^2) and paired by residual filtering.
SingularPointReport singular_points_via_elimination(const ConicSpec& conic, const BigRational& r,
                                                    const GroebnerLimits& limits = {});

}  // namespace conoff
