#include "conoff/conics.hpp"

#include "conoff/errors.hpp"
#include "conoff/roots.hpp"

#include <algorithm>
#include <cmath>

namespace conoff {

namespace {

struct RawPoint {
  HighFloat x, y;
  std::optional<BigRational> x_exact, y_exact;
};

/// Exact square root when q is the square of a rational.
std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  BigInteger n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  BigInteger sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return BigRational(sn, sd);
}

std::optional<BigRational> negated(const std::optional<BigRational>& v) {
  if (!v) return v;
  return BigRational(-*v);
}

/// Value and gradient of a polynomial over [x, y] at a point.
struct Residual {
  HighFloat scale;
  MultiPoly g, gx, gy;

  explicit Residual(const MultiPoly& poly) : g(poly) {
    const auto grad = gradient(g, {"x", "y"});
    gx = grad[0];
    gy = grad[1];
    scale = 0;
    for (const auto& [m, c] : g.terms()) scale = std::max(scale, HighFloat(abs(to_high(c))));
  }

  static HighFloat eval(const MultiPoly& p, const HighFloat& x, const HighFloat& y) {
    HighFloat acc = 0;
    for (const auto& [m, c] : p.terms()) acc += to_high(c) * pow(x, m[0]) * pow(y, m[1]);
    return acc;
  }

  HighFloat operator()(const HighFloat& x, const HighFloat& y) const {
    const HighFloat v = std::max({abs(eval(g, x, y)), abs(eval(gx, x, y)), abs(eval(gy, x, y))});
    return v / scale;
  }
};

PointTag tag_for(Regime regime, const HighFloat& x, const HighFloat& y) {
  if (x != 0 && y != 0) return PointTag::Split;
  if (regime == Regime::Subcritical && x == 0) return PointTag::Virtual;
  // Off-axis points of the parabola are split points too.
  if (x != 0) return PointTag::Split;
  return PointTag::OnCurve;
}

void finish(SingularPointReport& report, std::vector<RawPoint> raw) {
  // Coincident formula points (as at r = r_crit) are reported once.
  std::vector<RawPoint> unique;
  for (auto& p : raw) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const RawPoint& q) {
      return abs(p.x - q.x) <= HighFloat("1e-40") * (1 + abs(p.x)) &&
             abs(p.y - q.y) <= HighFloat("1e-40") * (1 + abs(p.y));
    });
    if (!dup) unique.push_back(std::move(p));
  }
  std::sort(unique.begin(), unique.end(), [](const RawPoint& a, const RawPoint& b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
  });
  const Residual residual(offset_poly_closed_form(report.conic, report.r).g);
  for (const auto& p : unique) {
    SingularPoint sp;
    sp.x = p.x_exact ? to_double(*p.x_exact) : p.x.convert_to<double>();
    sp.y = p.y_exact ? to_double(*p.y_exact) : p.y.convert_to<double>();
    sp.x_exact = p.x_exact;
    sp.y_exact = p.y_exact;
    sp.tag = tag_for(report.regime, p.x, p.y);
    // Residual at the double-rounded coordinates.
    sp.residual = residual(HighFloat(sp.x), HighFloat(sp.y)).convert_to<double>();
    report.points.push_back(std::move(sp));
  }
}

/// Adds (0, ±sqrt(q)) or (±sqrt(q), 0) when q >= 0; returns the number of
/// complex points otherwise.
int axis_pair(std::vector<RawPoint>& out, const BigRational& q, bool on_y_axis) {
  if (q < 0) return 2;
  const auto exact = rational_sqrt(q);
  const HighFloat v = sqrt(to_high(q));
  RawPoint plus, minus;
  if (on_y_axis) {
    plus = {0, v, BigRational(0), exact};
    minus = {0, -v, BigRational(0), negated(exact)};
  } else {
    plus = {v, 0, exact, BigRational(0)};
    minus = {-v, 0, negated(exact), BigRational(0)};
  }
  out.push_back(plus);
  out.push_back(minus);
  return 0;
}

/// Four points (±sqrt(X2), ±sqrt(Y2)), or 4 complex points.
int quad_points(std::vector<RawPoint>& out, const HighFloat& x2, const HighFloat& y2) {
  if (x2 < 0 || y2 < 0) return 4;
  const HighFloat x = sqrt(x2), y = sqrt(y2);
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) out.push_back({sx * x, sy * y, std::nullopt, std::nullopt});
  }
  return 0;
}

}  // namespace

SingularPointReport singular_points(const ConicSpec& conic, const BigRational& r) {
  SingularPointReport report{conic, r, r_crit(conic), classify_regime(conic, r), false, {}, 0};
  std::vector<RawPoint> raw;
  const HighFloat hr = to_high(r);
  const HighFloat c2 = real_cbrt(HighFloat(2)), c4 = c2 * c2;

  if (conic.kind() == ConicKind::Parabola) {
    const BigRational& p = conic.p();
    const BigRational y1 = p + r * r / (4 * p);
    raw.push_back({0, to_high(y1), BigRational(0), y1});
    if (report.regime == Regime::Supercritical) {
      // Formulas for p > 0; p < 0 follows from the reflection y -> -y.
      const HighFloat P = to_high(abs(p));
      const HighFloat k = real_cbrt(P * hr * hr);
      const HighFloat k2 = k * k;
      const HighFloat r2 = hr * hr, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
      const HighFloat P2 = P * P, P3 = P2 * P, P4 = P2 * P2, P5 = P4 * P, P6 = P3 * P3, P7 = P6 * P, P8 = P4 * P4;
      const HighFloat alpha2 = (k2 * r2 + 6 * r2 * P2 * c2 - 3 * k * P * r2 * c4 - 4 * k2 * P2) / k2;
      const HighFloat beta =
          P * r2 *
          (22 * r6 * k2 + 1452 * r6 * P2 * c2 + 7456 * P3 * r4 * c4 * k - 6560 * P2 * r4 * k2 -
           15488 * P4 * r4 * c2 - 39680 * P5 * r2 * c4 * k + 37600 * P4 * r2 * k2 + 7936 * P8 * c2 -
           15872 * P7 * c4 * k + 45760 * P6 * r2 * c2 - 33 * r8 * c2 - 5376 * P6 * k2);
      const HighFloat gamma =
          2 * k *
          (8640 * P6 * r2 * k - 3968 * P7 * c2 * k2 + 1984 * P7 * r2 * c4 - 3920 * r4 * P4 * k -
           9920 * P5 * r2 * c2 * k2 + 4960 * P5 * r4 * c4 + 484 * r6 * P2 * k + 1864 * P3 * r4 * c2 * k2 -
           932 * P3 * r6 * c4 - 11 * r8 * k);
      const HighFloat y = p > 0 ? HighFloat(beta / gamma) : HighFloat(-beta / gamma);
      if (alpha2 < 0) {
        report.complex_count += 2;
      } else {
        const HighFloat alpha = sqrt(alpha2);
        raw.push_back({alpha, y, std::nullopt, std::nullopt});
        raw.push_back({-alpha, y, std::nullopt, std::nullopt});
      }
    } else {
      report.complex_count += 2;
    }
    finish(report, std::move(raw));
    return report;
  }

  const BigRational& a = conic.a();
  const BigRational& b = conic.b();
  const BigRational a2 = a * a, b2 = b * b;
  const HighFloat ha = to_high(a), hb = to_high(b);

  if (conic.kind() == ConicKind::Ellipse) {
    report.outside_primary_range = r >= b;
    report.complex_count += axis_pair(raw, -(a2 - b2) * (r * r - b2) / b2, true);
    report.complex_count += axis_pair(raw, (a2 - b2) * (r * r - a2) / a2, false);
    if (report.regime == Regime::Supercritical) {
      const HighFloat k = real_cbrt(ha * hb * hr);
      const HighFloat k2 = k * k;
      const HighFloat A2 = ha * ha, B2 = hb * hb, R2 = hr * hr;
      const HighFloat delta = -3 * B2 * A2 * R2 + R2 * A2 * k2 + 3 * k * B2 * hb * ha * hr - B2 * B2 * k2;
      const HighFloat eps = -A2 * A2 * k2 + 3 * k * hb * hr * A2 * ha - 3 * B2 * A2 * R2 + k2 * B2 * R2;
      report.complex_count += quad_points(raw, -delta / ((B2 - A2) * k2), eps / (k2 * (B2 - A2)));
    } else if (report.regime == Regime::Subcritical) {
      report.complex_count += 4;
    }
  } else {
    report.outside_primary_range = r >= b || a == b;
    report.complex_count += axis_pair(raw, (a2 + b2) * (r * r + b2) / b2, true);
    report.complex_count += axis_pair(raw, (a2 + b2) * (r * r - a2) / a2, false);
    if (report.regime == Regime::Supercritical) {
      const HighFloat k = real_cbrt(hr * hb);
      const HighFloat k2 = k * k;
      const HighFloat a13 = real_cbrt(ha), a23 = a13 * a13, a43 = ha * a13;
      const HighFloat A2 = ha * ha, B2 = hb * hb, R2 = hr * hr;
      const HighFloat a83 = a43 * a43;
      const HighFloat delta = 3 * B2 * a43 * R2 - R2 * A2 * k2 - 3 * a23 * k * B2 * hb * hr + B2 * B2 * k2;
      const HighFloat eps = A2 * A2 * k + B2 * R2 * k + 3 * hb * a43 * hr * k2 + 3 * a83 * hb * hr;
      report.complex_count += quad_points(raw, -delta / ((A2 + B2) * k2), eps / (k * (A2 + B2)));
    } else if (report.regime == Regime::Subcritical) {
      report.complex_count += 4;
    }
  }
  finish(report, std::move(raw));
  return report;
}

namespace {

/// Distinct real roots of a univariate eliminant in t, using t -> -t symmetry
/// to reduce to z = t^2 when possible.
std::vector<std::pair<HighFloat, std::optional<BigRational>>> eliminant_roots(UniPoly f) {
  std::vector<std::pair<HighFloat, std::optional<BigRational>>> out;
  bool zero_root = false;
  while (!f.empty() && f.front() == 0) {
    zero_root = true;
    f.erase(f.begin());
  }
  bool even = true;
  for (std::size_t i = 1; i < f.size(); i += 2) even = even && f[i] == 0;
  if (!even) {
    const auto rational = rational_roots(f);
    for (const auto& t : real_roots(f)) {
      std::optional<BigRational> exact;
      for (const auto& q : rational) {
        if (abs(to_high(q) - t) < HighFloat("1e-60")) exact = q;
      }
      out.push_back({t, exact});
    }
  } else {
    const UniPoly h = squarefree_part(even_to_square(f));
    const auto rational = rational_roots(h);
    for (const auto& z : real_roots(h)) {
      if (z < 0) continue;
      if (z == 0) {
        zero_root = true;
        continue;
      }
      std::optional<BigRational> exact;
      for (const auto& q : rational) {
        if (abs(to_high(q) - z) < HighFloat("1e-60")) exact = rational_sqrt(q);
      }
      const HighFloat t = sqrt(z);
      out.push_back({t, exact});
      out.push_back({-t, negated(exact)});
    }
  }
  if (zero_root) out.push_back({HighFloat(0), BigRational(0)});
  return out;
}

UniPoly last_univariate(const MultiPoly& g, const MultiPoly& gx, const MultiPoly& gy, const Ring& ring,
                        const std::string& keep, const GroebnerLimits& limits) {
  const Ideal ideal({change_ring(g, ring), change_ring(gx, ring), change_ring(gy, ring)});
  const GroebnerBasis gb = reduce_basis(buchberger(ideal, MonomialOrder::lex(), limits));
  for (const auto& p : gb.polys) {
    const auto supp = p.support();
    if (!supp[0]) return to_univariate(p, keep);
  }
  throw EliminationError("no univariate eliminant in " + keep);
}

}  // namespace

SingularPointReport singular_points_via_elimination(const ConicSpec& conic, const BigRational& r,
                                                    const GroebnerLimits& limits) {
  SingularPointReport report{conic, r, r_crit(conic), classify_regime(conic, r), false, {}, -1};
  if (conic.kind() == ConicKind::Ellipse) report.outside_primary_range = r >= conic.b();
  if (conic.kind() == ConicKind::Hyperbola) report.outside_primary_range = r >= conic.b() || conic.a() == conic.b();

  const MultiPoly g = offset_poly_closed_form(conic, r).g;
  const auto grad = gradient(g, {"x", "y"});
  static const Ring xy({"x", "y"}), yx({"y", "x"});
  const UniPoly ey = last_univariate(g, grad[0], grad[1], xy, "y", limits);
  const UniPoly ex = last_univariate(g, grad[0], grad[1], yx, "x", limits);
  const auto xs = eliminant_roots(ex);
  const auto ys = eliminant_roots(ey);

  const Residual residual(g);
  const HighFloat accept("1e-40"), reject("1e-20");
  std::vector<RawPoint> raw;
  for (const auto& [x, x_exact] : xs) {
    for (const auto& [y, y_exact] : ys) {
      const HighFloat res = residual(x, y);
      if (res <= accept) {
        raw.push_back({x, y, x_exact, y_exact});
      } else if (res < reject) {
        throw RootPairingError("ambiguous residual " + to_string(res, 6) + " at (" + to_string(x, 12) + ", " +
                               to_string(y, 12) + ")");
      }
    }
  }
  finish(report, std::move(raw));
  return report;
}

}  // namespace conoff
