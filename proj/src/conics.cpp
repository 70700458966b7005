#include "conoff/conics.hpp"

#include "conoff/conic_fixtures.hpp"
#include "conoff/errors.hpp"
#include "conoff/poly_io.hpp"

namespace conoff {

std::string to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::Parabola:
      return "parabola";
    case ConicKind::Ellipse:
      return "ellipse";
    case ConicKind::Hyperbola:
      break;
  }
  return "hyperbola";
}

ConicKind parse_conic_kind(const std::string& text) {
  if (text == "parabola") return ConicKind::Parabola;
  if (text == "ellipse") return ConicKind::Ellipse;
  if (text == "hyperbola") return ConicKind::Hyperbola;
  throw ParamError("unknown conic '" + text + "' (expected parabola, ellipse or hyperbola)");
}

namespace {

BigRational canonical(BigRational q) {
  q.canonicalize();
  return q;
}

}  // namespace

ConicSpec ConicSpec::parabola(const BigRational& p) {
  if (p == 0) throw ParamError("parabola needs p != 0");
  return ConicSpec(ConicKind::Parabola, canonical(p), 0, 0);
}

ConicSpec ConicSpec::ellipse(const BigRational& a, const BigRational& b) {
  if (!(b > 0) || !(a > b)) throw ParamError("ellipse needs a > b > 0");
  return ConicSpec(ConicKind::Ellipse, 0, canonical(a), canonical(b));
}

ConicSpec ConicSpec::hyperbola(const BigRational& a, const BigRational& b) {
  if (!(b > 0) || a < b) throw ParamError("hyperbola needs a >= b > 0");
  return ConicSpec(ConicKind::Hyperbola, 0, canonical(a), canonical(b));
}

const BigRational& ConicSpec::p() const {
  if (kind_ != ConicKind::Parabola) throw ParamError("p is only defined for a parabola");
  return p_;
}

const BigRational& ConicSpec::a() const {
  if (kind_ == ConicKind::Parabola) throw ParamError("a is not defined for a parabola");
  return a_;
}

const BigRational& ConicSpec::b() const {
  if (kind_ == ConicKind::Parabola) throw ParamError("b is not defined for a parabola");
  return b_;
}

std::string ConicSpec::str() const {
  if (kind_ == ConicKind::Parabola) return "parabola(p=" + to_string(p_) + ")";
  return to_string(kind_) + "(a=" + to_string(a_) + ",b=" + to_string(b_) + ")";
}

const Ring& base_ring() {
  static const Ring ring({"y0", "x0", "x", "y"});
  return ring;
}

const Ring& plane_ring() {
  static const Ring ring({"x", "y"});
  return ring;
}

namespace {

const Ring& symbolic_ring(ConicKind kind) {
  static const Ring parabola({"y0", "x0", "x", "y", "r", "p"});
  static const Ring central({"y0", "x0", "x", "y", "a", "b", "r"});
  return kind == ConicKind::Parabola ? parabola : central;
}

std::vector<std::string> symbolic_generators(ConicKind kind) {
  const std::string circle = "(y-y0)^2+(x-x0)^2-r^2";
  switch (kind) {
    case ConicKind::Parabola:
      return {"4 p y0 - x0^2", circle, "2 x p - 2 x0 p + x0 y - x0 y0"};
    case ConicKind::Ellipse:
      return {"b^2 y0^2 + a^2 x0^2 - a^2 b^2", circle, "b^2 (x-x0) y0 - a^2 (y-y0) x0"};
    case ConicKind::Hyperbola:
      break;
  }
  return {"b^2 y0^2 - a^2 x0^2 - a^2 b^2", circle, "b^2 (x-x0) y0 + a^2 (y-y0) x0"};
}

std::map<std::string, BigRational> parameter_values(const ConicSpec& conic, const BigRational& r) {
  if (conic.kind() == ConicKind::Parabola) return {{"p", conic.p()}, {"r", r}};
  return {{"a", conic.a()}, {"b", conic.b()}, {"r", r}};
}

void require_positive_offset(const BigRational& r) {
  if (!(r > 0)) throw ParamError("offset r must be positive");
}

}  // namespace

Ideal build_symbolic_ideal(ConicKind kind) {
  std::vector<MultiPoly> gens;
  for (const auto& text : symbolic_generators(kind)) gens.push_back(parse_poly(text, symbolic_ring(kind)));
  return Ideal(std::move(gens));
}

Ideal build_ideal(const ConicSpec& conic, const BigRational& r) {
  require_positive_offset(r);
  const auto values = parameter_values(conic, r);
  std::vector<MultiPoly> gens;
  const Ideal symbolic = build_symbolic_ideal(conic.kind());
  for (const auto& f : symbolic.generators()) {
    gens.push_back(primitive_part(change_ring(substitute(f, values), base_ring())));
  }
  return Ideal(std::move(gens));
}

MultiPoly general_offset_poly(ConicKind kind) {
  static const Ring parabola({"x", "y", "r", "p"});
  static const Ring central({"x", "y", "a", "b", "r"});
  return parse_poly(general_offset_text(kind), kind == ConicKind::Parabola ? parabola : central);
}

OffsetCurve offset_poly_closed_form(const ConicSpec& conic, const BigRational& r) {
  require_positive_offset(r);
  static const MultiPoly general[3] = {general_offset_poly(ConicKind::Parabola),
                                       general_offset_poly(ConicKind::Ellipse),
                                       general_offset_poly(ConicKind::Hyperbola)};
  const MultiPoly& g = general[static_cast<int>(conic.kind())];
  MultiPoly special = change_ring(substitute(g, parameter_values(conic, r)), plane_ring());
  if (special.is_zero()) throw EliminationError("offset polynomial vanishes identically for " + conic.str());
  return {conic, r, content_normalize(special), OffsetSource::ClosedForm};
}

OffsetCurve offset_poly_elimination(const ConicSpec& conic, const BigRational& r, const MonomialOrder& ord,
                                    const GroebnerLimits& limits) {
  const Ideal ideal = build_ideal(conic, r);
  const GroebnerBasis gb = reduce_basis(buchberger(ideal, ord, limits));
  const auto survivors = elimination_ideal(gb, {"x", "y"});
  if (survivors.size() != 1) {
    throw EliminationError("expected one polynomial in x, y after elimination, got " +
                           std::to_string(survivors.size()));
  }
  return {conic, r, content_normalize(change_ring(survivors.front(), plane_ring())), OffsetSource::Elimination};
}

BigRational r_crit(const ConicSpec& conic) {
  if (conic.kind() == ConicKind::Parabola) return 2 * abs(conic.p());
  return conic.b() * conic.b() / conic.a();
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Subcritical:
      return "subcritical";
    case Regime::Critical:
      return "critical";
    case Regime::Supercritical:
      break;
  }
  return "supercritical";
}

Regime classify_regime(const ConicSpec& conic, const BigRational& r) {
  require_positive_offset(r);
  const BigRational rc = r_crit(conic);
  if (r < rc) return Regime::Subcritical;
  if (r == rc) return Regime::Critical;
  return Regime::Supercritical;
}

std::string to_string(PointTag tag) {
  switch (tag) {
    case PointTag::Virtual:
      return "virtual";
    case PointTag::OnCurve:
      return "on-curve";
    case PointTag::Split:
      break;
  }
  return "split";
}

}  // namespace conoff
