#include "conoff/conic_fixtures.hpp"
#include "conoff/conics.hpp"
#include "conoff/curve.hpp"
#include "conoff/errors.hpp"
#include "conoff/poly_io.hpp"
#include "conoff/roots.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace conoff;

namespace {

MultiPoly reference_g(int id) {
  for (const auto& inst : reference_instances()) {
    if (inst.id == id) return parse_poly(inst.g, plane_ring());
  }
  return MultiPoly(plane_ring());
}

const ConicSpec kParabola = ConicSpec::parabola(BigRational(1, 3));
const ConicSpec kEllipse = ConicSpec::ellipse(3, BigRational(3, 2));
const ConicSpec kHyperbola = ConicSpec::hyperbola(BigRational(3, 2), 1);

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

bool has_point(const SingularPointReport& rep, double x, double y, double tol = 1e-9) {
  for (const auto& p : rep.points) {
    if (near(p.x, x, tol) && near(p.y, y, tol)) return true;
  }
  return false;
}

std::size_t real_count(const SingularPointReport& rep) { return rep.points.size(); }

}  // namespace

TEST_CASE("conic construction rules") {
  CHECK_THROWS_AS(ConicSpec::parabola(0), ParamError);
  CHECK_THROWS_AS(ConicSpec::ellipse(2, 2), ParamError);
  CHECK_THROWS_AS(ConicSpec::ellipse(1, 2), ParamError);
  CHECK_THROWS_AS(ConicSpec::ellipse(2, 0), ParamError);
  CHECK_THROWS_AS(ConicSpec::hyperbola(1, 2), ParamError);
  CHECK_NOTHROW(ConicSpec::hyperbola(1, 1));
  CHECK_THROWS_AS(kParabola.a(), ParamError);
  CHECK_THROWS_AS(kEllipse.p(), ParamError);
  CHECK(kEllipse.str() == "ellipse(a=3,b=3/2)");
  CHECK(parse_conic_kind("hyperbola") == ConicKind::Hyperbola);
  CHECK_THROWS_AS(parse_conic_kind("circle"), ParamError);
  CHECK_THROWS_AS(build_ideal(kParabola, 0), ParamError);
  CHECK_THROWS_AS(offset_poly_closed_form(kEllipse, BigRational(-1, 2)), ParamError);
}

TEST_CASE("build_ideal reproduces the reference generator triples") {
  struct Case {
    ConicSpec conic;
    BigRational r;
    const char* f[3];
  };
  const Case cases[] = {
      {kParabola, BigRational(1, 4),
       {"4 y0-3 x0^2", "16 y^2-32 y y0+16 y0^2+16 x^2-32 x x0+16 x0^2-1", "2 x-2 x0+3 x0 y-3 x0 y0"}},
      {kParabola, BigRational(2, 3),
       {"4 y0-3 x0^2", "9 y^2-18 y y0+9 y0^2+9 x^2-18 x x0+9 x0^2-4", "2 x-2 x0+3 x0 y-3 x0 y0"}},
      {kParabola, BigRational(3, 2),
       {"4 y0-3 x0^2", "4 y^2-8 y y0+4 y0^2+4 x^2-8 x x0+4 x0^2-9", "2 x-2 x0+3 x0 y-3 x0 y0"}},
      {kEllipse, BigRational(1, 2),
       {"y0^2+4 x0^2-9", "4 y^2-8 y y0+4 y0^2+4 x^2-8 x x0+4 x0^2-1", "y0 x+3 y0 x0-4 x0 y"}},
      {kEllipse, BigRational(3, 4),
       {"y0^2+4 x0^2-9", "16 y^2-32 y y0+16 y0^2+16 x^2-32 x x0+16 x0^2-9", "y0 x+3 y0 x0-4 x0 y"}},
      {kEllipse, BigRational(4, 3),
       {"y0^2+4 x0^2-9", "9 y^2-18 y y0+9 y0^2+9 x^2-18 x x0+9 x0^2-16", "y0 x+3 y0 x0-4 x0 y"}},
      {ConicSpec::hyperbola(1, 1), BigRational(1, 2),
       {"y0^2-x0^2-1", "4 y^2-8 y y0+4 y0^2+4 x^2-8 x x0+4 x0^2-1", "x y0+y x0-2 y0 x0"}},
      {kHyperbola, BigRational(2, 3),
       {"4 y0^2-9 x0^2-9", "9 y^2-18 y y0+9 y0^2+9 x^2-18 x x0+9 x0^2-4", "4 x y0-13 x0 y0+9 x0 y"}},
      {kHyperbola, BigRational(4, 3),
       {"4 y0^2-9 x0^2-9", "9 y^2-18 y y0+9 y0^2+9 x^2-18 x x0+9 x0^2-16", "4 x y0-13 x0 y0+9 x0 y"}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.conic.str());
    const Ideal I = build_ideal(c.conic, c.r);
    CHECK(I.ring() == base_ring());
    REQUIRE(I.generators().size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(proportional(I.generators()[k], parse_poly(c.f[k], base_ring())));
  }
}

TEST_CASE("closed form and elimination match the reference polynomials") {
  CHECK(proportional(offset_poly_closed_form(kParabola, BigRational(3, 2)).g, reference_g(3)));
  CHECK(proportional(offset_poly_closed_form(kEllipse, BigRational(3, 4)).g, reference_g(5)));
  CHECK(proportional(offset_poly_closed_form(kHyperbola, BigRational(4, 3)).g, reference_g(9)));
  const OffsetCurve e2 = offset_poly_elimination(kParabola, BigRational(2, 3));
  CHECK(e2.source == OffsetSource::Elimination);
  CHECK(proportional(e2.g, reference_g(2)));
  CHECK(proportional(offset_poly_elimination(ConicSpec::hyperbola(1, 1), BigRational(1, 2)).g, reference_g(7)));
  CHECK(proportional(offset_poly_elimination(kEllipse, BigRational(1, 2), MonomialOrder::lex()).g, reference_g(4)));
}

TEST_CASE("gradient of the critical parabola offset") {
  const auto grad = gradient(reference_g(2), {"x", "y"});
  CHECK(proportional(grad[0], parse_poly("-32 x+216 x y^2-198 x^3-540 x^3 y-216 y^3 x+162 x^3 y^2+243 x^5",
                                         plane_ring())));
  CHECK(proportional(grad[1], parse_poly("128-864 y^2+648 x^2 y-405 x^4-972 x^2 y^2+864 y^3+243 x^4 y",
                                         plane_ring())));
}

TEST_CASE("closed form equals elimination on random specs") {
  std::mt19937 rng(20240611);
  for (ConicKind kind : {ConicKind::Parabola, ConicKind::Ellipse, ConicKind::Hyperbola}) {
    for (int i = 0; i < 12; ++i) {
      const ConicSpec conic = testing::random_conic(rng, kind);
      const BigRational r = testing::random_rational(rng, 1, 7, 4);
      CAPTURE(conic.str());
      CAPTURE(to_string(r));
      const OffsetCurve closed = offset_poly_closed_form(conic, r);
      const OffsetCurve elim = offset_poly_elimination(conic, r);
      CHECK(closed.g == elim.g);
    }
  }
}

TEST_CASE("general polynomials survive symbolic elimination") {
  // The hard-coded general polynomials must be generators of the symbolic
  // elimination ideal, up to a parameter factor.
  for (ConicKind kind : {ConicKind::Parabola, ConicKind::Ellipse}) {
    CAPTURE(to_string(kind));
    const Ideal I = build_symbolic_ideal(kind);
    const GroebnerBasis gb = reduced_groebner_basis(I, MonomialOrder::lex());
    std::vector<std::string> keep;
    for (const auto& name : I.ring().names()) {
      if (name != "x0" && name != "y0") keep.push_back(name);
    }
    const auto survivors = elimination_ideal(gb, keep);
    const MultiPoly general = general_offset_poly(kind);
    bool found = false;
    for (const auto& s : survivors) {
      const Division d = reduce(change_ring(s, general.ring()), {general}, MonomialOrder::lex());
      found = found || (d.remainder.is_zero() && d.quotients[0].num_terms() == 1);
    }
    CHECK(found);
  }
}

TEST_CASE("hyperbola polynomial is the ellipse polynomial with b^2 -> -b^2") {
  const MultiPoly ell = general_offset_poly(ConicKind::Ellipse);
  const MultiPoly hyp = general_offset_poly(ConicKind::Hyperbola);
  REQUIRE(ell.ring() == hyp.ring());
  const int bslot = ell.ring().index_of("b");
  MultiPoly mapped(ell.ring());
  for (const auto& [m, c] : ell.terms()) {
    REQUIRE(m[bslot] % 2 == 0);
    mapped.add_term(m, (m[bslot] / 2) % 2 ? BigRational(-c) : c);
  }
  CHECK(proportional(mapped, hyp));
  CHECK(hyp.total_degree() == 12);
  CHECK(hyp.is_homogeneous());
  CHECK(general_offset_poly(ConicKind::Parabola).total_degree() == 6);
}

TEST_CASE("critical offsets") {
  CHECK(r_crit(kParabola) == BigRational(2, 3));
  CHECK(r_crit(ConicSpec::parabola(BigRational(-5, 2))) == 5);
  CHECK(r_crit(kEllipse) == BigRational(3, 4));
  CHECK(r_crit(kHyperbola) == BigRational(2, 3));
  CHECK(classify_regime(kParabola, BigRational(1, 4)) == Regime::Subcritical);
  CHECK(classify_regime(kParabola, BigRational(2, 3)) == Regime::Critical);
  CHECK(classify_regime(kParabola, BigRational(3, 2)) == Regime::Supercritical);
}

TEST_CASE("singular points of the reference instances") {
  const auto s1 = singular_points(kParabola, BigRational(1, 4));
  REQUIRE(s1.points.size() == 1);
  CHECK(s1.points[0].y_exact == BigRational(73, 192));
  CHECK(s1.points[0].tag == PointTag::Virtual);
  CHECK(s1.complex_count == 2);

  const auto s2 = singular_points(kParabola, BigRational(2, 3));
  REQUIRE(s2.points.size() == 1);
  CHECK(s2.points[0].y_exact == BigRational(2, 3));
  CHECK(s2.points[0].tag == PointTag::OnCurve);

  const auto s3 = singular_points(kParabola, BigRational(3, 2));
  REQUIRE(s3.points.size() == 3);
  const double c = std::cbrt(12.0);
  const double x3 = std::sqrt(65 + 36 * c - 27 * c * c) / 6, y3 = 3 * c / 4 - 1.0 / 3;
  CHECK(has_point(s3, 0, 97.0 / 48));
  CHECK(has_point(s3, x3, y3));
  CHECK(has_point(s3, -x3, y3));
  CHECK(s3.points[0].y_exact == BigRational(97, 48));
  CHECK(s3.points[1].tag == PointTag::Split);

  const auto s4 = singular_points(kEllipse, BigRational(1, 2));
  REQUIRE(s4.points.size() == 2);
  CHECK(has_point(s4, 0, std::sqrt(6.0)));
  CHECK(has_point(s4, 0, -std::sqrt(6.0)));
  CHECK_FALSE(s4.points[0].y_exact.has_value());
  CHECK(s4.points[0].tag == PointTag::Virtual);
  CHECK(s4.complex_count == 6);

  const auto s9 = singular_points(kHyperbola, BigRational(4, 3));
  REQUIRE(s9.points.size() == 6);
  CHECK(has_point(s9, 0, 5 * std::sqrt(13.0) / 6));
  CHECK(has_point(s9, 0, -5 * std::sqrt(13.0) / 6));
}

TEST_CASE("negative p mirrors the parabola") {
  std::mt19937 rng(8);
  for (int i = 0; i < 5; ++i) {
    const BigRational p = testing::random_rational(rng, 1, 9, 4);
    const BigRational r = 2 * p + testing::random_rational(rng, 1, 5, 3);
    const auto up = singular_points(ConicSpec::parabola(p), r);
    const auto down = singular_points(ConicSpec::parabola(-p), r);
    REQUIRE(up.points.size() == 3);
    REQUIRE(down.points.size() == 3);
    for (const auto& q : up.points) CHECK(has_point(down, q.x, -q.y, 1e-12));
    for (const auto& q : down.points) CHECK(q.residual <= 1e-9);
  }
}

TEST_CASE("singular residuals and regime law on random specs") {
  std::mt19937 rng(404);
  for (ConicKind kind : {ConicKind::Parabola, ConicKind::Ellipse, ConicKind::Hyperbola}) {
    for (int i = 0; i < 8; ++i) {
      const ConicSpec conic = testing::random_conic(rng, kind);
      const BigRational rc = r_crit(conic);
      // Stay inside r < b for the central conics, where the law is stated.
      const BigRational upper = kind == ConicKind::Parabola ? 3 * rc : conic.b();
      const BigRational radii[] = {testing::rational_between(rng, 0, rc), rc,
                                   testing::rational_between(rng, rc, upper)};
      for (const auto& r : radii) {
        CAPTURE(conic.str());
        CAPTURE(to_string(r));
        const auto rep = singular_points(conic, r);
        const std::size_t low = kind == ConicKind::Parabola ? 1 : 2;
        CHECK(real_count(rep) == (r <= rc ? low : 3 * low));
        for (const auto& p : rep.points) CHECK(p.residual <= 1e-9);
      }
    }
  }
}

TEST_CASE("split points collapse onto the axis at the critical offset") {
  std::mt19937 rng(77);
  for (ConicKind kind : {ConicKind::Ellipse, ConicKind::Hyperbola}) {
    for (int i = 0; i < 4; ++i) {
      const ConicSpec conic = testing::random_conic(rng, kind);
      const BigRational a = conic.a(), b = conic.b();
      const BigRational c2 = kind == ConicKind::Ellipse ? BigRational(a * a - b * b) : BigRational(a * a + b * b);
      const double target = to_double(c2 / a);
      const auto at = singular_points(conic, r_crit(conic));
      REQUIRE(at.points.size() == 2);
      CAPTURE(conic.str());
      CHECK(at.points[0].y_exact == BigRational(c2 / a));
      // Just above r_crit the four split points sit next to the axis points.
      const auto above = singular_points(conic, r_crit(conic) * parse_rational("1.000000000001"));
      REQUIRE(above.points.size() == 6);
      for (const auto& p : above.points) CHECK(near(std::abs(p.y), target, 1e-5));
    }
  }
}

TEST_CASE("elimination route for singular points") {
  const auto e1 = singular_points_via_elimination(kParabola, BigRational(1, 4));
  REQUIRE(e1.points.size() == 1);
  CHECK(e1.points[0].x == 0);
  CHECK(e1.points[0].y_exact == BigRational(73, 192));
  CHECK(e1.complex_count == -1);

  const auto e6 = singular_points_via_elimination(kEllipse, BigRational(4, 3));
  REQUIRE(e6.points.size() == 6);
  const HighFloat c = real_cbrt(HighFloat(6));
  const double x2 = ((525 + 324 * c * c - 864 * c) / 324).convert_to<double>();
  int split = 0;
  for (const auto& p : e6.points) {
    if (p.x != 0) {
      ++split;
      CHECK(near(p.x * p.x, x2));
    }
  }
  CHECK(split == 4);

  const auto ec = singular_points_via_elimination(kEllipse, BigRational(3, 4));
  REQUIRE(ec.points.size() == 2);
  CHECK(ec.points[0].y_exact == BigRational(9, 4));
}

TEST_CASE("closed form and elimination routes agree on supercritical specs") {
  std::mt19937 rng(31337);
  for (ConicKind kind : {ConicKind::Parabola, ConicKind::Ellipse, ConicKind::Hyperbola}) {
    for (int i = 0; i < 4; ++i) {
      const ConicSpec conic = testing::random_conic(rng, kind);
      const BigRational rc = r_crit(conic);
      const BigRational upper = kind == ConicKind::Parabola ? 3 * rc : conic.b();
      const BigRational r = testing::rational_between(rng, rc, upper);
      CAPTURE(conic.str());
      CAPTURE(to_string(r));
      const auto closed = singular_points(conic, r);
      const auto elim = singular_points_via_elimination(conic, r);
      REQUIRE(closed.points.size() == elim.points.size());
      for (std::size_t k = 0; k < closed.points.size(); ++k) {
        CHECK(near(closed.points[k].x, elim.points[k].x));
        CHECK(near(closed.points[k].y, elim.points[k].y));
        CHECK(closed.points[k].tag == elim.points[k].tag);
      }
    }
  }
}

TEST_CASE("offsets beyond b are flagged but still reported") {
  const auto rep = singular_points(kEllipse, 4);
  CHECK(rep.outside_primary_range);
  CHECK(rep.points.size() == 6);
  for (const auto& p : rep.points) CHECK(p.residual <= 1e-9);
}

TEST_CASE("univariate helpers") {
  // (t - 1)(t + 2)(2t - 1)(t^2 - 2)
  const UniPoly f{BigRational(-4), BigRational(2), BigRational(9), BigRational(-1), BigRational(-5), BigRational(0)};
  UniPoly g{-2, 0, 1};
  UniPoly h{BigRational(-1), BigRational(-1), BigRational(2)};
  UniPoly k{2, 1};
  UniPoly prod{1};
  for (const UniPoly* q : {&g, &h, &k}) {
    UniPoly next(prod.size() + q->size() - 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < q->size(); ++j) next[i + j] += prod[i] * (*q)[j];
    }
    prod = next;
  }
  const auto rational = rational_roots(prod);
  REQUIRE(rational.size() == 3);
  CHECK(rational[0] == -2);
  CHECK(rational[1] == BigRational(-1, 2));
  CHECK(rational[2] == 1);
  const auto all = real_roots(prod);
  REQUIRE(all.size() == 5);
  CHECK(abs(all[1] + sqrt(HighFloat(2))) < HighFloat("1e-80"));
  // A repeated factor does not repeat the root.
  UniPoly sq(prod.size() * 2 - 1, 0);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    for (std::size_t j = 0; j < prod.size(); ++j) sq[i + j] += prod[i] * prod[j];
  }
  CHECK(real_roots(sq).size() == 5);
  // Three real roots through the trigonometric branch: t^3 - 3t + 1.
  CHECK(cardano_real_roots({1, -3, 0, 1}).size() == 3);
  CHECK(cardano_real_roots({1, 0, 0, 1}).size() == 1);
  CHECK(even_to_square({4, 0, -5, 0, 1}) == UniPoly{4, -5, 1});
  CHECK_THROWS_AS(even_to_square({0, 1}), PreconditionError);
  (void)f;
}
