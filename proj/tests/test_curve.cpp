#include "conoff/conic_fixtures.hpp"
#include "conoff/conics.hpp"
#include "conoff/curve.hpp"
#include "conoff/errors.hpp"
#include "conoff/poly_io.hpp"
#include "conoff/svg.hpp"
#include "conoff/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

using namespace conoff;

namespace {

MultiPoly reference_g(int id) {
  for (const auto& inst : reference_instances()) {
    if (inst.id == id) return parse_poly(inst.g, plane_ring());
  }
  return MultiPoly(plane_ring());
}

BBox box_around(const std::vector<Point2>& pts, double margin) {
  BBox b{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
         std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  b.xmin -= margin;
  b.xmax += margin;
  b.ymin -= margin;
  b.ymax += margin;
  return b;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<SvgMarker> markers_for(const SingularPointReport& rep) {
  std::vector<SvgMarker> out;
  for (const auto& p : rep.points) out.push_back({{p.x, p.y}, to_string(p.tag)});
  return out;
}

}  // namespace

TEST_CASE("eval_poly") {
  CHECK(std::abs(eval_poly(reference_g(1), {0, 73.0 / 192})) / coefficient_scale(reference_g(1)) < 1e-12);
  const MultiPoly circle = parse_poly("x^2 + y^2 - 1", plane_ring());
  CHECK(eval_poly(circle, {1, 0}) == 0);
  CHECK(eval_poly(circle, {2, 0}) == 3);
  const MultiPoly withp = parse_poly("x + p", Ring({"x", "y", "p"}));
  CHECK_THROWS_AS(eval_poly(withp, {1, 1}), VarError);
  CHECK(eval_poly(withp, {1, 1}, {{"p", 2}}) == 3);
  const FloatPoly fp(reference_g(4));
  double v, gx, gy;
  fp.eval_grad(0.3, 1.7, v, gx, gy);
  CHECK(v == doctest::Approx(eval_poly(reference_g(4), {0.3, 1.7})));
  const double h = 1e-6;
  CHECK(gx == doctest::Approx((fp(0.3 + h, 1.7) - fp(0.3 - h, 1.7)) / (2 * h)).epsilon(1e-6));
  CHECK(gy == doctest::Approx((fp(0.3, 1.7 + h) - fp(0.3, 1.7 - h)) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("parametric offset samples") {
  const auto par = parametric_offset_samples(ConicSpec::parabola(BigRational(1, 3)), 0.25, 7);
  REQUIRE(par.size() == 14);
  // The middle parameter is the vertex.
  CHECK(par[6].x == doctest::Approx(0));
  CHECK(par[6].y == doctest::Approx(-0.25));
  CHECK(par[7].y == doctest::Approx(0.25));

  const auto ell = parametric_offset_samples(ConicSpec::ellipse(3, BigRational(3, 2)), 0.5, 8);
  REQUIRE(ell.size() == 16);
  CHECK(ell[4].x == doctest::Approx(0).epsilon(1e-12));
  CHECK(ell[4].y == doctest::Approx(3.5));
  CHECK(ell[5].y == doctest::Approx(2.5));

  CHECK_THROWS_AS(parametric_offset_samples(ConicSpec::parabola(1), 0, 10), ParamError);
}

TEST_CASE("every parametric sample lies on the offset polynomial") {
  for (int id = 1; id <= 9; ++id) {
    const auto [conic, r] = reference_spec(id);
    const MultiPoly g = offset_poly_closed_form(conic, r).g;
    const FloatPoly fp(g);
    for (const auto& pt : parametric_offset_samples(conic, to_double(r), 200)) {
      // Normalize by the gradient so the test measures distance, not size.
      double v, gx, gy;
      fp.eval_grad(pt.x, pt.y, v, gx, gy);
      CHECK(std::abs(v) / fp.scale() <= 1e-7);
    }
  }
}

TEST_CASE("circle trace") {
  const MultiPoly circle = parse_poly("x^2 + y^2 - 1", plane_ring());
  const TracedCurve c = trace_implicit(circle, {-2, 2, -2, 2}, 256);
  REQUIRE(c.polylines.size() == 1);
  const auto& loop = c.polylines[0];
  CHECK(loop.front() == loop.back());
  for (const auto& p : loop) CHECK(std::abs(std::hypot(p.x, p.y) - 1) <= 1e-3);
  CHECK_THROWS_AS(trace_implicit(circle, {-2, 2, -2, 2}, 4), PreconditionError);
  CHECK(trace_implicit(parse_poly("5", plane_ring()), {-1, 1, -1, 1}, 64).polylines.empty());
}

TEST_CASE("trace passes through the singular points of a supercritical parabola offset") {
  const MultiPoly g = reference_g(3);
  const TracedCurve c = trace_implicit(g, {-3, 3, -1.5, 4}, 512);
  const auto rep = singular_points(ConicSpec::parabola(BigRational(1, 3)), BigRational(3, 2));
  REQUIRE(rep.points.size() == 3);
  // Within two cells of the 512 grid.
  for (const auto& p : rep.points) CHECK(distance_to_curve(c, {p.x, p.y}) <= 2 * 6.0 / 512);
}

TEST_CASE("traced curve agrees with the parametric offsets") {
  // Each instance covers one conic in one regime.
  for (int id = 1; id <= 9; ++id) {
    CAPTURE(id);
    const auto [conic, r] = reference_spec(id);
    const auto samples = parametric_offset_samples(conic, to_double(r), 500);
    const BBox box = box_around(samples, 0.25);
    const int res = 512;
    const TracedCurve c = trace_implicit(offset_poly_closed_form(conic, r).g, box, res);
    const double cell = std::max((box.xmax - box.xmin) / res, (box.ymax - box.ymin) / res);
    double worst = 0;
    for (const auto& p : samples) worst = std::max(worst, distance_to_curve(c, p));
    CHECK(worst <= 2 * cell);
  }
}

TEST_CASE("virtual points stay off the curve and approach it as r grows") {
  const ConicSpec conics[] = {ConicSpec::parabola(BigRational(1, 3)), ConicSpec::ellipse(3, BigRational(3, 2))};
  for (const auto& conic : conics) {
    CAPTURE(conic.str());
    const BigRational rc = r_crit(conic);
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 5; ++k) {
      const BigRational r = rc * BigRational(k, 6);
      const auto rep = singular_points(conic, r);
      const auto samples = parametric_offset_samples(conic, to_double(r), 400);
      const TracedCurve c = trace_implicit(offset_poly_closed_form(conic, r).g, box_around(samples, 0.25), 512);
      const auto top = rep.points.front();
      REQUIRE(top.tag == PointTag::Virtual);
      const double d = distance_to_curve(c, {top.x, top.y});
      CHECK(d > 0);
      CHECK(d < previous);
      previous = d;
    }
  }
}

TEST_CASE("maximum curvature is the reciprocal of r_crit") {
  const ConicSpec conics[] = {ConicSpec::parabola(BigRational(1, 3)), ConicSpec::parabola(BigRational(-5, 2)),
                              ConicSpec::ellipse(3, BigRational(3, 2)), ConicSpec::ellipse(4, 2),
                              ConicSpec::hyperbola(BigRational(3, 2), 1), ConicSpec::hyperbola(1, 1)};
  for (const auto& conic : conics) {
    CAPTURE(conic.str());
    CHECK(std::abs(max_curvature(conic) * to_double(r_crit(conic)) - 1) <= 1e-9);
  }
}

TEST_CASE("svg output") {
  const BigRational r1(1, 4), r6(4, 3);
  const ConicSpec par = ConicSpec::parabola(BigRational(1, 3));
  const ConicSpec ell = ConicSpec::ellipse(3, BigRational(3, 2));
  const TracedCurve c1 = trace_implicit(offset_poly_closed_form(par, r1).g, {-3, 3, -1, 4}, 128);
  const std::string svg1 = render_svg({{c1}}, markers_for(singular_points(par, r1)));
  CHECK(count_of(svg1, "<circle class=\"marker\"") == 1);
  CHECK(svg1.rfind("<svg", 0) == 0);

  const TracedCurve c6 = trace_implicit(offset_poly_closed_form(ell, r6).g, {-4, 4, -5, 5}, 128);
  const auto rep6 = singular_points(ell, r6);
  const std::string svg6 = render_svg({{c6}}, markers_for(rep6));
  CHECK(count_of(svg6, "<circle class=\"marker\"") == 6);
  CHECK(count_of(svg6, "<polyline class=\"curve\"") == c6.polylines.size());
  CHECK(render_svg({{c6}}, markers_for(rep6)) == svg6);

  CHECK_THROWS_AS(render_svg({}, {}), PreconditionError);
}
