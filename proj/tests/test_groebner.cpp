#include "conoff/conic_fixtures.hpp"
#include "conoff/conics.hpp"
#include "conoff/curve.hpp"
#include "conoff/errors.hpp"
#include "conoff/groebner.hpp"
#include "conoff/poly_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace conoff;

namespace {

const Ring xy({"x", "y"});

MultiPoly P(const std::string& text, const Ring& ring = xy) { return parse_poly(text, ring); }

MultiPoly reference_g(int id) {
  for (const auto& inst : reference_instances()) {
    if (inst.id == id) return parse_poly(inst.g, plane_ring());
  }
  return MultiPoly(plane_ring());
}

}  // namespace

TEST_CASE("Ideal validation") {
  CHECK_THROWS_AS(Ideal({}), ZeroPolyError);
  CHECK_THROWS_AS(Ideal({P("x"), MultiPoly(xy)}), ZeroPolyError);
  CHECK_THROWS_AS(Ideal({P("x"), P("x", Ring({"x"}))}), RingError);
}

TEST_CASE("s_polynomial") {
  CHECK(s_polynomial(P("x"), P("x"), MonomialOrder::lex()).is_zero());
  CHECK(s_polynomial(P("x^2 - y"), P("x y - 1"), MonomialOrder::lex()) == P("-y^2 + x"));
  const Ideal I = build_ideal(ConicSpec::parabola(BigRational(1, 3)), BigRational(1, 4));
  const MultiPoly& f1 = I.generators()[0];
  CHECK(s_polynomial(f1, f1, MonomialOrder::lex()).is_zero());
  CHECK_THROWS_AS(s_polynomial(P("x"), MultiPoly(xy), MonomialOrder::lex()), ZeroPolyError);
}

TEST_CASE("buchberger on small ideals") {
  const GroebnerBasis single = buchberger(Ideal({P("x")}), MonomialOrder::lex());
  REQUIRE(single.polys.size() == 1);
  CHECK(single.polys[0] == P("x"));

  const GroebnerBasis gb = buchberger(Ideal({P("x^2 - y"), P("x y - 1")}), MonomialOrder::lex());
  CHECK(is_groebner_basis(gb.polys, MonomialOrder::lex()));
  const GroebnerBasis red = reduce_basis(gb);
  CHECK(red.reduced);
  REQUIRE(red.polys.size() == 2);
  CHECK(red.polys[0] == P("y^3 - 1"));
  CHECK(red.polys[1] == P("y^2 - x"));  // sign follows content_normalize
}

TEST_CASE("reduced basis of {x, 2x, x+y}") {
  const GroebnerBasis red = reduced_groebner_basis(Ideal({P("x"), P("2x"), P("x+y")}), MonomialOrder::lex());
  REQUIRE(red.polys.size() == 2);
  CHECK(red.polys[0] == P("y"));
  CHECK(red.polys[1] == P("x"));
}

TEST_CASE("resource limits stop the completion") {
  const Ideal I = build_ideal(ConicSpec::ellipse(3, BigRational(3, 2)), BigRational(1, 2));
  try {
    buchberger(I, MonomialOrder::lex(), {3, 40});
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.stats().pairs_considered >= 3);
  }
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(), {200000, 2}), ResourceLimitError);
}

TEST_CASE("specific-parameter parabola pipelines") {
  const ConicSpec parabola = ConicSpec::parabola(BigRational(1, 3));
  // Reduced lex basis sizes, cross-checked with an independent CAS.
  const std::pair<BigRational, std::size_t> cases[] = {
      {BigRational(1, 4), 6}, {BigRational(2, 3), 8}, {BigRational(3, 2), 6}};
  for (const auto& [r, size] : cases) {
    CAPTURE(to_string(r));
    const GroebnerBasis gb = buchberger(build_ideal(parabola, r), MonomialOrder::lex());
    CHECK(is_groebner_basis(gb.polys, MonomialOrder::lex()));
    const GroebnerBasis red = reduce_basis(gb);
    CHECK(red.polys.size() == size);
    CHECK(gb.polys.size() >= red.polys.size());
    MESSAGE("unreduced basis size " << gb.polys.size() << ", reduced " << red.polys.size());
  }
}

TEST_CASE("elimination ideal") {
  const ConicSpec parabola = ConicSpec::parabola(BigRational(1, 3));
  const GroebnerBasis gb = reduced_groebner_basis(build_ideal(parabola, BigRational(1, 4)), MonomialOrder::lex());
  const auto g = elimination_ideal(gb, {"x", "y"});
  REQUIRE(g.size() == 1);
  CHECK(proportional(change_ring(g[0], plane_ring()), reference_g(1)));

  const ConicSpec ellipse = ConicSpec::ellipse(3, BigRational(3, 2));
  const GroebnerBasis ge =
      reduced_groebner_basis(build_ideal(ellipse, BigRational(4, 3)), MonomialOrder::block(2));
  const auto g6 = elimination_ideal(ge, {"x", "y"});
  REQUIRE(g6.size() == 1);
  CHECK(proportional(change_ring(g6[0], plane_ring()), reference_g(6)));

  CHECK(elimination_ideal(gb, {"y0", "x0", "x", "y"}).size() == gb.polys.size());

  const GroebnerBasis grevlex =
      reduced_groebner_basis(build_ideal(parabola, BigRational(1, 4)), MonomialOrder::grevlex());
  CHECK_THROWS_AS(elimination_ideal(grevlex, {"x", "y"}), OrderError);
}

TEST_CASE("every generator reduces to zero and every S-pair reduces to zero") {
  std::mt19937 rng(17);
  for (ConicKind kind : {ConicKind::Parabola, ConicKind::Ellipse, ConicKind::Hyperbola}) {
    for (int i = 0; i < 2; ++i) {
      const ConicSpec conic = testing::random_conic(rng, kind);
      const BigRational r = testing::random_rational(rng, 1, 5, 4);
      CAPTURE(conic.str());
      const Ideal I = build_ideal(conic, r);
      for (const MonomialOrder& ord : {MonomialOrder::lex(), MonomialOrder::block(2)}) {
        const GroebnerBasis red = reduced_groebner_basis(I, ord);
        CHECK(is_groebner_basis(red.polys, ord));
        for (const auto& f : I.generators()) CHECK(reduce(f, red.polys, ord).remainder.is_zero());
      }
    }
  }
}

TEST_CASE("reduced basis does not depend on generator order") {
  const Ideal I = build_ideal(ConicSpec::hyperbola(BigRational(3, 2), 1), BigRational(2, 3));
  const auto& g = I.generators();
  const GroebnerBasis ref = reduced_groebner_basis(I, MonomialOrder::lex());
  std::vector<std::size_t> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const GroebnerBasis other =
        reduced_groebner_basis(Ideal({g[perm[0]], g[perm[1]], g[perm[2]]}), MonomialOrder::lex());
    CHECK(other.polys == ref.polys);
  }
}

TEST_CASE("elimination soundness on sampled variety points") {
  // Base point on the conic, then a point at distance r along its normal.
  const ConicSpec conics[] = {ConicSpec::parabola(BigRational(1, 3)), ConicSpec::ellipse(3, BigRational(3, 2)),
                              ConicSpec::hyperbola(BigRational(3, 2), 1)};
  for (const auto& conic : conics) {
    const BigRational r(1, 2);
    const GroebnerBasis gb = reduced_groebner_basis(build_ideal(conic, r), MonomialOrder::block(2));
    const auto survivors = elimination_ideal(gb, {"x", "y"});
    REQUIRE_FALSE(survivors.empty());
    const auto samples = parametric_offset_samples(conic, 0.5, 25);
    REQUIRE(samples.size() == 50);
    for (const auto& g : survivors) {
      const double scale = coefficient_scale(g);
      for (const auto& pt : samples) CHECK(std::abs(eval_poly(g, pt)) / scale <= 1e-9);
    }
  }
}
