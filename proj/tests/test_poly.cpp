#include "conoff/conic_fixtures.hpp"
#include "conoff/errors.hpp"
#include "conoff/poly.hpp"
#include "conoff/poly_io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace conoff;

namespace {

const Ring xy({"x", "y"});

MultiPoly P(const std::string& text, const Ring& ring = xy) { return parse_poly(text, ring); }

const char* reference_g(int id) {
  for (const auto& inst : reference_instances()) {
    if (inst.id == id) return inst.g;
  }
  return "";
}

}  // namespace

TEST_CASE("rationals are canonical and exact") {
  const BigRational q = parse_rational("6/-4");
  CHECK(q.get_den() > 0);
  CHECK(q == BigRational(-3, 2));
  CHECK(parse_rational("0.25") == BigRational(1, 4));
  CHECK(parse_rational("-1.5e-1") == BigRational(-3, 20));
  CHECK(to_string(BigRational(7, 1)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const BigRational a = testing::random_rational(rng, 1, 1000, 1000);
    const BigRational b = testing::random_rational(rng, 1, 1000, 1000);
    CHECK((a / b) * (b / a) == 1);
    CHECK(from_double(to_double(a)) == from_double(to_double(a)));
  }
}

TEST_CASE("add") {
  CHECK(add(P("x+y"), P("x-y")) == P("2x"));
  const MultiPoly p = P("3x^2 y - 5");
  CHECK(add(p, MultiPoly(xy)) == p);
  const Ring R({"y0", "x0", "x", "y", "r", "p"});
  CHECK(add(P("4 p y0 - x0^2", R), P("x0^2", R)) == P("4 p y0", R));
  CHECK_THROWS_AS(add(P("x"), P("x", Ring({"x"}))), RingError);
}

TEST_CASE("mul") {
  CHECK(mul(P("x+y"), P("x-y")) == P("x^2-y^2"));
  const MultiPoly p = P("3x^2 y - 5");
  CHECK(mul(p, P("1")) == p);

  // (r - 2p)^4 r against an independent binomial expansion.
  const Ring R({"r", "p"});
  const MultiPoly lhs = mul(pow(P("r - 2 p", R), 4), P("r", R));
  MultiPoly expected(R);
  const long binom[] = {1, 4, 6, 4, 1};
  for (unsigned k = 0; k <= 4; ++k) {
    long coeff = binom[k];
    for (unsigned j = 0; j < 4 - k; ++j) coeff *= -2;
    expected.add_term({k + 1, 4 - k}, coeff);
  }
  CHECK(lhs == expected);
  CHECK(lhs.total_degree() == 5);
}

TEST_CASE("leading_term") {
  const auto [m, c] = leading_term(P("x^2 y + x y^2"), MonomialOrder::lex());
  CHECK(m == Monomial{2, 1});
  CHECK(c == 1);
  const Ring R({"y0", "x0", "x", "y", "r", "p"});
  const auto [m2, c2] = leading_term(P("4 p y0 - x0^2", R), MonomialOrder::lex());
  CHECK(m2 == Monomial{1, 0, 0, 0, 0, 1});
  CHECK(c2 == 4);
  CHECK_THROWS_AS(leading_term(P("3x - 3x"), MonomialOrder::lex()), ZeroPolyError);
}

TEST_CASE("reduce") {
  CHECK(reduce(P("x^2"), {P("x")}, MonomialOrder::lex()).remainder.is_zero());
  const MultiPoly p = P("x^3 + 2y");
  CHECK(reduce(p, {}, MonomialOrder::lex()).remainder == p);
  CHECK(reduce(P("x^2 y + 1"), {P("x y - 1")}, MonomialOrder::lex()).remainder == P("x + 1"));
}

TEST_CASE("substitute") {
  CHECK(substitute(P("x+y"), {{"x", 1}}) == P("y+1", Ring({"y"})));
  CHECK_THROWS_AS(substitute(P("x+y"), {{"z", 1}}), VarError);

  const MultiPoly gp = general_offset_poly(ConicKind::Parabola);
  const MultiPoly gp2 = substitute(gp, {{"p", BigRational(1, 3)}, {"r", BigRational(2, 3)}});
  CHECK(gp2.ring() == plane_ring());
  CHECK(proportional(gp2, P(reference_g(2), plane_ring())));

  const MultiPoly ge = general_offset_poly(ConicKind::Ellipse);
  const MultiPoly ge4 = substitute(ge, {{"a", 3}, {"b", BigRational(3, 2)}, {"r", BigRational(1, 2)}});
  CHECK(proportional(ge4, P(reference_g(4), plane_ring())));
}

TEST_CASE("content_normalize") {
  CHECK(content_normalize(P("2x+4y")) == P("x+2y"));
  CHECK(content_normalize(P("-3x^2")) == P("x^2"));
  CHECK(content_normalize(P("x/2 + y/3")) == P("3x+2y"));
  CHECK_THROWS_AS(content_normalize(MultiPoly(xy)), ZeroPolyError);
}

TEST_CASE("derivative and gradient") {
  CHECK(derivative(P("x^2 y"), "x") == P("2 x y"));
  const auto grad = gradient(P("7"), {"x", "y"});
  CHECK(grad[0].is_zero());
  CHECK(grad[1].is_zero());
  CHECK_THROWS_AS(derivative(P("x"), "z"), VarError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(2024);
  const Ring R({"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    const MultiPoly a = testing::random_poly(rng, R, 4, 3);
    const MultiPoly b = testing::random_poly(rng, R, 4, 3);
    const MultiPoly c = testing::random_poly(rng, R, 4, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const MultiPoly ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("division identity and irreducible remainder") {
  std::mt19937 rng(7);
  const Ring R({"x", "y", "z"});
  for (const MonomialOrder& ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
    for (int i = 0; i < 20; ++i) {
      const MultiPoly p = testing::random_poly(rng, R, 6, 4);
      std::vector<MultiPoly> basis{testing::random_poly(rng, R, 3, 2), testing::random_poly(rng, R, 2, 2)};
      if (basis[0].is_zero() || basis[1].is_zero()) continue;
      const Division d = reduce(p, basis, ord);
      MultiPoly sum = d.remainder;
      for (std::size_t k = 0; k < basis.size(); ++k) sum += d.quotients[k] * basis[k];
      CHECK(sum == p);
      for (const auto& [m, c] : d.remainder.terms()) {
        for (const auto& g : basis) CHECK_FALSE(divides(leading_term(g, ord).first, m));
      }
    }
  }
}

TEST_CASE("content_normalize is idempotent and proportional") {
  std::mt19937 rng(99);
  const Ring R({"x", "y"});
  for (int i = 0; i < 30; ++i) {
    const MultiPoly p = testing::random_poly(rng, R, 5, 4);
    if (p.is_zero()) continue;
    const MultiPoly n = content_normalize(p);
    CHECK(content_normalize(n) == n);
    CHECK(proportional(p, n));
    BigInteger g = 0;
    for (const auto& [m, c] : n.terms()) {
      CHECK(c.get_den() == 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    CHECK(g == 1);
    CHECK(leading_term(n, MonomialOrder::grevlex()).second > 0);
  }
}

TEST_CASE("monomial order laws") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_mono = [&] {
    Monomial m(4);
    for (auto& x : m) x = static_cast<std::uint32_t>(e(rng));
    return m;
  };
  for (const MonomialOrder& ord :
       {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1), MonomialOrder::block(2)}) {
    CAPTURE(ord.str());
    const Monomial one(4, 0);
    for (int i = 0; i < 300; ++i) {
      const Monomial u = random_mono(), v = random_mono(), w = random_mono();
      // Totality and antisymmetry.
      CHECK(ord.compare(u, v) == -ord.compare(v, u));
      CHECK((ord.compare(u, v) == 0) == (u == v));
      // Multiplicativity.
      if (ord.compare(u, v) < 0) CHECK(ord.compare(u * w, v * w) < 0);
      // Transitivity.
      if (ord.compare(u, v) < 0 && ord.compare(v, w) < 0) CHECK(ord.compare(u, w) < 0);
      // 1 is minimal.
      if (u != one) CHECK(ord.greater(u, one));
    }
  }
  // Block(k) eliminates the first k variables.
  const MonomialOrder block = MonomialOrder::block(2);
  CHECK(block.eliminates_prefix(2));
  CHECK_FALSE(MonomialOrder::grevlex().eliminates_prefix(2));
  for (int i = 0; i < 300; ++i) {
    Monomial u = random_mono(), v = random_mono();
    v[0] = v[1] = 0;
    if (u[0] + u[1] == 0) u[0] = 1;
    CHECK(block.greater(u, v));
  }
}

TEST_CASE("order names parse back") {
  for (const std::string text : {"lex", "grevlex", "block:3"}) CHECK(MonomialOrder::parse(text).str() == text);
  CHECK_THROWS(MonomialOrder::parse("tdeg"));
}

TEST_CASE("JSON and text round trips") {
  std::mt19937 rng(3);
  const Ring R({"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    const MultiPoly p = testing::random_poly(rng, R, 5, 5);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(parse_poly(to_pretty(p), R) == p);
  }
  const auto j = to_json(P("x^2 - y/3"));
  CHECK(j["vars"] == nlohmann::json({"x", "y"}));
  CHECK(j["terms"][0]["exp"] == nlohmann::json({2, 0}));
  CHECK(j["terms"][1]["den"] == "3");
  CHECK(j["terms"][1]["num"] == "-1");
  CHECK_THROWS_AS(parse_poly("x +* y", xy), ParseError);
  CHECK_THROWS_AS(parse_poly("x / y", xy), ParseError);
  CHECK_THROWS_AS(parse_poly("w", xy), VarError);
}
