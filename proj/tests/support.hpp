#pragma once

#include "conoff/conics.hpp"
#include "conoff/poly.hpp"

#include <random>

namespace testing {

using namespace conoff;

/// num/den with num in [lo, hi] and den in [1, max_den].
inline BigRational random_rational(std::mt19937& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random rational strictly between lo and hi, preferring denominators up
/// to 12; narrow intervals fall back to the midpoint.
inline BigRational rational_between(std::mt19937& rng, const BigRational& lo, const BigRational& hi) {
  std::uniform_int_distribution<int> den(2, 12);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int d = den(rng);
    const BigRational scaled_lo = lo * d, scaled_hi = hi * d;
    BigInteger kmin, kmax;
    mpz_fdiv_q(kmin.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
    mpz_cdiv_q(kmax.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
    kmin += 1;
    kmax -= 1;
    if (kmin > kmax) continue;
    std::uniform_int_distribution<long> pick(kmin.get_si(), kmax.get_si());
    BigRational q(pick(rng), d);
    q.canonicalize();
    return q;
  }
  return (lo + hi) / 2;
}

/// Random conic with small rational parameters.
inline ConicSpec random_conic(std::mt19937& rng, ConicKind kind) {
  switch (kind) {
    case ConicKind::Parabola: {
      BigRational p = random_rational(rng, 1, 9, 4);
      if (rng() % 2) p = -p;
      return ConicSpec::parabola(p);
    }
    case ConicKind::Ellipse:
    case ConicKind::Hyperbola:
      break;
  }
  const BigRational b = random_rational(rng, 1, 6, 3);
  const BigRational a = b + random_rational(rng, 1, 6, 3);
  return kind == ConicKind::Ellipse ? ConicSpec::ellipse(a, b) : ConicSpec::hyperbola(a, b);
}

/// Random polynomial over ring with a few terms of bounded degree.
inline MultiPoly random_poly(std::mt19937& rng, const Ring& ring, int terms, int max_exp) {
  MultiPoly p(ring);
  std::uniform_int_distribution<int> e(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring.size());
    for (auto& x : m) x = static_cast<std::uint32_t>(e(rng));
    p.add_term(m, random_rational(rng, -7, 7, 5));
  }
  return p;
}

}  // namespace testing
