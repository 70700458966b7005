#pragma once

#include "conoff/poly.hpp"
#include "conoff/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <vector>

namespace conoff {

/// 100 significant decimal digits; radicals are evaluated here and only then
/// rounded to double.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

HighFloat to_high(const BigRational& q);
/// Real cube root, defined for negative arguments.
HighFloat real_cbrt(const HighFloat& v);

/// Dense univariate polynomial, coefficient i multiplies t^i. No trailing
/// zeros; the zero polynomial is empty.
using UniPoly = std::vector<BigRational>;

/// Coefficients of p in one variable; every other variable must be absent.
UniPoly to_univariate(const MultiPoly& p, const std::string& var);

void trim(UniPoly& f);
int degree(const UniPoly& f);
UniPoly uni_derivative(const UniPoly& f);
/// Quotient and remainder of exact division.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g);
/// Monic gcd.
UniPoly uni_gcd(UniPoly f, UniPoly g);
UniPoly squarefree_part(const UniPoly& f);
/// f(t) = h(t^2) when f is even; returns h. Throws PreconditionError on odd terms.
UniPoly even_to_square(const UniPoly& f);
HighFloat uni_eval(const UniPoly& f, const HighFloat& t);

/// Real roots of a cubic (or lower-degree) polynomial by Cardano's formulas,
/// ascending and without repetition. The discriminant sign is decided on the
/// exact coefficients.
std::vector<HighFloat> cardano_real_roots(const UniPoly& f);

/// Real roots of a square-free polynomial of any degree, ascending: Sturm
/// isolation on exact rationals, bisection, then Newton in HighFloat.
std::vector<HighFloat> sturm_real_roots(const UniPoly& f);

/// Distinct real roots of an arbitrary nonzero polynomial. Rational roots are
/// recognized and divided out exactly; a remaining factor of degree <= 3 goes
/// through cardano_real_roots, larger ones through sturm_real_roots.
std::vector<HighFloat> real_roots(const UniPoly& f);

/// Rational roots recognized among the real roots of f.
std::vector<BigRational> rational_roots(const UniPoly& f);

std::string to_string(const HighFloat& v, int digits = 30);

}  // namespace conoff
