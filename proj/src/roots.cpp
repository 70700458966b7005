#include "conoff/roots.hpp"

#include "conoff/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <sstream>

namespace conoff {

HighFloat to_high(const BigRational& q) {
  return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

HighFloat real_cbrt(const HighFloat& v) {
  if (v == 0) return 0;
  const HighFloat c = boost::multiprecision::cbrt(abs(v));
  return v < 0 ? HighFloat(-c) : c;
}

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

UniPoly to_univariate(const MultiPoly& p, const std::string& var) {
  const int slot = p.ring().index_of(var);
  if (slot < 0) throw VarError("variable '" + var + "' not in ring");
  UniPoly f;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) != slot && m[i] != 0) {
        throw PreconditionError("polynomial is not univariate in '" + var + "'");
      }
    }
    const std::size_t e = m[slot];
    if (f.size() <= e) f.resize(e + 1);
    f[e] += c;
  }
  trim(f);
  return f;
}

UniPoly uni_derivative(const UniPoly& f) {
  UniPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g) {
  if (g.empty()) throw ZeroPolyError("division by the zero polynomial");
  UniPoly r = f;
  trim(r);
  UniPoly q;
  const int dg = degree(g);
  if (degree(r) >= dg) q.assign(r.size() - g.size() + 1, 0);
  while (!r.empty() && degree(r) >= dg) {
    const int shift = degree(r) - dg;
    const BigRational c = r.back() / g.back();
    q[shift] = c;
    for (int i = 0; i <= dg; ++i) r[shift + i] -= c * g[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

namespace {

UniPoly monic(UniPoly f) {
  if (f.empty()) return f;
  const BigRational lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

UniPoly scaled(UniPoly f, const BigRational& c) {
  for (auto& v : f) v *= c;
  return f;
}

}  // namespace

UniPoly uni_gcd(UniPoly f, UniPoly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    UniPoly r = uni_divmod(f, g).second;
    f = std::move(g);
    g = monic(std::move(r));
  }
  return monic(f);
}

UniPoly squarefree_part(const UniPoly& f) {
  if (degree(f) < 1) return monic(f);
  const UniPoly g = uni_gcd(f, uni_derivative(f));
  return monic(uni_divmod(f, g).first);
}

UniPoly even_to_square(const UniPoly& f) {
  UniPoly h;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2 == 1) {
      if (f[i] != 0) throw PreconditionError("polynomial is not even");
      continue;
    }
    h.push_back(f[i]);
  }
  trim(h);
  return h;
}

HighFloat uni_eval(const UniPoly& f, const HighFloat& t) {
  HighFloat acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + to_high(*it);
  return acc;
}

namespace {

void push_unique(std::vector<HighFloat>& roots, const HighFloat& v) {
  for (const auto& r : roots) {
    if (abs(r - v) <= HighFloat("1e-60") * (1 + abs(v))) return;
  }
  roots.push_back(v);
}

HighFloat newton_polish(const UniPoly& f, HighFloat t) {
  const UniPoly d = uni_derivative(f);
  for (int i = 0; i < 8; ++i) {
    const HighFloat dv = uni_eval(d, t);
    if (dv == 0) break;
    const HighFloat step = uni_eval(f, t) / dv;
    t -= step;
    if (abs(step) <= HighFloat("1e-95") * (1 + abs(t))) break;
  }
  return t;
}

}  // namespace

std::vector<HighFloat> cardano_real_roots(const UniPoly& input) {
  UniPoly f = input;
  trim(f);
  if (degree(f) > 3) throw PreconditionError("cardano_real_roots needs degree <= 3");
  std::vector<HighFloat> roots;
  if (degree(f) < 1) return roots;
  if (degree(f) == 1) {
    roots.push_back(to_high(-f[0] / f[1]));
    return roots;
  }
  if (degree(f) == 2) {
    const BigRational disc = f[1] * f[1] - 4 * f[2] * f[0];
    if (disc < 0) return roots;
    const HighFloat s = sqrt(to_high(disc));
    const HighFloat den = to_high(2 * f[2]);
    push_unique(roots, (to_high(-f[1]) - s) / den);
    push_unique(roots, (to_high(-f[1]) + s) / den);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Depressed cubic t^3 + P t + Q after t = u + shift.
  const UniPoly m = monic(f);
  const BigRational A = m[2], B = m[1], C = m[0];
  const BigRational P = B - A * A / 3;
  const BigRational Q = 2 * A * A * A / 27 - A * B / 3 + C;
  const BigRational shift = -A / 3;
  const BigRational D = Q * Q / 4 + P * P * P / 27;
  const HighFloat hshift = to_high(shift);
  if (D > 0) {
    const HighFloat sd = sqrt(to_high(D));
    const HighFloat hq = to_high(Q) / 2;
    push_unique(roots, real_cbrt(-hq + sd) + real_cbrt(-hq - sd) + hshift);
  } else if (D == 0) {
    if (P == 0) {
      push_unique(roots, hshift);
    } else {
      const HighFloat u = real_cbrt(to_high(Q) / 2);
      push_unique(roots, -2 * u + hshift);
      push_unique(roots, u + hshift);
    }
  } else {
    // Three distinct real roots: trigonometric form of the same formulas.
    const HighFloat hp = to_high(P);
    const HighFloat hq = to_high(Q);
    const HighFloat mag = 2 * sqrt(-hp / 3);
    const HighFloat phi = acos((3 * hq / (2 * hp)) * sqrt(-3 / hp)) / 3;
    const HighFloat two_pi_3 = 2 * boost::math::constants::pi<HighFloat>() / 3;
    for (int k = 0; k < 3; ++k) push_unique(roots, mag * cos(phi - two_pi_3 * k) + hshift);
  }
  for (auto& r : roots) r = newton_polish(f, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

int sign_at(const UniPoly& f, const BigRational& t) {
  BigRational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return sgn(acc);
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain{f, uni_derivative(f)};
  while (degree(chain.back()) > 0) {
    UniPoly r = uni_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    BigRational s = 0;
    for (const auto& c : r) s = std::max(s, BigRational(abs(c)));
    chain.push_back(scaled(r, -1 / s));
  }
  return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const BigRational& t) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate(const std::vector<UniPoly>& chain, BigRational lo, BigRational hi, int vlo, int vhi,
             std::vector<std::pair<BigRational, BigRational>>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  BigRational mid = (lo + hi) / 2;
  // Avoid landing exactly on a root, which would hide it from both halves.
  while (sign_at(chain.front(), mid) == 0) mid = (mid + hi) / 2;
  const int vmid = sign_changes(chain, mid);
  isolate(chain, lo, mid, vlo, vmid, out);
  isolate(chain, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<HighFloat> sturm_real_roots(const UniPoly& input) {
  UniPoly f = input;
  trim(f);
  std::vector<HighFloat> roots;
  if (degree(f) < 1) return roots;
  if (degree(f) <= 3) return cardano_real_roots(f);
  // Cauchy bound.
  BigRational bound = 0;
  for (int i = 0; i < degree(f); ++i) bound = std::max(bound, BigRational(abs(f[i] / f.back())));
  bound += 1;
  const auto chain = sturm_chain(f);
  std::vector<std::pair<BigRational, BigRational>> intervals;
  isolate(chain, -bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound), intervals);
  for (auto [lo, hi] : intervals) {
    int slo = sign_at(f, lo);
    if (slo == 0) {
      push_unique(roots, to_high(lo));
      continue;
    }
    for (int it = 0; it < 80 && hi - lo > BigRational(1, 1000000000) * (1 + abs(lo)); ++it) {
      const BigRational mid = (lo + hi) / 2;
      const int sm = sign_at(f, mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    HighFloat t = to_high((lo + hi) / 2);
    const HighFloat hlo = to_high(lo), hhi = to_high(hi);
    const UniPoly d = uni_derivative(f);
    for (int i = 0; i < 60; ++i) {
      const HighFloat step = uni_eval(f, t) / uni_eval(d, t);
      HighFloat next = t - step;
      if (next < hlo || next > hhi) next = (hlo + hhi) / 2;
      if (abs(next - t) <= HighFloat("1e-95") * (1 + abs(t))) {
        t = next;
        break;
      }
      t = next;
    }
    push_unique(roots, t);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<BigRational> rational_roots(const UniPoly& input) {
  UniPoly f = squarefree_part(input);
  std::vector<BigRational> out;
  if (degree(f) < 1) return out;
  // Scale to integer coefficients so the rational root theorem bounds the
  // denominator by the leading coefficient.
  BigInteger den_lcm = 1;
  for (const auto& c : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  const BigInteger lead = BigRational(f.back() * den_lcm).get_num();
  const std::vector<HighFloat> approx = degree(f) <= 3 ? cardano_real_roots(f) : sturm_real_roots(f);
  for (const auto& t : approx) {
    // Continued fraction of t, accepting the first convergent that is an
    // exact root and whose denominator divides the leading coefficient.
    HighFloat v = t;
    BigInteger h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int i = 0; i < 80; ++i) {
      const HighFloat fl = floor(v);
      if (abs(fl) > HighFloat("1e18")) break;
      const BigInteger ai(std::to_string(fl.convert_to<long long>()), 10);
      BigInteger h2 = ai * h0 + h1, k2 = ai * k0 + k1;
      h1 = h0;
      h0 = h2;
      k1 = k0;
      k0 = k2;
      if (abs(k0) > abs(lead)) break;
      BigRational cand(h0, k0);
      cand.canonicalize();
      if (abs(to_high(cand) - t) <= HighFloat("1e-40") * (1 + abs(t)) && sign_at(f, cand) == 0) {
        out.push_back(cand);
        break;
      }
      const HighFloat frac = v - fl;
      if (frac < HighFloat("1e-80")) break;
      v = 1 / frac;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HighFloat> real_roots(const UniPoly& input) {
  UniPoly f = input;
  trim(f);
  if (f.empty()) throw ZeroPolyError("real_roots of the zero polynomial");
  UniPoly rest = squarefree_part(f);
  std::vector<HighFloat> roots;
  for (const auto& q : rational_roots(rest)) {
    roots.push_back(to_high(q));
    rest = uni_divmod(rest, UniPoly{-q, 1}).first;
  }
  const auto tail = degree(rest) <= 3 ? cardano_real_roots(rest) : sturm_real_roots(rest);
  roots.insert(roots.end(), tail.begin(), tail.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const HighFloat& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace conoff
