#include "conoff/groebner.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace conoff {

Ideal::Ideal(std::vector<MultiPoly> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw ZeroPolyError("ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (!(g.ring() == generators_.front().ring())) throw RingError("ideal generators live in different rings");
    if (g.is_zero()) throw ZeroPolyError("zero generator in ideal");
  }
}

namespace {

constexpr std::size_t kMaxVars = 16;
constexpr std::uint32_t kMaxExponent = 65535;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;
};

bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }

Mono mono_mul(const Mono& a, const Mono& b, std::size_t n) {
  Mono m;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = std::uint32_t{a.e[i]} + b.e[i];
    if (s > kMaxExponent) throw ResourceLimitError("exponent overflow in Groebner computation", {});
    m.e[i] = static_cast<std::uint16_t>(s);
  }
  m.deg = static_cast<std::uint32_t>(a.deg + b.deg);
  m.mask = a.mask | b.mask;
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b, std::size_t n) {
  Mono m;
  for (std::size_t i = 0; i < n; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg = static_cast<std::uint32_t>(m.deg + m.e[i]);
  }
  m.mask = a.mask | b.mask;
  return m;
}

Mono mono_div(const Mono& b, const Mono& a, std::size_t n) {
  Mono m;
  for (std::size_t i = 0; i < n; ++i) {
    m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    if (m.e[i] != 0) m.mask |= 1u << i;
  }
  m.deg = static_cast<std::uint32_t>(b.deg - a.deg);
  return m;
}

bool mono_divides(const Mono& a, const Mono& b, std::size_t n) {
  if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

bool mono_coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }

class Cmp {
 public:
  Cmp(const MonomialOrder& ord, std::size_t n) : kind_(ord.kind()), k_(std::min(ord.elim_count(), n)), n_(n) {}

  int operator()(const Mono& a, const Mono& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < n_; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::GrevLex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return revlex(a, b, 0, n_);
      case OrderKind::Block: {
        if (int c = grevlex(a, b, 0, k_); c != 0) return c;
        return grevlex(a, b, k_, n_);
      }
    }
    return 0;
  }

 private:
  static int revlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  static int grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    return revlex(a, b, lo, hi);
  }

  OrderKind kind_;
  std::size_t k_;
  std::size_t n_;
};

struct Term {
  Mono m;
  mpz_class c;
};

// Integer polynomial, terms strictly descending under the working order.
using IPoly = std::vector<Term>;

class Engine {
 public:
  Engine(const Ring& ring, const MonomialOrder& ord) : ring_(ring), n_(ring.size()), cmp_(ord, ring.size()) {
    if (n_ > kMaxVars) throw RingError("Groebner engine supports at most 16 variables");
  }

  std::size_t n() const { return n_; }
  const Cmp& cmp() const { return cmp_; }

  IPoly from_poly(const MultiPoly& p) const {
    const MultiPoly q = primitive_part(p);
    IPoly out;
    out.reserve(q.num_terms());
    for (const auto& [m, c] : q.terms()) {
      Term t;
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] > kMaxExponent) throw ResourceLimitError("exponent too large for Groebner engine", {});
        t.m.e[i] = static_cast<std::uint16_t>(m[i]);
        t.m.deg = static_cast<std::uint32_t>(t.m.deg + m[i]);
        if (m[i] != 0) t.m.mask |= 1u << i;
      }
      t.c = c.get_num();
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return cmp_(a.m, b.m) > 0; });
    return out;
  }

  MultiPoly to_poly(const IPoly& p) const {
    MultiPoly::TermMap terms;
    for (const auto& t : p) {
      Monomial m(n_);
      for (std::size_t i = 0; i < n_; ++i) m[i] = t.m.e[i];
      terms.emplace(std::move(m), BigRational(t.c));
    }
    return MultiPoly(ring_, std::move(terms));
  }

  // a·f − b·(u·g)
  IPoly combine(const IPoly& f, const mpz_class& a, const IPoly& g, const Mono& u, const mpz_class& b) const {
    IPoly out;
    out.reserve(f.size() + g.size());
    const bool scale_f = a != 1;
    std::size_t i = 0;
    std::size_t j = 0;
    Mono gm;
    bool have_gm = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_gm) {
        gm = mono_mul(g[j].m, u, n_);
        have_gm = true;
      }
      int c;
      if (i >= f.size()) {
        c = -1;
      } else if (j >= g.size()) {
        c = 1;
      } else {
        c = cmp_(f[i].m, gm);
      }
      Term t;
      if (c > 0) {
        t.m = f[i].m;
        if (scale_f) {
          mpz_mul(t.c.get_mpz_t(), f[i].c.get_mpz_t(), a.get_mpz_t());
        } else {
          t.c = f[i].c;
        }
        ++i;
      } else if (c < 0) {
        t.m = gm;
        mpz_mul(t.c.get_mpz_t(), g[j].c.get_mpz_t(), b.get_mpz_t());
        mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
        ++j;
        have_gm = false;
      } else {
        t.m = gm;
        mpz_mul(t.c.get_mpz_t(), g[j].c.get_mpz_t(), b.get_mpz_t());
        if (scale_f) {
          mpz_submul(t.c.get_mpz_t(), f[i].c.get_mpz_t(), a.get_mpz_t());
          mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
        } else {
          mpz_sub(t.c.get_mpz_t(), f[i].c.get_mpz_t(), t.c.get_mpz_t());
        }
        ++i;
        ++j;
        have_gm = false;
        if (t.c == 0) continue;
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  static void make_primitive(IPoly& p) {
    if (p.empty()) return;
    mpz_class g = abs(p.front().c);
    for (std::size_t i = 1; i < p.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].c.get_mpz_t());
    if (g != 1) {
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  IPoly s_poly(const IPoly& f, const IPoly& g) const {
    const Mono l = mono_lcm(f.front().m, g.front().m, n_);
    const Mono uf = mono_div(l, f.front().m, n_);
    const Mono ug = mono_div(l, g.front().m, n_);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const mpz_class a = g.front().c / d;
    const mpz_class b = f.front().c / d;
    IPoly sf;
    sf.reserve(f.size());
    for (const auto& t : f) sf.push_back({mono_mul(t.m, uf, n_), t.c});
    return combine(sf, a, g, ug, b);
  }

  // Full normal form of f against the reducers; terms already passed are kept
  // (scaled). Returns the number of reduction steps.
  std::size_t normal_form(IPoly& f, const std::vector<const IPoly*>& reducers, bool top_only) const {
    std::size_t steps = 0;
    std::size_t i = 0;
    while (i < f.size()) {
      const Mono& m = f[i].m;
      const IPoly* best = nullptr;
      for (const IPoly* g : reducers) {
        if (mono_divides(g->front().m, m, n_) && (best == nullptr || g->size() < best->size())) best = g;
      }
      if (best == nullptr) {
        if (top_only) return steps;
        ++i;
        continue;
      }
      const Mono u = mono_div(m, best->front().m, n_);
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), f[i].c.get_mpz_t(), best->front().c.get_mpz_t());
      const mpz_class a = best->front().c / d;
      const mpz_class b = f[i].c / d;
      f = combine(f, a, *best, u, b);
      ++steps;
      if (a != 1) make_primitive(f);
    }
    return steps;
  }

 private:
  Ring ring_;
  std::size_t n_;
  Cmp cmp_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Mono lcm;
  std::uint64_t serial;
};

// Homogeneous input: smallest lcm degree first. Otherwise the smallest lcm
// under the working order, which keeps lex runs on affine ideals from
// wandering into high-degree tails.
struct PairLess {
  const Cmp* cmp;
  bool by_degree;
  bool operator()(const Pair& a, const Pair& b) const {
    if (by_degree) {
      if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    } else if (int c = (*cmp)(a.lcm, b.lcm); c != 0) {
      return c < 0;
    }
    return a.serial < b.serial;
  }
};

}  // namespace

MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder& ord) {
  if (!(p.ring() == q.ring())) throw RingError("ring mismatch in s_polynomial");
  const auto [mp, cp] = leading_term(p, ord);
  const auto [mq, cq] = leading_term(q, ord);
  const Monomial l = lcm(mp, mq);
  return MultiPoly::monomial(p.ring(), quotient(l, mp), 1 / cp) * p -
         MultiPoly::monomial(q.ring(), quotient(l, mq), 1 / cq) * q;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const GroebnerLimits& limits) {
  const Engine eng(ideal.ring(), ord);
  const std::size_t n = eng.n();
  GroebnerStats stats;
  std::vector<IPoly> polys;
  std::vector<bool> active;
  const bool homogeneous = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                      [](const MultiPoly& g) { return g.is_homogeneous(); });
  std::set<Pair, PairLess> pairs(PairLess{&eng.cmp(), homogeneous});
  std::uint64_t serial = 0;

  auto reducers = [&]() {
    std::vector<const IPoly*> out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) out.push_back(&polys[k]);
    }
    return out;
  };

  // Gebauer–Möller update for a new basis element h.
  auto insert = [&](IPoly h) {
    const std::size_t hi = polys.size();
    const Mono hl = h.front().m;
    polys.push_back(std::move(h));
    active.push_back(true);

    std::vector<Pair> c;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k]) c.push_back({k, hi, mono_lcm(polys[k].front().m, hl, n), 0});
    }
    std::vector<Pair> d;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const Pair& p = c[x];
      bool keep = mono_coprime(polys[p.i].front().m, hl);
      if (!keep) {
        keep = true;
        for (std::size_t y = x + 1; y < c.size() && keep; ++y) {
          if (mono_divides(c[y].lcm, p.lcm, n)) keep = false;
        }
        for (std::size_t y = 0; y < d.size() && keep; ++y) {
          if (mono_divides(d[y].lcm, p.lcm, n)) keep = false;
        }
      }
      if (keep) {
        d.push_back(p);
      } else {
        ++stats.pairs_skipped_criteria;
      }
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Mono& l = it->lcm;
      const bool drop = mono_divides(hl, l, n) && !(mono_lcm(polys[it->i].front().m, hl, n) == l) &&
                        !(mono_lcm(polys[it->j].front().m, hl, n) == l);
      if (drop) {
        ++stats.pairs_skipped_criteria;
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : d) {
      if (mono_coprime(polys[p.i].front().m, hl)) {
        ++stats.pairs_skipped_criteria;
        continue;
      }
      p.serial = serial++;
      pairs.insert(p);
    }
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k] && mono_divides(hl, polys[k].front().m, n)) active[k] = false;
    }
  };

  std::vector<IPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(eng.from_poly(g));
  for (auto& g : gens) {
    stats.reductions += eng.normal_form(g, reducers(), false);
    Engine::make_primitive(g);
    if (!g.empty()) insert(std::move(g));
  }

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    ++stats.pairs_considered;
    stats.basis_size = polys.size();
    if (stats.pairs_considered > limits.max_pairs) {
      throw ResourceLimitError("Groebner pair limit exceeded", stats);
    }
    if (p.lcm.deg > limits.max_degree) {
      throw ResourceLimitError("Groebner degree limit exceeded", stats);
    }
    IPoly s = eng.s_poly(polys[p.i], polys[p.j]);
    stats.reductions += eng.normal_form(s, reducers(), false);
    if (s.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    Engine::make_primitive(s);
    insert(std::move(s));
  }

  GroebnerBasis out;
  out.order = ord;
  for (const auto& p : polys) out.polys.push_back(eng.to_poly(p));
  stats.basis_size = out.polys.size();
  out.stats = stats;
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  GroebnerBasis out;
  out.order = gb.order;
  out.stats = gb.stats;
  out.reduced = true;
  if (gb.polys.empty()) return out;
  const Engine eng(gb.polys.front().ring(), gb.order);
  const std::size_t n = eng.n();

  std::vector<IPoly> polys;
  for (const auto& p : gb.polys) {
    if (!p.is_zero()) polys.push_back(eng.from_poly(p));
  }
  std::sort(polys.begin(), polys.end(), [&](const IPoly& a, const IPoly& b) { return eng.cmp()(a.front().m, b.front().m) < 0; });

  std::vector<IPoly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (mono_divides(kept.front().m, polys[k].front().m, n)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(polys[k]));
  }

  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const IPoly*> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(&minimal[m]);
    }
    eng.normal_form(minimal[k], others, false);
    Engine::make_primitive(minimal[k]);
  }
  for (const auto& p : minimal) out.polys.push_back(content_normalize(eng.to_poly(p)));
  out.stats.basis_size = out.polys.size();
  return out;
}

GroebnerBasis reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& ord, const GroebnerLimits& limits) {
  return reduce_basis(buchberger(ideal, ord, limits));
}

std::vector<MultiPoly> elimination_ideal(const GroebnerBasis& gb, const std::vector<std::string>& keep) {
  if (gb.polys.empty()) return {};
  const Ring& ring = gb.polys.front().ring();
  std::vector<bool> kept(ring.size(), false);
  for (const auto& v : keep) {
    const int i = ring.index_of(v);
    if (i < 0) throw VarError("unknown variable '" + v + "'");
    kept[static_cast<std::size_t>(i)] = true;
  }
  std::size_t dropped = 0;
  while (dropped < ring.size() && !kept[dropped]) ++dropped;
  for (std::size_t i = dropped; i < ring.size(); ++i) {
    if (!kept[i]) throw OrderError("eliminated variables must lead the ring");
  }
  if (!gb.order.eliminates_prefix(dropped)) {
    throw OrderError("order " + gb.order.str() + " does not eliminate the first " + std::to_string(dropped) +
                     " variables");
  }
  std::vector<std::string> names;
  for (std::size_t i = dropped; i < ring.size(); ++i) names.push_back(ring.name(i));
  const Ring sub(names);
  std::vector<MultiPoly> out;
  for (const auto& p : gb.polys) {
    const auto s = p.support();
    if (std::none_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(dropped), [](bool b) { return b; })) {
      out.push_back(change_ring(p, sub));
    }
  }
  return out;
}

std::vector<std::uint64_t> degree_multiset(const std::vector<MultiPoly>& polys) {
  std::vector<std::uint64_t> out;
  for (const auto& p : polys) out.push_back(p.total_degree());
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool is_groebner_basis(const std::vector<MultiPoly>& polys, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!reduce(s_polynomial(polys[i], polys[j], ord), polys, ord).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace conoff
