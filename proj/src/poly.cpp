#include "conoff/poly.hpp"

#include "conoff/errors.hpp"

#include <algorithm>

namespace conoff {

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i].empty()) throw RingError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if ((*names_)[i] == (*names_)[j]) throw RingError("duplicate variable '" + (*names_)[i] + "'");
    }
  }
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t elim_count) : kind_(kind), elim_(elim_count) {
  if (kind_ != OrderKind::Block) elim_ = 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::Block: {
      const std::size_t k = std::min(elim_, a.size());
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

bool MonomialOrder::eliminates_prefix(std::size_t k) const {
  if (k == 0) return true;
  switch (kind_) {
    case OrderKind::Lex:
      return true;
    case OrderKind::Block:
      return k == elim_;
    case OrderKind::GrevLex:
      return false;
  }
  return false;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Block:
      return "block:" + std::to_string(elim_);
  }
  return "";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.rfind("block:", 0) == 0) {
    const std::string count = text.substr(6);
    if (count.empty() || !std::all_of(count.begin(), count.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        count.size() > 4) {
      throw OrderError("bad block size in '" + text + "'");
    }
    return block(std::stoul(count));
  }
  throw OrderError("unknown monomial order '" + text + "'");
}

MultiPoly::MultiPoly(Ring ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_.size()) throw RingError("monomial length does not match ring");
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

MultiPoly MultiPoly::constant(const Ring& ring, const BigRational& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.emplace(Monomial(ring.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, const std::string& name) {
  const int i = ring.index_of(name);
  if (i < 0) throw VarError("unknown variable '" + name + "'");
  Monomial m(ring.size(), 0);
  m[static_cast<std::size_t>(i)] = 1;
  return monomial(ring, std::move(m), 1);
}

MultiPoly MultiPoly::monomial(const Ring& ring, Monomial m, const BigRational& c) {
  if (m.size() != ring.size()) throw RingError("monomial length does not match ring");
  MultiPoly p(ring);
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && conoff::total_degree(terms_.begin()->first) == 0);
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, conoff::total_degree(m));
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t slot) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[slot]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = conoff::total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (conoff::total_degree(m) != d) return false;
  }
  return true;
}

std::vector<bool> MultiPoly::support() const {
  std::vector<bool> s(ring_.size(), false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) s[i] = true;
    }
  }
  return s;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::vector<std::pair<Monomial, BigRational>> MultiPoly::sorted_terms(const MonomialOrder& ord) const {
  std::vector<std::pair<Monomial, BigRational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  if (m.size() != ring_.size()) throw RingError("monomial length does not match ring");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  if (!(ring_ == q.ring_)) throw RingError("ring mismatch in add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  if (!(ring_ == q.ring_)) throw RingError("ring mismatch in sub");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.ring_ == q.ring_)) throw RingError("ring mismatch in mul");
  MultiPoly r(p.ring_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  }
  return r;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly sub(const MultiPoly& p, const MultiPoly& q) { return p - q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.ring(), 1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<Monomial, BigRational> leading_term(const MultiPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw ZeroPolyError("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return *best;
}

Division reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  std::vector<std::pair<Monomial, BigRational>> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (!(g.ring() == p.ring())) throw RingError("ring mismatch in reduce");
    leads.push_back(leading_term(g, ord));
  }
  Division out{MultiPoly(p.ring()), std::vector<MultiPoly>(basis.size(), MultiPoly(p.ring()))};
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    auto [m, c] = leading_term(rest, ord);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(leads[i].first, m)) continue;
      const MultiPoly factor = MultiPoly::monomial(p.ring(), quotient(m, leads[i].first), c / leads[i].second);
      out.quotients[i] += factor;
      rest -= factor * basis[i];
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, BigRational>& assignments) {
  const Ring& ring = p.ring();
  std::vector<int> slot_value(ring.size(), -1);
  std::vector<BigRational> values;
  for (const auto& [name, value] : assignments) {
    const int i = ring.index_of(name);
    if (i < 0) throw VarError("unknown variable '" + name + "'");
    slot_value[static_cast<std::size_t>(i)] = static_cast<int>(values.size());
    values.push_back(value);
  }
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (slot_value[i] < 0) kept_names.push_back(ring.name(i));
  }
  Ring kept(kept_names);
  MultiPoly out(kept);
  for (const auto& [m, c] : p.terms()) {
    BigRational coeff = c;
    Monomial reduced;
    reduced.reserve(kept_names.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (slot_value[i] < 0) {
        reduced.push_back(m[i]);
      } else {
        for (std::uint32_t e = 0; e < m[i]; ++e) coeff *= values[static_cast<std::size_t>(slot_value[i])];
      }
    }
    out.add_term(reduced, coeff);
  }
  return out;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroPolyError("primitive part of the zero polynomial");
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return p * scale;
}

MultiPoly content_normalize(const MultiPoly& p) {
  MultiPoly q = primitive_part(p);
  if (leading_term(q, MonomialOrder::grevlex()).second < 0) q = -q;
  return q;
}

MultiPoly derivative(const MultiPoly& p, const std::string& var) {
  const int i = p.ring().index_of(var);
  if (i < 0) throw VarError("unknown variable '" + var + "'");
  const auto slot = static_cast<std::size_t>(i);
  MultiPoly out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[slot] == 0) continue;
    Monomial d = m;
    d[slot] -= 1;
    out.add_term(d, c * m[slot]);
  }
  return out;
}

std::vector<MultiPoly> gradient(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(derivative(p, v));
  return out;
}

MultiPoly change_ring(const MultiPoly& p, const Ring& target) {
  const Ring& src = p.ring();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target.index_of(src.name(i));
  MultiPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0) throw VarError("variable '" + src.name(i) + "' not in target ring");
      t[static_cast<std::size_t>(map[i])] = m[i];
    }
    out.add_term(t, c);
  }
  return out;
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.ring() == q.ring())) throw RingError("ring mismatch in proportional");
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.num_terms() != q.num_terms()) return false;
  const BigRational first = q.coefficient(p.terms().begin()->first);
  if (first == 0) return false;
  const BigRational ratio = p.terms().begin()->second / first;
  for (const auto& [m, c] : p.terms()) {
    const BigRational d = q.coefficient(m);
    if (d == 0 || c != ratio * d) return false;
  }
  return true;
}

}  // namespace conoff
