#pragma once

#include "conoff/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace conoff {

/// Ordered list of variable names. Two rings are equal iff their name lists
/// are equal; the position of a name is its exponent slot.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }

  /// Slot of a variable, or -1 when absent.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_ =
      std::make_shared<const std::vector<std::string>>();
};

using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

enum class OrderKind { Lex, GrevLex, Block };

/// Monomial order over a ring's variables in ring slot order. The first slot
/// is the greatest variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t elim_count = 0);

  static MonomialOrder lex() { return {OrderKind::Lex}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::Block, k}; }

  OrderKind kind() const { return kind_; }
  std::size_t elim_count() const { return elim_; }

  /// -1, 0, +1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when every monomial containing a slot < k is greater than every
  /// monomial free of those slots.
  bool eliminates_prefix(std::size_t k) const;

  /// "lex", "grevlex" or "block:k".
  std::string str() const;
  static MonomialOrder parse(const std::string& text);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && (a.kind_ != OrderKind::Block || a.elim_ == b.elim_);
  }

 private:
  OrderKind kind_ = OrderKind::GrevLex;
  std::size_t elim_ = 0;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigRational>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(Ring ring, TermMap terms);

  static MultiPoly constant(const Ring& ring, const BigRational& c);
  static MultiPoly variable(const Ring& ring, const std::string& name);
  static MultiPoly monomial(const Ring& ring, Monomial m, const BigRational& c);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  std::uint64_t total_degree() const;
  /// Maximum exponent of one variable slot.
  std::uint32_t degree_in(std::size_t slot) const;
  bool is_homogeneous() const;
  /// Slots that carry a nonzero exponent somewhere.
  std::vector<bool> support() const;
  BigRational coefficient(const Monomial& m) const;

  /// Terms sorted descending under ord.
  std::vector<std::pair<Monomial, BigRational>> sorted_terms(const MonomialOrder& ord) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const BigRational& c);
  void add_term(const Monomial& m, const BigRational& c);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const BigRational& c) { return p *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly p) { return p *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, unsigned e);

std::pair<Monomial, BigRational> leading_term(const MultiPoly& p, const MonomialOrder& ord);

struct Division {
  MultiPoly remainder;
  std::vector<MultiPoly> quotients;
};

/// Multivariate division. At each step the first basis element (in list
/// order) whose leading monomial divides the current term is used.
Division reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord);

/// Partial evaluation. The result lives in the ring with the assigned
/// variables removed.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, BigRational>& assignments);

/// Coprime integer coefficients with a positive GrevLex leading coefficient.
MultiPoly content_normalize(const MultiPoly& p);

/// Coprime integer coefficients, same signs as p.
MultiPoly primitive_part(const MultiPoly& p);

MultiPoly derivative(const MultiPoly& p, const std::string& var);
std::vector<MultiPoly> gradient(const MultiPoly& p, const std::vector<std::string>& vars);

/// Re-expresses p over another ring. Variables of p that are missing from the
/// target must not occur in p's support (VarError otherwise).
MultiPoly change_ring(const MultiPoly& p, const Ring& target);

/// True when p = q * c for some nonzero rational c (same ring required).
bool proportional(const MultiPoly& p, const MultiPoly& q);

}  // namespace conoff
