#pragma once

#include "conoff/errors.hpp"
#include "conoff/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace conoff {

class Ideal {
 public:
  /// Throws RingError when generators disagree on the ring and ZeroPolyError
  /// when the list is empty or holds a zero polynomial.
  explicit Ideal(std::vector<MultiPoly> generators);

  const Ring& ring() const { return generators_.front().ring(); }
  const std::vector<MultiPoly>& generators() const { return generators_; }

 private:
  std::vector<MultiPoly> generators_;
};

struct GroebnerLimits {
  std::size_t max_pairs = 200000;
  std::uint32_t max_degree = 40;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<MultiPoly> polys;
  bool reduced = false;
  GroebnerStats stats;
};

/// (lcm/LT(p))·p − (lcm/LT(q))·q over the rationals.
MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder& ord);

/// Buchberger completion with the Gebauer–Möller pair criteria. For
/// homogeneous generators pairs are processed by (lcm total degree, creation
/// index); otherwise by (lcm under the order, creation index). The returned
/// list holds every polynomial that entered the basis, including ones whose
/// leading term later became redundant.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const GroebnerLimits& limits = {});

/// Minimal basis, then tail inter-reduction and content_normalize. Output is
/// sorted ascending by leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

GroebnerBasis reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& ord,
                                     const GroebnerLimits& limits = {});

/// Basis members free of the dropped variables, re-expressed over the ring of
/// the kept variables (in the original slot order). The dropped variables
/// must occupy the leading slots and the order must eliminate them.
std::vector<MultiPoly> elimination_ideal(const GroebnerBasis& gb, const std::vector<std::string>& keep);

/// Total degrees, descending.
std::vector<std::uint64_t> degree_multiset(const std::vector<MultiPoly>& polys);

/// Exhaustive S-pair check; intended for small bases in tests.
bool is_groebner_basis(const std::vector<MultiPoly>& polys, const MonomialOrder& ord);

}  // namespace conoff
