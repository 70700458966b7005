#pragma once

#include "conoff/conics.hpp"

#include <string>
#include <vector>

namespace conoff {

/// Text of the general offset polynomial. Variables: x, y, r, p for the
/// parabola and x, y, a, b, r for the ellipse and hyperbola.
const std::string& general_offset_text(ConicKind kind);

/// One of the nine reference specific-parameter instances.
struct ReferenceInstance {
  int id;
  ConicKind kind;
  const char* p;  // parabola only
  const char* a;  // ellipse / hyperbola only
  const char* b;
  const char* r;
  const char* g;  // reference offset polynomial over x, y
};

const std::vector<ReferenceInstance>& reference_instances();

/// Reference reduced-basis members for the symbolic ideal, as written (with
/// the p or a^2 b^2 factors still attached). Empty for the hyperbola, whose
/// basis was not listed.
std::vector<std::string> reference_basis_text(ConicKind kind);

}  // namespace conoff
