#pragma once

#include "conoff/conics.hpp"
#include "conoff/mesh.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace conoff {

nlohmann::json to_json(const SingularPointReport& report);

/// Reference singular points of instance 1..9, evaluated in 100-digit
/// arithmetic from their closed radical forms.
std::vector<std::pair<double, double>> expected_singular_points(int id);

/// The conic and offset of reference instance 1..9 (SpecError otherwise).
std::pair<ConicSpec, BigRational> reference_spec(int id);

/// Runs both offset-polynomial routes, r_crit, regime and both singular-point
/// routes for one reference instance. Every check carries a "pass" flag and
/// the report's top-level "pass" is their conjunction. Output holds no
/// timings, so repeated runs give identical bytes.
nlohmann::json verify_example(int id);

/// Reduced lex basis of the symbolic ideal: size and degree multiset (gating),
/// plus a non-gating comparison against the reference basis members.
nlohmann::json verify_general_basis(ConicKind kind);

/// The layered ellipse mesh with a = 4, b = 2, offsets 0.2, 0.4, 0.6 and nine
/// stations.
MeshSpec reference_mesh_spec();
nlohmann::json verify_mesh();

/// "1".."9", "parabola-basis", "ellipse-basis", "hyperbola-basis" or "mesh".
nlohmann::json verify_paper(const std::string& id);

}  // namespace conoff
