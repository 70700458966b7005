#include "conoff/verify.hpp"

#include "conoff/conic_fixtures.hpp"
#include "conoff/errors.hpp"
#include "conoff/poly_io.hpp"
#include "conoff/roots.hpp"

#include <algorithm>
#include <cmath>

namespace conoff {

nlohmann::json to_json(const SingularPointReport& report) {
  nlohmann::json j;
  j["conic"] = report.conic.str();
  j["r"] = to_string(report.r);
  j["r_crit"] = to_string(report.r_crit);
  j["regime"] = to_string(report.regime);
  j["outside_primary_range"] = report.outside_primary_range;
  j["complex_count"] = report.complex_count;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points) {
    nlohmann::json q{{"x", p.x}, {"y", p.y}, {"tag", to_string(p.tag)}, {"residual", p.residual}};
    if (p.x_exact) q["x_exact"] = to_string(*p.x_exact);
    if (p.y_exact) q["y_exact"] = to_string(*p.y_exact);
    points.push_back(std::move(q));
  }
  j["points"] = std::move(points);
  return j;
}

std::pair<ConicSpec, BigRational> reference_spec(int id) {
  for (const auto& inst : reference_instances()) {
    if (inst.id != id) continue;
    const BigRational r = parse_rational(inst.r);
    switch (inst.kind) {
      case ConicKind::Parabola:
        return {ConicSpec::parabola(parse_rational(inst.p)), r};
      case ConicKind::Ellipse:
        return {ConicSpec::ellipse(parse_rational(inst.a), parse_rational(inst.b)), r};
      case ConicKind::Hyperbola:
        return {ConicSpec::hyperbola(parse_rational(inst.a), parse_rational(inst.b)), r};
    }
  }
  throw SpecError("no reference instance " + std::to_string(id));
}

std::vector<std::pair<double, double>> expected_singular_points(int id) {
  using H = HighFloat;
  std::vector<std::pair<H, H>> pts;
  auto axis_pair = [&](const H& y) {
    pts.emplace_back(H(0), y);
    pts.emplace_back(H(0), H(-y));
  };
  auto four = [&](const H& x, const H& y) {
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) pts.emplace_back(sx * x, sy * y);
    }
  };
  switch (id) {
    case 1:
      pts.emplace_back(H(0), H(73) / 192);
      break;
    case 2:
      pts.emplace_back(H(0), H(2) / 3);
      break;
    case 3: {
      const H c = real_cbrt(H(12));
      const H x = sqrt(65 + 36 * c - 27 * c * c) / 6;
      const H y = 3 * c / 4 - H(1) / 3;
      pts.emplace_back(H(0), H(97) / 48);
      pts.emplace_back(x, y);
      pts.emplace_back(H(-x), y);
      break;
    }
    case 4:
      axis_pair(sqrt(H(6)));
      break;
    case 5:
      axis_pair(H(9) / 4);
      break;
    case 6: {
      const H c = real_cbrt(H(6));
      axis_pair(sqrt(H(51)) / 6);
      four(sqrt(525 + 324 * c * c - 864 * c) / 18, 2 * sqrt(231 - 81 * c * c + 54 * c) / 9);
      break;
    }
    case 7:
      axis_pair(sqrt(H(10)) / 2);
      break;
    case 8:
      axis_pair(H(13) / 6);
      break;
    case 9: {
      const H c = real_cbrt(H(2));
      axis_pair(5 * sqrt(H(13)) / 6);
      four(2 * sqrt(39 - 78 * c + 39 * c * c) / 13, sqrt(12805 + 11232 * c + 12636 * c * c) / 78);
      break;
    }
    default:
      throw SpecError("no reference instance " + std::to_string(id));
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& [x, y] : pts) out.emplace_back(x.convert_to<double>(), y.convert_to<double>());
  return out;
}

namespace {

constexpr double kPointTolerance = 1e-9;

nlohmann::json check(const std::string& name, bool pass) { return {{"name", name}, {"pass", pass}}; }

/// Largest distance between matched points, or infinity when the sets differ
/// in size or some point has no partner within tolerance.
double match_points(const std::vector<std::pair<double, double>>& expected,
                    const std::vector<std::pair<double, double>>& found) {
  if (expected.size() != found.size()) return INFINITY;
  std::vector<bool> taken(found.size(), false);
  double worst = 0;
  for (const auto& [ex, ey] : expected) {
    std::size_t best = found.size();
    double best_err = INFINITY;
    for (std::size_t k = 0; k < found.size(); ++k) {
      if (taken[k]) continue;
      const double err = std::max(std::abs(found[k].first - ex), std::abs(found[k].second - ey));
      if (err < best_err) {
        best_err = err;
        best = k;
      }
    }
    if (best == found.size()) return INFINITY;
    taken[best] = true;
    worst = std::max(worst, best_err);
  }
  return worst;
}

std::vector<std::pair<double, double>> coordinates(const SingularPointReport& report) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : report.points) out.emplace_back(p.x, p.y);
  return out;
}

nlohmann::json points_json(const std::vector<std::pair<double, double>>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return out;
}

nlohmann::json finish(nlohmann::json report) {
  bool pass = true;
  for (const auto& c : report["checks"]) {
    if (c.value("gating", true)) pass = pass && c["pass"].get<bool>();
  }
  report["pass"] = pass;
  return report;
}

}  // namespace

nlohmann::json verify_example(int id) {
  const auto [conic, r] = reference_spec(id);
  const ReferenceInstance* inst = nullptr;
  for (const auto& i : reference_instances()) {
    if (i.id == id) inst = &i;
  }
  nlohmann::json report{{"id", std::to_string(id)}, {"conic", conic.str()}, {"r", to_string(r)}};
  nlohmann::json checks = nlohmann::json::array();

  const MultiPoly reference = content_normalize(parse_poly(inst->g, plane_ring()));
  const OffsetCurve closed = offset_poly_closed_form(conic, r);
  const OffsetCurve elim = offset_poly_elimination(conic, r);
  auto c1 = check("closed-form-proportional", proportional(closed.g, reference));
  c1["terms"] = closed.g.num_terms();
  checks.push_back(c1);
  auto c2 = check("elimination-proportional", proportional(elim.g, reference));
  c2["terms"] = elim.g.num_terms();
  checks.push_back(c2);
  checks.push_back(check("routes-identical", closed.g == elim.g));

  const BigRational rc = r_crit(conic);
  auto c3 = check("r-crit", rc > 0);
  c3["value"] = to_string(rc);
  c3["regime"] = to_string(classify_regime(conic, r));
  checks.push_back(c3);

  const auto expected = expected_singular_points(id);
  const SingularPointReport sp = singular_points(conic, r);
  const double err = match_points(expected, coordinates(sp));
  auto c4 = check("singular-points", err <= kPointTolerance);
  c4["expected"] = points_json(expected);
  c4["report"] = to_json(sp);
  checks.push_back(c4);

  double worst_residual = 0;
  for (const auto& p : sp.points) worst_residual = std::max(worst_residual, p.residual);
  auto c5 = check("singular-residuals", worst_residual <= 1e-9);
  checks.push_back(c5);

  const SingularPointReport via = singular_points_via_elimination(conic, r);
  const double err2 = match_points(coordinates(sp), coordinates(via));
  auto c6 = check("singular-points-elimination-route", err2 <= kPointTolerance);
  c6["points"] = via.points.size();
  checks.push_back(c6);

  report["checks"] = std::move(checks);
  return finish(std::move(report));
}

nlohmann::json verify_general_basis(ConicKind kind) {
  static const std::vector<std::uint64_t> parabola{7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2};
  static const std::vector<std::uint64_t> central{16, 16, 14, 12, 11, 11, 10, 10, 9, 8, 7, 7, 5, 4, 2};
  const auto& expected = kind == ConicKind::Parabola ? parabola : central;

  const Ideal ideal = build_symbolic_ideal(kind);
  const GroebnerBasis gb = reduce_basis(buchberger(ideal, MonomialOrder::lex()));
  const auto degrees = degree_multiset(gb.polys);

  nlohmann::json report{{"id", to_string(kind) + "-basis"}, {"order", "lex"}};
  report["ring"] = ideal.ring().names();
  nlohmann::json checks = nlohmann::json::array();
  auto size = check("basis-size", gb.polys.size() == expected.size());
  size["expected"] = expected.size();
  size["found"] = gb.polys.size();
  checks.push_back(size);
  auto multiset = check("degree-multiset", degrees == expected);
  multiset["expected"] = expected;
  multiset["found"] = degrees;
  checks.push_back(multiset);

  const auto texts = reference_basis_text(kind);
  if (!texts.empty()) {
    nlohmann::json members = nlohmann::json::array();
    std::size_t in_ideal = 0, in_basis = 0;
    for (std::size_t k = 0; k < texts.size(); ++k) {
      const MultiPoly p = content_normalize(parse_poly(texts[k], ideal.ring()));
      const bool member = reduce(p, gb.polys, gb.order).remainder.is_zero();
      const bool listed = std::any_of(gb.polys.begin(), gb.polys.end(),
                                      [&](const MultiPoly& g) { return proportional(p, g); });
      in_ideal += member;
      in_basis += listed;
      members.push_back({{"index", k + 1}, {"degree", p.total_degree()}, {"in_ideal", member}, {"basis_member", listed}});
    }
    auto terms = check("reference-members", in_basis == texts.size());
    terms["gating"] = false;
    terms["in_ideal"] = in_ideal;
    terms["basis_members"] = in_basis;
    terms["members"] = std::move(members);
    checks.push_back(terms);
  }
  report["checks"] = std::move(checks);
  return finish(std::move(report));
}

MeshSpec reference_mesh_spec() {
  return {ConicSpec::ellipse(4, 2), {0.2, 0.4, 0.6}, {3.75, 3, 2, 1, 0, -1, -2, -3, -3.75}};
}

nlohmann::json verify_mesh() {
  const MeshSpec spec = reference_mesh_spec();
  const Mesh mesh = generate_mesh(spec);
  nlohmann::json report{{"id", "mesh"}};
  nlohmann::json checks = nlohmann::json::array();
  auto shape = check("node-matrix", mesh.rows == 7 && mesh.cols == 20 && mesh.nodes.size() == 140);
  shape["rows"] = mesh.rows;
  shape["cols"] = mesh.cols;
  shape["nodes"] = mesh.nodes.size();
  checks.push_back(shape);
  auto q4 = check("quad4-count", mesh.quad4.size() == 120);
  q4["found"] = mesh.quad4.size();
  checks.push_back(q4);
  auto q9 = check("quad9-count", mesh.quad9.size() == 30);
  q9["found"] = mesh.quad9.size();
  checks.push_back(q9);

  double worst = 0;
  const Ring& plane = plane_ring();
  const MultiPoly ellipse = parse_poly("4 y^2 + 16 x^2 - 64", plane);
  for (int row = 0; row < mesh.rows; ++row) {
    const double d = mesh.row_offsets[row];
    const MultiPoly g =
        d == 0 ? ellipse : offset_poly_closed_form(spec.ellipse, decimal_rational(std::abs(d))).g;
    const FloatPoly f(g);
    for (int col = 0; col < mesh.cols; ++col) {
      const Point2 p = mesh.nodes[row * mesh.cols + col];
      worst = std::max(worst, std::abs(f(p.x, p.y)) / f.scale());
    }
  }
  auto layers = check("layer-residuals", worst <= 1e-8);
  layers["max_scaled_residual"] = worst;
  checks.push_back(layers);
  report["checks"] = std::move(checks);
  return finish(std::move(report));
}

nlohmann::json verify_paper(const std::string& id) {
  if (id.size() == 1 && id[0] >= '1' && id[0] <= '9') return verify_example(id[0] - '0');
  if (id == "parabola-basis") return verify_general_basis(ConicKind::Parabola);
  if (id == "ellipse-basis") return verify_general_basis(ConicKind::Ellipse);
  if (id == "hyperbola-basis") return verify_general_basis(ConicKind::Hyperbola);
  if (id == "mesh") return verify_mesh();
  throw SpecError("unknown id '" + id +
                  "' (expected 1..9, parabola-basis, ellipse-basis, hyperbola-basis or mesh)");
}

}  // namespace conoff
