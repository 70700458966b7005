// Command-line front end. Exit codes: 0 success, 2 bad input or failed
// precondition, 3 resource limit reached.

#include "conoff/conics.hpp"
#include "conoff/curve.hpp"
#include "conoff/errors.hpp"
#include "conoff/groebner.hpp"
#include "conoff/mesh.hpp"
#include "conoff/poly_io.hpp"
#include "conoff/svg.hpp"
#include "conoff/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace conoff;
using nlohmann::json;

namespace {

struct ConicArgs {
  std::string conic;
  std::string p, a, b, r;

  void add_to(CLI::App* cmd, bool need_r = true) {
    cmd->add_option("--conic", conic, "parabola, ellipse or hyperbola")->required();
    cmd->add_option("--p", p, "parabola parameter (4 p y = x^2)");
    cmd->add_option("--a", a, "semi-axis along y");
    cmd->add_option("--b", b, "semi-axis along x");
    auto* opt = cmd->add_option("--r", r, "offset distance");
    if (need_r) opt->required();
  }

  ConicSpec spec() const {
    auto need = [](const std::string& v, const char* name) {
      if (v.empty()) throw ParamError(std::string("missing --") + name);
      return parse_rational(v);
    };
    switch (parse_conic_kind(conic)) {
      case ConicKind::Parabola:
        return ConicSpec::parabola(need(p, "p"));
      case ConicKind::Ellipse:
        return ConicSpec::ellipse(need(a, "a"), need(b, "b"));
      case ConicKind::Hyperbola:
        break;
    }
    return ConicSpec::hyperbola(need(a, "a"), need(b, "b"));
  }

  BigRational offset() const { return parse_rational(r); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot open " + path + " for writing");
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json stats_json(const GroebnerStats& s) {
  return {{"pairs_considered", s.pairs_considered},
          {"pairs_skipped_criteria", s.pairs_skipped_criteria},
          {"reductions", s.reductions},
          {"zero_reductions", s.zero_reductions},
          {"basis_size", s.basis_size}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offset curves of conics: exact elimination, singular points, tracing and meshing"};
  app.require_subcommand(1);
  bool as_json = false;

  // groebner
  auto* gb_cmd = app.add_subcommand("groebner", "Groebner basis of an ideal");
  std::string gb_in, gb_polys, gb_vars, gb_order = "grevlex";
  std::size_t gb_max_pairs = GroebnerLimits{}.max_pairs;
  std::uint32_t gb_max_degree = GroebnerLimits{}.max_degree;
  bool gb_raw = false;
  gb_cmd->add_option("--in", gb_in, "JSON file: a list of polynomials or {\"polys\": [...]}");
  gb_cmd->add_option("--polys", gb_polys, "generators as text, separated by ';'");
  gb_cmd->add_option("--vars", gb_vars, "comma-separated variables for --polys, greatest first");
  gb_cmd->add_option("--order", gb_order, "lex, grevlex or block:k");
  gb_cmd->add_option("--max-pairs", gb_max_pairs);
  gb_cmd->add_option("--max-degree", gb_max_degree);
  gb_cmd->add_flag("--unreduced", gb_raw, "skip the reduction to the reduced basis");
  gb_cmd->add_flag("--json", as_json);

  // offset-poly
  auto* op_cmd = app.add_subcommand("offset-poly", "Implicit polynomial of the offset curve");
  ConicArgs op_args;
  op_args.add_to(op_cmd);
  std::string op_method = "closed", op_out, op_order = "block:2";
  op_cmd->add_option("--method", op_method, "closed or elim")->check(CLI::IsMember({"closed", "elim"}));
  op_cmd->add_option("--order", op_order, "elimination order for --method elim");
  op_cmd->add_option("--out", op_out, "write the polynomial JSON here");
  op_cmd->add_flag("--json", as_json);

  // singular
  auto* sg_cmd = app.add_subcommand("singular", "Singular points of the offset curve");
  ConicArgs sg_args;
  sg_args.add_to(sg_cmd);
  std::string sg_method = "closed", sg_format = "text";
  sg_cmd->add_option("--method", sg_method, "closed or elim")->check(CLI::IsMember({"closed", "elim"}));
  sg_cmd->add_option("--format", sg_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sg_cmd->add_flag("--json", as_json);

  // classify
  auto* cl_cmd = app.add_subcommand("classify", "Critical offset and regime");
  ConicArgs cl_args;
  cl_args.add_to(cl_cmd);
  cl_cmd->add_flag("--json", as_json);

  // trace
  auto* tr_cmd = app.add_subcommand("trace", "Trace V(g) and optionally draw it");
  std::string tr_g, tr_bbox = "-3,3,-3,3", tr_svg;
  ConicArgs tr_args;
  int tr_res = 512;
  bool tr_mark = false;
  tr_cmd->add_option("--g", tr_g, "polynomial JSON over [x, y]");
  tr_cmd->add_option("--conic", tr_args.conic, "instead of --g: trace the offset of this conic");
  tr_cmd->add_option("--p", tr_args.p);
  tr_cmd->add_option("--a", tr_args.a);
  tr_cmd->add_option("--b", tr_args.b);
  tr_cmd->add_option("--r", tr_args.r);
  tr_cmd->add_option("--bbox", tr_bbox, "xmin,xmax,ymin,ymax");
  tr_cmd->add_option("--res", tr_res, "grid cells per axis")->check(CLI::Range(8, 4096));
  tr_cmd->add_option("--svg", tr_svg, "write an SVG figure");
  tr_cmd->add_flag("--mark-singular", tr_mark, "mark singular points (needs --conic)");
  tr_cmd->add_flag("--json", as_json);

  // mesh
  auto* me_cmd = app.add_subcommand("mesh", "Layered mesh around an ellipse");
  std::string me_a = "4", me_b = "2", me_offsets = "0.2,0.4,0.6", me_stations = "3.75,3,2,1,0,-1,-2,-3,-3.75";
  std::string me_out, me_svg;
  me_cmd->add_option("--a", me_a, "semi-axis along y");
  me_cmd->add_option("--b", me_b, "semi-axis along x");
  me_cmd->add_option("--offsets", me_offsets, "ascending decimals in (0, r_crit)");
  me_cmd->add_option("--stations", me_stations, "descending decimals in (-a, a)");
  me_cmd->add_option("--out", me_out, "write mesh JSON here");
  me_cmd->add_option("--svg", me_svg, "write an SVG figure");
  me_cmd->add_flag("--json", as_json);

  // verify-paper
  auto* vp_cmd = app.add_subcommand("verify-paper", "Check a reference instance");
  std::string vp_id;
  vp_cmd->add_option("id", vp_id, "1..9, parabola-basis, ellipse-basis, hyperbola-basis or mesh")->required();
  vp_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gb_cmd->parsed()) {
      std::vector<MultiPoly> gens;
      if (!gb_in.empty()) {
        const json j = parse_json(read_file(gb_in));
        const json& list = j.is_object() ? j.at("polys") : j;
        for (const auto& p : list) gens.push_back(poly_from_json(p));
      } else {
        if (gb_vars.empty() || gb_polys.empty()) throw PreconditionError("give --in, or --polys with --vars");
        const Ring ring(split(gb_vars, ','));
        for (const auto& text : split(gb_polys, ';')) gens.push_back(parse_poly(text, ring));
      }
      const MonomialOrder ord = MonomialOrder::parse(gb_order);
      GroebnerBasis gb = buchberger(Ideal(gens), ord, {gb_max_pairs, gb_max_degree});
      const GroebnerStats raw_stats = gb.stats;
      if (!gb_raw) gb = reduce_basis(gb);
      if (as_json) {
        json out{{"order", ord.str()}, {"reduced", gb.reduced}};
        json polys = json::array();
        for (const auto& p : gb.polys) polys.push_back(to_json(p, ord));
        out["polys"] = std::move(polys);
        json stats = stats_json(raw_stats);
        stats["basis_size"] = gb.polys.size();
        stats["degree_multiset"] = degree_multiset(gb.polys);
        out["stats"] = std::move(stats);
        print(out);
      } else {
        for (const auto& p : gb.polys) std::cout << to_pretty(p, ord) << "\n";
        std::cerr << gb.polys.size() << " polynomials, " << raw_stats.pairs_considered << " pairs\n";
      }
    } else if (op_cmd->parsed()) {
      const ConicSpec conic = op_args.spec();
      const BigRational r = op_args.offset();
      const OffsetCurve c = op_method == "closed"
                                ? offset_poly_closed_form(conic, r)
                                : offset_poly_elimination(conic, r, MonomialOrder::parse(op_order));
      if (!op_out.empty()) write_file(op_out, to_json(c.g).dump(2) + "\n");
      if (as_json) {
        print({{"conic", conic.str()},
               {"r", to_string(r)},
               {"source", c.source == OffsetSource::ClosedForm ? "closed-form" : "elimination"},
               {"degree", c.g.total_degree()},
               {"terms", c.g.num_terms()},
               {"g", to_json(c.g)},
               {"pretty", to_pretty(c.g)}});
      } else {
        std::cout << to_pretty(c.g) << "\n";
      }
    } else if (sg_cmd->parsed()) {
      const ConicSpec conic = sg_args.spec();
      const BigRational r = sg_args.offset();
      const SingularPointReport rep =
          sg_method == "closed" ? singular_points(conic, r) : singular_points_via_elimination(conic, r);
      if (as_json || sg_format == "json") {
        print(to_json(rep));
      } else {
        std::cout << conic.str() << " r=" << to_string(r) << " r_crit=" << to_string(rep.r_crit) << " "
                  << to_string(rep.regime) << "\n";
        for (const auto& p : rep.points) {
          std::ostringstream line;
          line.precision(17);
          line << "  (" << p.x << ", " << p.y << ") " << to_string(p.tag) << " residual " << p.residual;
          std::cout << line.str() << "\n";
        }
        if (rep.complex_count >= 0) std::cout << "  complex points: " << rep.complex_count << "\n";
      }
    } else if (cl_cmd->parsed()) {
      const ConicSpec conic = cl_args.spec();
      const BigRational r = cl_args.offset();
      const SingularPointReport rep = singular_points(conic, r);
      json out{{"conic", conic.str()},
               {"r", to_string(r)},
               {"r_crit", to_string(rep.r_crit)},
               {"regime", to_string(rep.regime)},
               {"counts", {{"real", rep.points.size()}, {"complex", rep.complex_count}}}};
      if (as_json) {
        print(out);
      } else {
        std::cout << "r_crit " << to_string(rep.r_crit) << ", " << to_string(rep.regime) << ", "
                  << rep.points.size() << " real singular points\n";
      }
    } else if (tr_cmd->parsed()) {
      const auto box = parse_doubles(tr_bbox);
      if (box.size() != 4) throw ParseError("--bbox needs xmin,xmax,ymin,ymax");
      const BBox bbox{box[0], box[1], box[2], box[3]};
      MultiPoly g;
      std::optional<ConicSpec> conic;
      if (!tr_g.empty()) {
        g = change_ring(poly_from_json(parse_json(read_file(tr_g))), plane_ring());
      } else if (!tr_args.conic.empty()) {
        if (tr_args.r.empty()) throw ParamError("missing --r");
        conic = tr_args.spec();
        g = offset_poly_closed_form(*conic, tr_args.offset()).g;
      } else {
        throw PreconditionError("give --g or --conic");
      }
      if (tr_mark && !conic) throw PreconditionError("--mark-singular needs --conic");
      const TracedCurve curve = trace_implicit(g, bbox, tr_res);
      std::vector<SvgMarker> markers;
      if (tr_mark) {
        int k = 0;
        for (const auto& p : singular_points(*conic, tr_args.offset()).points) {
          markers.push_back({{p.x, p.y}, "S" + std::to_string(++k)});
        }
      }
      if (!tr_svg.empty()) {
        std::vector<SvgLayer> layers;
        if (conic) {
          // Base conic, traced from its own equation.
          std::string text;
          switch (conic->kind()) {
            case ConicKind::Parabola:
              text = "4 (" + to_string(conic->p()) + ") y - x^2";
              break;
            case ConicKind::Ellipse:
              text = "(" + to_string(conic->b()) + ")^2 y^2 + (" + to_string(conic->a()) + ")^2 x^2 - (" +
                     to_string(conic->a() * conic->b()) + ")^2";
              break;
            case ConicKind::Hyperbola:
              text = "(" + to_string(conic->b()) + ")^2 y^2 - (" + to_string(conic->a()) + ")^2 x^2 - (" +
                     to_string(conic->a() * conic->b()) + ")^2";
              break;
          }
          layers.push_back({trace_implicit(parse_poly(text, plane_ring()), bbox, tr_res), true, "#555555"});
        }
        layers.push_back({curve, false, "#1f4e9c"});
        plot_svg(layers, markers, SvgStyle{}, tr_svg);
      }
      std::size_t vertices = 0;
      for (const auto& line : curve.polylines) vertices += line.size();
      if (as_json) {
        json lines = json::array();
        for (const auto& line : curve.polylines) {
          json pts = json::array();
          for (const auto& p : line) pts.push_back({p.x, p.y});
          lines.push_back(std::move(pts));
        }
        print({{"resolution", curve.resolution},
               {"bbox", {bbox.xmin, bbox.xmax, bbox.ymin, bbox.ymax}},
               {"polylines", std::move(lines)},
               {"markers", markers.size()}});
      } else {
        std::cout << curve.polylines.size() << " polylines, " << vertices << " vertices\n";
      }
    } else if (me_cmd->parsed()) {
      const MeshSpec spec{ConicSpec::ellipse(parse_rational(me_a), parse_rational(me_b)),
                          parse_doubles(me_offsets), parse_doubles(me_stations)};
      const Mesh mesh = generate_mesh(spec);
      if (!me_out.empty()) export_mesh(mesh, me_out);
      if (!me_svg.empty()) write_file(me_svg, mesh_svg(mesh));
      if (as_json) {
        print(parse_json(mesh_to_json(mesh)));
      } else {
        std::cout << mesh.rows << " x " << mesh.cols << " nodes (" << mesh.nodes.size() << "), "
                  << mesh.quad4.size() << " quad4, " << mesh.quad9.size() << " quad9\n";
      }
    } else if (vp_cmd->parsed()) {
      const json report = verify_paper(vp_id);
      if (as_json) {
        print(report);
      } else {
        for (const auto& c : report["checks"]) {
          std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                    << (c.value("gating", true) ? "" : " (informational)") << "\n";
        }
        std::cout << (report["pass"].get<bool>() ? "PASS" : "FAIL") << " " << vp_id << "\n";
      }
      return report["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
