#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CONOFF_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args + " --json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path tmp = std::filesystem::temp_directory_path();

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify --conic parabola --p 1/3 --r 1/4 --bogus").code == 2);
  CHECK(run("classify --conic parabola --p 0 --r 1/4").code == 2);
  CHECK(run("classify --conic ellipse --a 1 --b 2 --r 1/4").code == 2);
  CHECK(run("classify --conic parabola --p 1/3 --r x").code == 2);
  CHECK(run("mesh --a 4 --b 2 --offsets 0.2,1.5 --stations 1").code == 2);
  CHECK(run("verify-paper 10").code == 2);
  CHECK(run("groebner --polys 'y0^2+4 x0^2-9;4 y^2-8 y y0+4 y0^2+4 x^2-8 x x0+4 x0^2-1;y0 x+3 y0 x0-4 x0 y' "
            "--vars y0,x0,x,y --order lex --max-pairs 3")
            .code == 3);
}

TEST_CASE("groebner") {
  const auto j = run_json("groebner --polys 'x^2 - y; x y - 1' --vars x,y --order lex");
  CHECK(j["reduced"] == true);
  REQUIRE(j["polys"].size() == 2);
  CHECK(j["stats"]["basis_size"] == 2);
  CHECK(j["stats"]["degree_multiset"] == nlohmann::json({3, 2}));

  const auto path = tmp / "conoff_cli_gens.json";
  {
    std::ofstream f(path);
    f << nlohmann::json::array({j["polys"][0], j["polys"][1]}).dump();
  }
  const auto again = run_json("groebner --in " + path.string() + " --order lex");
  CHECK(again["polys"] == j["polys"]);
  std::filesystem::remove(path);
}

TEST_CASE("offset-poly routes agree") {
  const std::string conic = "offset-poly --conic ellipse --a 3 --b 3/2 --r 1/2";
  const auto closed = run_json(conic + " --method closed");
  const auto elim = run_json(conic + " --method elim");
  CHECK(closed["g"] == elim["g"]);
  CHECK(closed["degree"] == 8);
  CHECK(closed["source"] == "closed-form");
  CHECK(elim["source"] == "elimination");
}

TEST_CASE("singular and classify") {
  const auto s = run_json("singular --conic parabola --p 1/3 --r 3/2");
  CHECK(s["regime"] == "supercritical");
  CHECK(s["points"].size() == 3);
  const auto c = run_json("classify --conic hyperbola --a 3/2 --b 1 --r 2/3");
  CHECK(c["r_crit"] == "2/3");
  CHECK(c["regime"] == "critical");
  CHECK(c["counts"]["real"] == 2);
  const Run text = run("singular --conic ellipse --a 3 --b 3/2 --r 4/3 --method elim");
  CHECK(text.code == 0);
  CHECK(text.out.find("split") != std::string::npos);
}

TEST_CASE("trace writes deterministic svg") {
  const auto svg1 = tmp / "conoff_cli_trace1.svg", svg2 = tmp / "conoff_cli_trace2.svg";
  const std::string args = "trace --conic ellipse --a 3 --b 3/2 --r 4/3 --bbox -4,4,-5,5 --res 128 --mark-singular";
  CHECK(run(args + " --svg " + svg1.string()).code == 0);
  CHECK(run(args + " --svg " + svg2.string()).code == 0);
  const std::string a = slurp(svg1), b = slurp(svg2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::filesystem::remove(svg1);
  std::filesystem::remove(svg2);
  CHECK(run("trace --conic ellipse --a 3 --b 3/2 --r 4/3 --bbox -4,4,-5 --res 128").code == 2);
  CHECK(run("trace --bbox -1,1,-1,1 --res 64").code == 2);
}

TEST_CASE("mesh") {
  const auto j = run_json("mesh --a 4 --b 2 --offsets 0.2,0.4,0.6 --stations 3,2,1,0.5,0,-0.5,-1,-2,-3");
  CHECK(j["rows"] == 7);
  CHECK(j["cols"] == 20);
  CHECK(j["nodes"].size() == 140);
  CHECK(j["quad4"].size() == 120);
  CHECK(j["quad9"].size() == 30);
}

TEST_CASE("verify-paper") {
  const Run first = run("verify-paper 6 --json");
  const Run second = run("verify-paper 6 --json");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(nlohmann::json::parse(first.out)["pass"] == true);
  CHECK(run("verify-paper mesh").code == 0);
  CHECK(run("verify-paper parabola-basis").code == 0);
}
