#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "aclab/anticoherence.hpp"
#include "aclab/io.hpp"
#include "aclab/search.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace aclab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "aclab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(ACLAB_STATES_DIR) + "/" + name + ".json"; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "aclab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("check") {
  CHECK(run({"check", corpus("bell")}).out == "order 1\n");
  CHECK(run({"check", corpus("icosahedron")}).out == "order 5\n");
  CHECK(run({"check", corpus("d7d42")}).out == "order 7\n");
  CHECK(run({"check", corpus("icosahedron"), "--order", "5"}).out == "t=5 pass\n");
  CHECK(run({"check", corpus("icosahedron"), "-t", "6"}).out == "t=6 fail\n");
  const auto r = run({"--json", "check", corpus("octahedron")});
  CHECK(r.code == cli::kOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["order"] == 3);
  CHECK(doc["methods"].size() == 4);
}

TEST_CASE("exit codes") {
  const auto empty = scratch("empty.json");
  write_text(empty.string(), "");
  CHECK(run({"check", empty.string()}).code == cli::kInput);
  CHECK(run({"check", "/nonexistent.json"}).code == cli::kInput);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"family", "zimba", "--N", "5"}).code == cli::kInput);
  CHECK(run({"search", "2", "3"}).code == cli::kInfeasible);
  CHECK(run({"search", "8", "200"}).code == cli::kInput);  // beyond desk scale without --full-range
  const auto d33 = scratch("d33.json");
  write_text(d33.string(), R"({"dicke": [[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[0,0]]})");
  CHECK(run({"slocc-rep", d33.string()}).code == cli::kInfeasible);
  // The 10-point Gauss-Legendre plan at N = 220 violates the spacing condition.
  const auto gl = run({"gl", "10"});
  CHECK(gl.code == cli::kInfeasible);
  CHECK(gl.err.find("min gap 10 < t+1 = 11") != std::string::npos);
}

TEST_CASE("roots and from-points") {
  const auto ghz = run({"roots", corpus("ghz")});
  REQUIRE(ghz.code == 0);
  const auto cfg = parse_points(ghz.out);
  REQUIRE(cfg.roots.size() == 3);
  for (const auto& z : cfg.roots) {
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    CHECK(std::abs(std::pow(z, 3) - 1.0) < 1e-12);  // cube roots of unity
  }
  const auto d42 = scratch("d42.json");
  write_text(d42.string(), state_to_json(dicke_state(4, 2)));
  CHECK(run({"roots", d42.string()}).out == "0 0 2\n3.1415926535897931 0 2\n");

  const auto oct = scratch("oct.txt");
  write_text(oct.string(), "0 0\n3.141592653589793 0\n1.5707963267948966 0\n1.5707963267948966 1.5707963267948966\n"
                           "1.5707963267948966 3.141592653589793\n1.5707963267948966 4.71238898038469\n");
  const auto fp = run({"from-points", oct.string()});
  REQUIRE(fp.code == 0);
  CHECK(order_of_anticoherence(parse_state(fp.out).state) == 3);
  // Vertices at azimuths pi/4 + k pi/2 give the tabulated coefficients.
  write_text(oct.string(), "0 0\n3.141592653589793 0\n1.5707963267948966 0.78539816339744828\n"
                           "1.5707963267948966 2.3561944901923448\n1.5707963267948966 3.9269908169872414\n"
                           "1.5707963267948966 5.497787143782138\n");
  CHECK(oracle::ray_distance(parse_state(run({"from-points", oct.string()}).out).state, family_state("octahedron")) < 1e-12);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = oracle::random_state(rng, 2 + trial);
    const auto in = scratch("rand.json"), pts = scratch("rand.txt");
    write_text(in.string(), state_to_json(s));
    REQUIRE(run({"roots", in.string(), "-o", pts.string()}).code == 0);
    const auto back = run({"from-points", pts.string()});
    REQUIRE(back.code == 0);
    CHECK(oracle::ray_distance(parse_state(back.out).state, s) < 1e-8);
  }
}

TEST_CASE("search, gl and family") {
  const auto s = run({"search", "5", "30"});
  REQUIRE(s.code == 0);
  const auto first = json::parse(s.out.substr(0, s.out.find('\n')));
  CHECK(first["N"] == 24);
  CHECK(first["n"] == 6);

  const auto all = run({"search", "2", "5", "--all"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 3);  // N = 3, 4, 5

  const auto fam = run({"family", "d7d42"});
  REQUIRE(fam.code == 0);
  const auto doc = json::parse(fam.out);
  CHECK(doc["n_qubits"] == 42);
  CHECK(doc["exact"][7]["num"] == "29315");
  CHECK(doc["exact"][28]["phase_num"] == 1);
  CHECK(std::stoll(doc["exact"][21]["den"].get<std::string>()) == 7062 * 2 + 29315 * 2 + 4059 * 2 + 36777);

  const auto gl = run({"--json", "gl", "4", "--symmetric", "--first"});
  REQUIRE(gl.code == 0);
  const auto g = json::parse(gl.out);
  const auto state = parse_state(g["state"].dump()).state;
  CHECK(check_reduced(state, 4, 1e-8));

  const auto out = scratch("gl.json");
  REQUIRE(run({"gl", "3", "--first", "-o", out.string()}).code == 0);
  CHECK(run({"check", out.string(), "--order", "3", "--tol", "1e-9"}).out == "t=3 pass\n");
}

TEST_CASE("slocc, husimi, multipoles and symmetry") {
  const auto rep = run({"--json", "slocc-rep", corpus("n5_c4")});
  REQUIRE(rep.code == 0);
  CHECK(json::parse(rep.out)["y"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(run({"slocc-eq", corpus("octahedron"), corpus("octahedron")}).out == "equivalent\n");
  CHECK(run({"slocc-eq", corpus("n5_c4"), corpus("n5_c5")}).out == "inequivalent\n");

  const auto h = run({"husimi", corpus("bell"), "--n-theta", "4", "--n-phi", "3"});
  REQUIRE(h.code == 0);
  CHECK(std::count(h.out.begin(), h.out.end(), '\n') == 13);

  const auto m = run({"multipoles", corpus("octahedron"), "--lmax", "4"});
  REQUIRE(m.code == 0);
  CHECK(m.out.rfind("l,m,re,im\n", 0) == 0);

  const auto sym = run({"symmetry", corpus("icosahedron")});
  REQUIRE(sym.code == 0);
  CHECK(sym.out.find("group D_5d") != std::string::npos);
}

TEST_CASE("determinism") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"roots", corpus("icosahedron")}, {"search", "4", "20", "--threads", "3"},
        {"--json", "gl", "6", "--symmetric", "--first"}, {"symmetry", corpus("d7d42")},
        {"multipoles", corpus("zimba8"), "--husimi"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("installed binary") {
  const auto out = scratch("bin_out.txt");
  const std::string cmd = std::string(ACLAB_BINARY) + " check " + corpus("tetrahedron") + " > " + out.string();
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(read_text(out.string()) == "order 2\n");
  CHECK(std::system((std::string(ACLAB_BINARY) + " check /nonexistent 2>/dev/null").c_str()) != 0);
}
