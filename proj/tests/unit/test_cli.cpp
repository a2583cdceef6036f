#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinlat/cli.hpp"

using namespace spinlat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "spinlat_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("enum count-only") {
  auto r = invoke({"enum", "--n", "6", "--planar", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(invoke({"enum", "--n", "8", "--count-only"}).out == "5\n");
  CHECK(invoke({"enum", "--n", "12", "--planar", "--three-connected", "--count-only"}).out == "14\n");
}

TEST_CASE("enum writes a loadable graph file") {
  const auto path = scratch("enum8.g");
  CHECK(invoke({"enum", "--n", "8", "--planar", "-o", path.string()}).code == 0);
  const auto records = load_graph_file(path.string());
  CHECK(records.size() == 3);
  CHECK(std::filesystem::exists(path.string() + ".manifest"));
}

TEST_CASE("frustration") {
  const auto r = invoke({"frustration", "--graph", "ladder:18"});
  CHECK(r.code == 0);
  CHECK(r.out.find("min_violations=2") != std::string::npos);
  const auto s = invoke({"frustration", "--graph", "ladder:16"});
  CHECK(s.out.find("min_violations=0") != std::string::npos);
  CHECK(s.out.find("classical_degeneracy=2") != std::string::npos);
}

TEST_CASE("gen emits the ladder") {
  const auto r = invoke({"gen", "ladder", "--n", "6"});
  CHECK(r.code == 0);
  const auto records = load_graphs(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph == ladder_on_circle(6));
}

TEST_CASE("solve prints spectrum and observables") {
  const auto r = invoke({"solve", "--graph", "ladder:8", "--b", "1", "--gamma", "1.5"});
  CHECK(r.code == 0);
  for (const char* key : {"E1=", "E4=", "delta13=", "entropy_half=", "c_rho5=", "schmidt_rank=",
                          "adiabatic_ratio3="}) {
    CHECK(r.out.find(key) != std::string::npos);
  }
}

TEST_CASE("sweep CSV has one row per grid point and a stable header") {
  const auto path = scratch("sweep.csv");
  const auto r = invoke({"sweep", "--graph", "ladder:8", "--b", "1", "--gamma", "2:1:0.25", "--k",
                         "4", "--block", "ring:inner", "-o", path.string()});
  REQUIRE(r.code == 0);
  const std::string csv = slurp(path);
  CHECK(count_lines(csv) == 1 + 5);
  CHECK(csv.rfind("b,gamma,e1,delta12,delta13,entropy_single,entropy_half,c_z1,c_z2,c_z3,c_z4,c_z5,"
                  "c_rho1,c_rho2,c_rho3,c_rho4,c_rho5,degeneracy_flag,ground_cluster\n",
                  0) == 0);
  const std::string manifest = slurp(path.string() + ".manifest");
  CHECK(manifest.find("command=sweep\n") != std::string::npos);
  CHECK(manifest.find("opt.seed=1\n") != std::string::npos);
  CHECK(manifest.find("tool_version=") != std::string::npos);
  CHECK(manifest.find("wall_time_s=") != std::string::npos);
}

TEST_CASE("replay from the manifest alone reproduces the CSV byte for byte") {
  const auto first = scratch("replay_a.csv");
  const auto second = scratch("replay_b.csv");
  REQUIRE(invoke({"sweep", "--graph", "ladder:10", "--b", "0.5", "--gamma", "2:1:0.1", "--block",
                  "random:4", "--seed", "17", "-o", first.string()})
              .code == 0);
  REQUIRE(invoke({"replay", "--manifest", first.string() + ".manifest", "-o", second.string()}).code ==
          0);
  CHECK(slurp(first) == slurp(second));
  CHECK(slurp(first).size() > 100);
}

TEST_CASE("critline and scaling write fit reports") {
  const auto cl = scratch("critline.csv");
  const auto r = invoke({"critline", "--graph", "ladder:8", "--b", "0:1.5:0.5", "--gamma", "3:0.2:0.1",
                         "--k", "3", "-o", cl.string()});
  CHECK(r.code == 0);
  CHECK(slurp(cl.string() + ".fit.txt").find("poly3.c0=") != std::string::npos);
  const auto sc = scratch("scaling.csv");
  const auto s = invoke({"scaling", "--family", "ladder_even", "--sizes", "8,12", "--b", "1", "--gamma",
                         "3:0.5:0.25", "--mode", "entropy", "--k", "2", "--refine-steps", "5", "-o",
                         sc.string()});
  CHECK(s.code == 0);
  CHECK(count_lines(slurp(sc)) == 3);
}

TEST_CASE("ensemble over enumerated graphs") {
  const auto path = scratch("ensemble.csv");
  const auto r = invoke({"ensemble", "--graphs", "enum:8:planar", "--b", "0.5", "--gamma", "2:1:0.5",
                         "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(count_lines(slurp(path)) == 4);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"enum"}).code == 1);
  CHECK(invoke({"enum", "--n", "7", "--count-only"}).code == 2);
  CHECK(invoke({"sweep", "--graph", "ladder:8", "--gamma", "1:2:x"}).code == 2);
  CHECK(invoke({"frustration", "--graph", "/nonexistent/file.g"}).code == 2);
  const auto budget = invoke({"enum", "--n", "16", "--count-only"});
  CHECK(budget.code == 3);
  CHECK_FALSE(budget.err.empty());
  CHECK(invoke({"sweep", "--graph", "ladder:8", "--gamma", "1:2:0.5", "--max-matvecs", "4"}).code == 3);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
}

TEST_CASE("graph and block shorthands") {
  CHECK(cli::resolve_graphs("ladder:12", false).front().graph == ladder_on_circle(12));
  CHECK(cli::resolve_graphs("enum:8:planar:3conn", false).size() == 2);
  const auto g = ladder_on_circle(12);
  CHECK(cli::resolve_block("ring:outer", g) == ladder_outer_ring(12));
  CHECK(cli::resolve_block("list:3,1", g) == VertexSet{1, 3});
  CHECK(cli::resolve_block("half", g).size() == 6);
  CHECK(cli::resolve_block("random:5", g).size() == 6);
  CHECK_THROWS(cli::resolve_block("bogus", g));
  CHECK(cli::parse_grid("3:0:0.05").size() == 61);
  CHECK(cli::parse_grid("1,2.5").size() == 2);
  CHECK(cli::format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("manifest text round trip") {
  cli::Manifest m;
  m.set("command", "sweep");
  m.set("opt.b", "1");
  m.set("opt.cold", "true");
  m.set("opt.warm", "false");
  m.set("arg.family", "ladder");
  const auto back = cli::Manifest::parse(m.str());
  CHECK(back.str() == m.str());
  CHECK(cli::replay_args(back) == std::vector<std::string>{"sweep", "--b", "1", "--cold", "ladder"});
  CHECK_THROWS(cli::Manifest::parse("no equals sign\n"));
}
