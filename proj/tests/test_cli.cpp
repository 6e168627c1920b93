#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "nwc/config.hpp"

using namespace nwc;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string temp_path(const std::string& name) { return std::string(P_tmpdir) + "/nwc_test_" + name; }

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(
      "# comment\n"
      "curve.q = 4\n"
      "\n"
      "points.Q = 1, 0 ,3\n"
      "points.eval = 5,6,7   # trailing\n"
      "seed = 42\n"
      "mode = exact\n"
      "format = markdown\n");
  CHECK(c.curve_q == 4);
  CHECK(c.q_points == std::vector<std::size_t>{1, 0, 3});
  REQUIRE(c.eval_places.has_value());
  CHECK(c.eval_places->size() == 3);
  CHECK(c.seed == 42);
  CHECK(c.mode == CertifyMode::Exact);
  CHECK(c.format == OutputFormat::Markdown);
  CHECK_FALSE(parse_config("points.eval = all").eval_places.has_value());
}

TEST_CASE("config errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("curve.q = 3\n\ncolour = blue\n") == 3);
  CHECK(line_of("curve.q = three\n") == 1);
  CHECK(line_of("seed = 1\nno equals sign\n") == 2);
  CHECK(line_of("points.Q = 0,-1\n") == 1);
  CHECK(line_of("mode = fast\n") == 1);
  CHECK(line_of("curve.q = 3\n") == -1);
}

TEST_CASE("instance construction") {
  RunConfig c;
  c.field_p = 2;
  c.field_e = 4;
  CHECK_THROWS_AS(Instance{c}, CurveError);
  c.curve_q = 4;
  CHECK_NOTHROW(Instance{c});
  RunConfig half;
  half.field_p = 3;
  CHECK_THROWS_AS(Instance{half}, ConfigError);
}

TEST_CASE("table presets") {
  const Result t1 = run({"table", "--preset", "t1"});
  CHECK(t1.status == 0);
  const auto rows = lines(t1.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "2,1,1;2,2,2;11,11,11;2;0");
  CHECK(rows[6].substr(0, 6) == "2,2,2;");
  CHECK(rows[6].substr(rows[6].size() - 4) == ";2;2");
  CHECK(rows[9] == "2,2,3;4,4,4;11,11,11;4;3");

  const Result t2 = run({"table", "--preset", "t2", "--format", "markdown"});
  CHECK(t2.status == 0);
  const auto md = lines(t2.out);
  REQUIRE(md.size() == 9);
  CHECK(md[5] == "| (3,3,3) | (2,2,2) | (23,23,23) | 2 | -1 |");
  CHECK(t2.err.empty());
}

TEST_CASE("table notes differences from the reference values") {
  const Result t1 = run({"table", "--preset", "t1"});
  CHECK(t1.err.find("(2,2,2) nu computed (2,2,2) reference (3,3,3)") != std::string::npos);
  CHECK(t1.err.find("(3,2,2) delta computed 4 reference 3") != std::string::npos);
}

TEST_CASE("output is identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--preset", "t1"},
           {"check", "--suite", "axioms", "--n", "50", "--seed", "3"},
           {"semigroup", "--box", "3,3,3"},
           {"code", "--a", "2,2,1", "--dual-dmax", "3"},
           {"--mode", "exact", "nu", "--a", "2,2,2"}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("single commands") {
  const Result b = run({"bound", "--a", "2,2,3"});
  CHECK(b.out == "2,2,3;4,4,4;11,11,11;4;3\n");
  const Result rr = run({"rr", "--a", "2,2,1"});
  CHECK(lines(rr.out)[0] == "dim;3");
  CHECK(lines(rr.out).size() == 4);
  const Result sg = run({"semigroup", "--box", "1,1,1"});
  const auto rows = lines(sg.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "0,0,0,1,1");
  CHECK(rows[7] == "1,1,1,1,1");
  const Result pl = run({"places"});
  CHECK(lines(pl.out).size() == 28);
  CHECK(lines(pl.out)[0] == "0;0,0;0,0;Q1");
  const Result code = run({"code", "--a", "0,0,0", "--eval", "3,4,5", "--dual-dmax", "2"});
  CHECK(code.out == "# n=3 k=1\n1,0;1,0;1,0\n# dual_distance=2 dependent_places=3,4\n");
}

TEST_CASE("check suite") {
  const Result r = run({"check", "--suite", "all", "--n", "100", "--seed", "1"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).back() == "PASS all");
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == cli::kUsage);
  CHECK(run({"bound"}).status == cli::kUsage);
  CHECK(run({"bound", "--a", "1,2"}).status == cli::kUsage);
  CHECK(run({"table", "--preset", "t9"}).status == cli::kUsage);
  CHECK(run({"--search-box", "3,3,3", "bound", "--a", "2,2,2"}).status == cli::kBoxTooSmall);
  CHECK(run({"code", "--a", "0,0,0", "--eval", "0"}).status == cli::kUsage);

  const std::string cfg = temp_path("mismatch.cfg");
  std::ofstream(cfg) << "field.p = 2\nfield.e = 4\ncurve.q = 3\n";
  const Result mm = run({"--config", cfg, "places"});
  CHECK(mm.status == cli::kFieldCurveMismatch);
  CHECK(mm.err.find("field/curve mismatch") != std::string::npos);

  const std::string bad = temp_path("bad.cfg");
  std::ofstream(bad) << "curve.q = 3\nflavour = mint\n";
  const Result b = run({"--config", bad, "places"});
  CHECK(b.status == cli::kUsage);
  CHECK(b.err.find("line 2") != std::string::npos);
  std::remove(cfg.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("output file") {
  const std::string path = temp_path("bound.csv");
  const Result r = run({"--out", path, "bound", "--a", "2,1,1"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "2,1,1;2,2,2;11,11,11;2;0\n");
  std::remove(path.c_str());
}
