// End-to-end checks of the command-line tool: flag validation, output
// formats, exit codes, determinism, and scan resumption.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef HDEPTH_CLI_PATH
#error "HDEPTH_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? std::string() : env + " ") + std::string(HDEPTH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& suffix) {
  return std::string(std::tmpnam(nullptr)) + suffix;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("hdepth subcommand emits the result document") {
  const auto r = run_cli("hdepth --family path --n 10 --module quotient --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 4);
  CHECK(j["d_start"] == 5);
  CHECK(j["feasible_row"].is_array());
  for (const auto& v : j["feasible_row"]) CHECK(v.is_string());
  for (const auto& rej : j["rejections"]) {
    CHECK(rej["beta"].is_string());
    CHECK(rej["d"].is_number_integer());
  }
}

TEST_CASE("relative module pairs the cycle with its path") {
  const auto r = run_cli("hdepth --family cycle --n 10 --module relative");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == 4);  // 2 + hdepth(S/I_6)

  CHECK(run_cli("hdepth --family path --n 10 --module relative").exit_code == 2);
}

TEST_CASE("alpha values are decimal strings in json") {
  const auto r = run_cli("alpha --family path --n 70 --module quotient");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 70);
  REQUIRE(j["alpha"].is_array());
  CHECK(j["alpha"].size() == 71);
  for (const auto& v : j["alpha"]) CHECK(v.is_string());
}

TEST_CASE("alpha csv rows") {
  const auto r = run_cli("alpha --family path --n 4 --module quotient --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "n,module,j,alpha_j\n4,quotient,0,1\n4,quotient,1,4\n4,quotient,2,3\n4,quotient,3,0\n4,quotient,4,0\n");
}

TEST_CASE("beta csv for a single parameter") {
  const auto r = run_cli("beta --family path --n 4 --module quotient --d 2 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "d,k,beta\n2,0,1\n2,1,2\n2,2,0\n");
}

TEST_CASE("bounds subcommand") {
  const auto r = run_cli("bounds --family star --n 4");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["exact"] == 3);
  CHECK(j[0]["source"].is_string());
}

TEST_CASE("verify exits 0 on pass and 1 on violation") {
  const auto pass = run_cli("verify --conjecture c1 --range 2:60");
  CHECK(pass.exit_code == 0);
  CHECK(nlohmann::json::parse(pass.out)["pass"] == true);

  // The published small-n equality fails at n = 9; the report carries the
  // counterexample and the process signals it.
  const auto fail = run_cli("verify --conjecture obsy --range 2:50");
  CHECK(fail.exit_code == 1);
  const auto j = nlohmann::json::parse(fail.out);
  CHECK(j["pass"] == false);
  REQUIRE(j["counterexamples"].size() == 1);
  CHECK(j["counterexamples"][0]["instance"] == "n=9");
}

TEST_CASE("verify in csv mode emits per-n rows") {
  const auto r = run_cli("verify --conjecture c1 --range 2:40 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("n,hdepth_I,hdepth_SI,", 0) == 0);
  CHECK(r.out.find("\n2,2,1,") != std::string::npos);
}

TEST_CASE("verify c3 reports exact fractions") {
  const auto r = run_cli("verify --conjecture c3 --range 3:120");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["frequencies"]["quotient_eq"]["denominator"] == 118);
  CHECK(j["frequencies"]["ideal_eq"]["fraction"].is_string());
}

TEST_CASE("oracle-check compares engines") {
  const auto r = run_cli("oracle-check --family double_broom --n1 2 --n 3 --n2 2 --module ideal");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["engines"].size() >= 2);
}

TEST_CASE("engine override") {
  const auto closed = run_cli("alpha --family path --n 12 --module quotient --engine closed");
  const auto tree = run_cli("alpha --family path --n 12 --module quotient --engine tree");
  const auto brute = run_cli("alpha --family path --n 12 --module quotient --engine brute");
  REQUIRE(closed.exit_code == 0);
  CHECK(closed.out == tree.out);
  CHECK(closed.out == brute.out);
  // no closed form for brooms
  CHECK(run_cli("alpha --family double_broom --n1 2 --n 3 --n2 2 --engine closed").exit_code == 2);
  // the row-cache cap only affects memory, never values
  const auto capped = run_cli("alpha --family path --n 12 --module quotient --engine closed", "HDEPTH_CACHE_ROWS=2");
  CHECK(capped.out == closed.out);
}

TEST_CASE("capacity and usage errors exit 2") {
  // 30-vertex cycle: no closed family form, not a tree, past the 2^n cap.
  const std::string path = temp_path("_cyc30.json");
  {
    std::ofstream f(path);
    f << "{\"n\":30,\"edges\":[";
    for (int i = 0; i < 30; ++i) f << (i ? "," : "") << "[" << i << "," << (i + 1) % 30 << "]";
    f << "]}";
  }
  CHECK(run_cli("alpha --graph " + path + " --module quotient").exit_code == 2);
  std::remove(path.c_str());

  CHECK(run_cli("alpha --family path --n 4 --graph nowhere.json").exit_code == 2);  // two sources
  CHECK(run_cli("alpha --module quotient").exit_code == 2);                         // no source
  CHECK(run_cli("alpha --family heptagram --n 7").exit_code == 2);
  CHECK(run_cli("alpha --family path --n 1").exit_code == 2);
  CHECK(run_cli("alpha --graph /does/not/exist.json").exit_code == 2);
  CHECK(run_cli("scan --range 5:3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("identical argv produces byte-identical stdout") {
  const std::string cmd = "scan --range 3:12 --format csv --workers 3";
  CHECK(run_cli(cmd).out == run_cli(cmd).out);
  const std::string cmd2 = "verify --conjecture c2 --range 3:40 --workers 2";
  CHECK(run_cli(cmd2).out == run_cli(cmd2).out);
  // worker count affects wall time only
  CHECK(run_cli("scan --range 3:12 --format csv --workers 1").out ==
        run_cli("scan --range 3:12 --format csv --workers 4").out);
}

TEST_CASE("scan csv, flushing, and resume") {
  const std::string fresh = temp_path("_scan_fresh.csv");
  const std::string resumed = temp_path("_scan_resume.csv");

  REQUIRE(run_cli("scan --range 3:14 --format csv --out " + fresh).exit_code == 0);
  REQUIRE(run_cli("scan --range 3:8 --format csv --out " + resumed).exit_code == 0);
  REQUIRE(run_cli("scan --range 3:14 --format csv --resume --out " + resumed).exit_code == 0);
  CHECK(slurp(fresh) == slurp(resumed));

  // Resuming a fully covered range is a no-op.
  REQUIRE(run_cli("scan --range 3:14 --format csv --resume --out " + resumed).exit_code == 0);
  CHECK(slurp(fresh) == slurp(resumed));

  const std::string header = slurp(fresh).substr(0, slurp(fresh).find('\n'));
  CHECK(header == "n,hdepth_I,hdepth_SI,hdepth_J,hdepth_SJ,delta1,delta2,conj1_ok,conj2a_ok,conj2b_ok,conj2c_ok");

  std::remove(fresh.c_str());
  std::remove(resumed.c_str());
}

TEST_CASE("scan json mode") {
  const auto r = run_cli("scan --range 9:10");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["n"] == 9);
  CHECK(j[0]["hdepth_SI"] == 4);
  CHECK(j[1]["hdepth_SI"] == 4);
  CHECK(j[1]["hdepth_I"] == 7);
}
