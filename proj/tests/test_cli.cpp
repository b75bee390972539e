#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "thermal_jcm/cli.hpp"
#include "thermal_jcm/io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "thermal_jcm_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(std::vector<std::string> args) { return tjcm::cli::run(args); }

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run({}) == 1);
  CHECK(run({"inversion", "--no-such-flag"}) == 1);
  CHECK(run({"frobnicate"}) == 1);
  // inconsistent thermal spec
  const auto out = (scratch_dir() / "x.csv").string();
  CHECK(run({"inversion", "--beta", "1", "--theta", "0.1", "-o", out}) == 1);
  // reproduce needs exactly one target
  CHECK(run({"reproduce", "-o", out}) == 1);
  CHECK(run({"reproduce", "--figure", "1", "--table", "1", "-o", out}) == 1);
  CHECK(run({"verify", "--id", "no_such_identity"}) == 1);
}

TEST_CASE("guard failures exit with code 2") {
  // alpha too large for the requested oracle truncation
  CHECK(run({"oracle-compare", "--alpha", "2", "--omega0", "2", "--omega", "4", "--theta",
             "0.05", "--dim", "8", "--t", "1.0"}) == 2);
}

TEST_CASE("inversion writes CSV, sidecar and SVG deterministically") {
  const auto csv1 = (scratch_dir() / "inv1.csv").string();
  const auto csv2 = (scratch_dir() / "inv2.csv").string();
  const auto svg = (scratch_dir() / "inv1.svg").string();
  const std::vector<std::string> base{"inversion", "--omega0", "2",     "--omega", "4",
                                      "--kappa",   "1",        "--alpha", "4",     "--theta",
                                      "0.098",     "--t0",     "0",     "--t1",    "3.0",
                                      "--steps",   "61"};
  auto args1 = base;
  args1.insert(args1.end(), {"-o", csv1, "--svg", svg});
  auto args2 = base;
  args2.insert(args2.end(), {"-o", csv2});
  REQUIRE(run(args1) == 0);
  REQUIRE(run(args2) == 0);

  const std::string body1 = slurp(csv1);
  CHECK(body1 == slurp(csv2));  // byte-identical
  CHECK(body1.rfind("t,sigma_z,w0_1,w1_1,w2_1,w3_1,w0_2,w1_2,w2_2,w3_2\n", 0) == 0);
  CHECK(body1.find("nan") == std::string::npos);
  CHECK(body1.find("inf") == std::string::npos);
  // 61 samples + header
  CHECK(std::count(body1.begin(), body1.end(), '\n') == 62);

  const std::string meta = slurp(scratch_dir() / "inv1.json");
  CHECK(meta.find("\"version\"") != std::string::npos);
  CHECK(meta.find("\"subcommand\": \"inversion\"") != std::string::npos);

  const std::string svg_body = slurp(svg);
  CHECK(svg_body.rfind("<svg", 0) == 0);
}

TEST_CASE("period on a flat trace is a domain error") {
  const auto out = (scratch_dir() / "flat.csv").string();
  CHECK(run({"period", "--alpha", "0", "--omega0", "2", "--omega", "4", "--window-lo", "1",
             "--window-hi", "2", "--dt", "0.01", "-o", out}) == 1);
}

TEST_CASE("gap subcommand prints without an output file") {
  CHECK(run({"gap", "--kappa-value", "0", "--omega0", "1", "--omega", "1"}) == 0);
}

TEST_CASE("verify single identity") {
  CHECK(run({"verify", "--id", "comm_A_B", "--dim", "12"}) == 0);
}

TEST_CASE("reproduce figure 1 regenerates the canonical cold trace") {
  const auto out = (scratch_dir() / "fig1.csv").string();
  REQUIRE(run({"reproduce", "--figure", "1", "-o", out}) == 0);
  const std::string body = slurp(out);
  CHECK(body.rfind("t,sigma_z,", 0) == 0);
  CHECK(std::count(body.begin(), body.end(), '\n') == 10002);
  // first sample: sigma_z(0) = -1 at zero temperature
  CHECK(body.find("\n0,-1,") != std::string::npos);
}

TEST_CASE("reproduce table 1 has six labelled rows") {
  const auto out = (scratch_dir() / "table1.csv").string();
  REQUIRE(run({"reproduce", "--table", "1", "-o", out}) == 0);
  const std::string body = slurp(out);
  CHECK(body.rfind("label,min,max\n", 0) == 0);
  CHECK(std::count(body.begin(), body.end(), '\n') == 7);
  CHECK(body.find("theta*P1_g1") != std::string::npos);
  CHECK(body.find("theta^3/6*P3_g2") != std::string::npos);
}

TEST_CASE("short-time subcommand emits the quadratic law") {
  const auto out = (scratch_dir() / "st.csv").string();
  REQUIRE(run({"short-time", "--nbar", "4", "--phi", "0", "--kappa", "1", "--t0", "0", "--t1",
               "0.1", "--steps", "11", "-o", out}) == 0);
  const std::string body = slurp(out);
  CHECK(body.rfind("t,sigma_z\n", 0) == 0);
  CHECK(std::count(body.begin(), body.end(), '\n') == 12);
}

TEST_CASE("non-finite values never reach disk") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(tjcm::csv_to_string({"a"}, {{"", {nan}}}), tjcm::GuardError);
  CHECK_THROWS_AS(tjcm::csv_to_string({"a"}, {{"", {inf}}}), tjcm::GuardError);
  CHECK(tjcm::csv_to_string({"a", "b"}, {{"", {1.0, -2.5}}}) == "a,b\n1,-2.5\n");
}

TEST_CASE("sidecar path swaps the extension") {
  CHECK(tjcm::sidecar_path("out/run.csv") == "out/run.json");
  CHECK(tjcm::sidecar_path("plain") == "plain.json");
  CHECK(tjcm::sidecar_path("a.b/plain") == "a.b/plain.json");
}

TEST_CASE("config file values are read and flags override them") {
  const auto cfg = scratch_dir() / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "[gap]\n"
        << "kappa-value=0\n"
        << "omega0=1\n"
        << "omega=1\n";
  }
  CHECK(run({"--config", cfg.string(), "gap"}) == 0);
  // flag wins over the file value; kappa-value=0 in the file, 2 on the line
  const auto out = (scratch_dir() / "gap_override.csv").string();
  REQUIRE(run({"--config", cfg.string(), "gap", "--kappa-value", "2", "-o", out}) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("\n2,") != std::string::npos);
}
