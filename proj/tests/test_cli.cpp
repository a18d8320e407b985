// End-to-end checks of the CLI binary: exit codes and emitted files.
// The binary path arrives through the RANDERSPHERE_CLI environment variable
// set by CTest.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* p = std::getenv("RANDERSPHERE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "RANDERSPHERE_CLI must point at the CLI binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_spec(const std::string& name, const std::string& json) {
  const fs::path dir = fs::temp_directory_path() / "randersphere_cli_tests";
  fs::create_directories(dir);
  const fs::path file = dir / name;
  std::ofstream(file) << json;
  return file.string();
}

std::string out_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "randersphere_cli_tests" / name;
  fs::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("surface-info prints the essentials") {
  const std::string spec =
      write_spec("e1.json", R"({"family":"example1","lambda":1.0,"mu":0.3})");
  const RunResult r = run("surface-info --spec " + spec);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("NonDecreasing") != std::string::npos);
  CHECK(r.output.find("mu_max") != std::string::npos);

  const std::string round = write_spec("round.json", R"({"family":"round"})");
  const RunResult r2 = run("surface-info --spec " + round);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("Constant") != std::string::npos);

  const std::string e2 = write_spec("e2.json", R"({"family":"example2","lambda":0.5})");
  CHECK(run("surface-info --spec " + e2).output.find("NonDecreasing") !=
        std::string::npos);
}

TEST_CASE("invalid spec exits 2") {
  const std::string bad = write_spec("bad.json", R"({"family":"nope"})");
  CHECK(run("surface-info --spec " + bad).exit_code == 2);
  const std::string overwind =
      write_spec("overwind.json", R"({"family":"example1","lambda":3.0,"mu":0.9})");
  CHECK(run("surface-info --spec " + overwind).exit_code == 2);
  CHECK(run("surface-info --spec /nonexistent.json").exit_code == 2);
}

TEST_CASE("geodesic subcommand writes the csv") {
  const std::string spec = write_spec("round2.json", R"({"family":"round","mu":0.25})");
  const std::string dir = out_dir("geo");
  const RunResult r = run("geodesic --spec " + spec +
                          " --nu 0 --dr-sign -1 --s-max pi --r0 pi/2 --out " + dir);
  CHECK(r.exit_code == 0);
  std::ifstream csv(dir + "/geodesic.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "s,r,theta,dr_ds,dtheta_ds,clairaut_residual");
}

TEST_CASE("half-period subcommand") {
  const std::string spec =
      write_spec("e1h.json", R"({"family":"example1","lambda":1.0,"mu":0.35})");
  const std::string dir = out_dir("half");
  const RunResult r = run("half-period --spec " + spec + " --n 24 --out " + dir);
  CHECK(r.exit_code == 0);
  CHECK(std::ifstream(dir + "/half_period.csv").good());
  CHECK(std::ifstream(dir + "/half_period_d2.csv").good());
}

TEST_CASE("scan-convexity brackets the thresholds") {
  const std::string dir = out_dir("scan1");
  const RunResult r = run(
      "scan-convexity --family example1 --lambda-min 1.4 --lambda-max 1.7 --step 0.05 "
      "--resolution 256 --out " +
      dir);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("nonpositive up to lambda = 1.5") != std::string::npos);
  std::ifstream csv(dir + "/convexity_scan.csv");
  REQUIRE(csv.good());
  std::stringstream ss;
  ss << csv.rdbuf();
  CHECK(ss.str().find("1.500000") != std::string::npos);
  CHECK(ss.str().find("mixed") != std::string::npos);

  const std::string dir2 = out_dir("scan2");
  const RunResult r2 = run(
      "scan-convexity --family example2 --lambda-min 0.55 --lambda-max 0.7 --step 0.025 "
      "--resolution 256 --out " +
      dir2);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("nonpositive up to lambda = 0.6") != std::string::npos);
}

TEST_CASE("cut-locus theorem mode and hypothesis exit code") {
  const std::string spec = write_spec("roundc.json", R"({"family":"round","mu":0.25})");
  const std::string dir = out_dir("cut");
  const RunResult r =
      run("cut-locus --spec " + spec + " --point pi/3,0 --mode theorem --out " + dir);
  CHECK(r.exit_code == 0);
  std::ifstream json(dir + "/cut_locus_theorem.json");
  REQUIRE(json.good());
  std::stringstream ss;
  ss << json.rdbuf();
  CHECK(ss.str().find("single_point") != std::string::npos);

  const std::string spec2 = write_spec("e1big.json",
                                       R"({"family":"example1","lambda":2.5,"mu":0.1})");
  // lambda = 2.5 is NonMonotone but H' < 0 still holds, so the dispatch
  // falls through to the equator criterion and succeeds.
  const RunResult r2 =
      run("cut-locus --spec " + spec2 + " --point pi/3,0 --mode theorem --out " + dir);
  CHECK(r2.exit_code == 0);
}

TEST_CASE("cut-locus oracle mode emits the cut set") {
  const std::string spec = write_spec("rounde.json", R"({"family":"round","mu":0.25})");
  const std::string dir = out_dir("cut_oracle");
  const RunResult r = run("cut-locus --spec " + spec +
                          " --point pi/3,0 --mode oracle --resolution 96 --pencil 32 "
                          "--out " +
                          dir);
  CHECK(r.exit_code == 0);
  std::ifstream csv(dir + "/cut_locus_empirical.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "r,theta,nu,s_cut");
}

TEST_CASE("cut-locus both mode reports the hausdorff comparison") {
  const std::string spec = write_spec("roundb.json", R"({"family":"round","mu":0.25})");
  const std::string dir = out_dir("cut_both");
  const RunResult r = run("cut-locus --spec " + spec +
                          " --point pi/3,0 --mode both --resolution 96 --pencil 48 "
                          "--out " +
                          dir);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("hausdorff") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(std::ifstream(dir + "/cut_locus_compare.json").good());
}

TEST_CASE("verify: green run, corrupted-table failure, overwind parse rejection") {
  const std::string dir = out_dir("verify");
  const RunResult ok = run("verify --no-oracle --seed 7 --out " + dir);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("all invariants pass") != std::string::npos);
  CHECK(std::ifstream(dir + "/verify.json").good());

  // Deliberately corrupted table: passes parsing, fails the symmetry
  // invariant, exit 1.
  std::string rows;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double rr = 3.14159265358979324 * i / n;
    double m = (i == 0 || i == n) ? 0.0 : std::sin(rr);
    if (i > 220 && i < 320) m += 1e-4;
    char row[64];
    std::snprintf(row, sizeof row, "[%.12f,%.12f]%s", rr, m, i < n ? "," : "");
    rows += row;
  }
  const std::string corrupted =
      write_spec("corrupted.json", R"({"family":"custom","table":[)" + rows + R"(]})");
  const RunResult bad = run("verify --no-oracle --spec " + corrupted + " --out " +
                            out_dir("verify_bad"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("surface.equatorial_symmetry") != std::string::npos);

  // mu above mu_max is rejected at parse time: exit 2.
  const std::string overwind =
      write_spec("overwind2.json", R"({"family":"example2","lambda":0.75,"mu":0.6})");
  CHECK(run("verify --no-oracle --spec " + overwind).exit_code == 2);
}

TEST_CASE("cut-locus exits 3 when no theorem applies") {
  std::string rows;
  const int n = 1200;
  for (int i = 0; i <= n; ++i) {
    const double rr = 3.14159265358979324 * i / n;
    const double s2 = std::sin(2.0 * rr);
    double m = (i == 0 || i == n) ? 0.0 : std::sin(rr) * (1.0 + 0.04 * s2 * s2);
    char row[64];
    std::snprintf(row, sizeof row, "[%.12f,%.12f]%s", rr, m, i < n ? "," : "");
    rows += row;
  }
  const std::string spec = write_spec(
      "wobble.json", R"({"family":"custom","mu":0.2,"table":[)" + rows + R"(]})");
  const RunResult r = run("cut-locus --spec " + spec +
                          " --point pi/3,0 --mode theorem --out " + out_dir("wobble"));
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("oracle") != std::string::npos);
}
