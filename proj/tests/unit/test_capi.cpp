#include <doctest.h>

#include <lmgdtc/lmgdtc.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::vector<double> column(const lmgdtc_table* t, const char* name) {
  for (size_t c = 0; c < lmgdtc_table_cols(t); ++c) {
    if (std::string(lmgdtc_table_column_name(t, c)) == name) {
      const double* data = nullptr;
      REQUIRE(lmgdtc_table_column(t, c, &data) == LMGDTC_OK);
      return {data, data + lmgdtc_table_rows(t)};
    }
  }
  FAIL("missing column " << name);
  return {};
}

fs::path temp_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("lmgdtc_capi_" + tag + std::to_string(std::rand()));
  fs::create_directories(dir);
  return dir;
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LMGDTC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and version") {
  CHECK(std::string(lmgdtc_version()).size() > 0);
  CHECK(std::string(lmgdtc_status_name(LMGDTC_OK)) == "ok");
  CHECK(std::string(lmgdtc_status_name(LMGDTC_ERR_INVALID_ARGUMENT)) == "invalid argument");
}

TEST_CASE("semiclassical trajectory table") {
  lmgdtc_drive d;
  lmgdtc_drive_defaults(&d);
  CHECK(d.j_coupling == 0.5);
  d.h1 = d.h2 = 0.5;
  lmgdtc_table* t = nullptr;
  REQUIRE(lmgdtc_sc_trajectory(&d, 10, &t) == LMGDTC_OK);
  CHECK(lmgdtc_table_rows(t) == 11);
  const auto lz = column(t, "lz");
  CHECK(lz[3] == doctest::Approx(-1.0));
  const double* data = nullptr;
  CHECK(lmgdtc_table_column(t, 99, &data) == LMGDTC_ERR_OUT_OF_RANGE);
  lmgdtc_table_destroy(t);
}

TEST_CASE("decorrelator table") {
  lmgdtc_drive d;
  lmgdtc_drive_defaults(&d);
  d.h1 = 0.3;
  d.h2 = 0.7;
  lmgdtc_table* t = nullptr;
  REQUIRE(lmgdtc_sc_decorrelator(&d, 100, 0, &t) == LMGDTC_OK);
  CHECK(column(t, "D")[0] == 0.0);
  lmgdtc_table_destroy(t);
  REQUIRE(lmgdtc_sc_decorrelator(&d, 100, 1, &t) == LMGDTC_OK);
  CHECK(column(t, "D")[0] > 0.0);
  lmgdtc_table_destroy(t);
}

TEST_CASE("quantum model handle") {
  lmgdtc_quantum_model* m = nullptr;
  CHECK(lmgdtc_quantum_model_create(7, 0.5, 0.1, 0.1, &m) == LMGDTC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lmgdtc_last_error()).find("even") != std::string::npos);
  REQUIRE(lmgdtc_quantum_model_create(20, 0.5, 0.5, 0.5, &m) == LMGDTC_OK);
  CHECK(lmgdtc_quantum_model_dim(m) == 121);
  lmgdtc_table* t = nullptr;
  REQUIRE(lmgdtc_quantum_trajectory(m, nullptr, 5, &t) == LMGDTC_OK);
  CHECK(column(t, "lz")[5] == doctest::Approx(-1.0));
  lmgdtc_table_destroy(t);
  REQUIRE(lmgdtc_quantum_fotoc(m, nullptr, 0.01, 5, &t) == LMGDTC_OK);
  CHECK(column(t, "F")[0] == doctest::Approx(0.0));
  lmgdtc_table_destroy(t);
  lmgdtc_quantum_model_destroy(m);
}

TEST_CASE("dft and classify") {
  std::vector<double> x(600);
  for (size_t n = 0; n < x.size(); ++n) x[n] = std::cos(2.0 * M_PI * n / 3.0);
  lmgdtc_dtc_class c{};
  REQUIRE(lmgdtc_classify(x.data(), x.size(), 0, 600, 12, 0.5, &c) == LMGDTC_OK);
  CHECK(c.order == 3);
  CHECK(c.period_t == 0);
  lmgdtc_table* t = nullptr;
  REQUIRE(lmgdtc_dft(x.data(), x.size(), 0, 600, 0, &t) == LMGDTC_OK);
  CHECK(lmgdtc_table_rows(t) == 600);
  lmgdtc_table_destroy(t);
  CHECK(lmgdtc_classify(x.data(), x.size(), 0, 4, 12, 0.5, &c) != LMGDTC_OK);
}

TEST_CASE("null arguments are rejected") {
  CHECK(lmgdtc_sc_trajectory(nullptr, 5, nullptr) == LMGDTC_ERR_INVALID_ARGUMENT);
  CHECK(lmgdtc_config_set(nullptr, "j", "1") == LMGDTC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config keys and run") {
  CHECK(lmgdtc_key_count() >= 25);
  bool seen_workers = false;
  for (size_t i = 0; i < lmgdtc_key_count(); ++i)
    seen_workers |= std::string(lmgdtc_key_name(i)) == "workers";
  CHECK(seen_workers);
  CHECK(lmgdtc_key_name(10000) == nullptr);

  const auto dir = temp_dir("run");
  lmgdtc_config* cfg = nullptr;
  REQUIRE(lmgdtc_config_create(&cfg) == LMGDTC_OK);
  CHECK(lmgdtc_config_set(cfg, "bogus", "1") == LMGDTC_ERR_INVALID_ARGUMENT);
  REQUIRE(lmgdtc_config_set(cfg, "out", dir.c_str()) == LMGDTC_OK);
  REQUIRE(lmgdtc_config_set(cfg, "h1", "1.5") == LMGDTC_OK);
  REQUIRE(lmgdtc_config_set(cfg, "cycles", "8") == LMGDTC_OK);
  lmgdtc_report* rep = nullptr;
  CHECK(lmgdtc_run(cfg, "nope", 0, &rep) == LMGDTC_ERR_INVALID_ARGUMENT);
  REQUIRE(lmgdtc_run(cfg, "traj-sc", 0, &rep) == LMGDTC_OK);
  CHECK(lmgdtc_report_output_count(rep) == 1);
  CHECK(fs::exists(lmgdtc_report_output(rep, 0)));
  CHECK(lmgdtc_report_warning_count(rep) == 1);
  lmgdtc_report_destroy(rep);
  lmgdtc_config_destroy(cfg);
  fs::remove_all(dir);
}

}

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly") {
  const auto r = run_cli("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
  const auto s = run_cli("sweep --help");
  CHECK(s.status == 0);
  CHECK(s.out.find("--resume") != std::string::npos);
  CHECK(s.out.find("--h2-points") != std::string::npos);
}

TEST_CASE("invalid input gives a one-line error and nonzero exit") {
  const auto r = run_cli("traj-q --n-spins 7 --out " + temp_dir("odd").string());
  CHECK(r.status != 0);
  CHECK(r.out.rfind("lmgdtc: error:", 0) == 0);
  CHECK(r.out.find('\n') == r.out.size() - 1);
  CHECK(run_cli("traj-sc --no-such-flag 1").status != 0);
  CHECK(run_cli("").status != 0);
}

TEST_CASE("trajectory output alternates at the 2-DTC point") {
  const auto dir = temp_dir("traj");
  const auto r = run_cli("traj-sc --h1 0.5 --h2 0.5 --cycles 4 --out " + dir.string());
  REQUIRE(r.status == 0);
  std::ifstream in(dir / "traj_sc.csv");
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "n,l1x,l1y,l1z,l2x,l2y,l2z,lx,ly,lz");
  CHECK(rows[2].ends_with(",-1"));
  CHECK(rows[3].ends_with(",1"));
  fs::remove_all(dir);
}

TEST_CASE("a file's header reproduces its run through --config") {
  const auto dir = temp_dir("roundtrip");
  const auto a = dir / "a";
  const auto b = dir / "b";
  REQUIRE(run_cli("decorrelator --h1 0.3 --h2 0.41 --j 0.7 --cycles 600 --window-end 600 --out " + a.string()).status == 0);
  REQUIRE(run_cli("decorrelator --config " + (a / "decorrelator.csv").string() + " --out " + b.string())
              .status == 0);
  std::ifstream fa(a / "decorrelator.csv"), fb(b / "decorrelator.csv");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  // flags override the file
  REQUIRE(run_cli("decorrelator --config " + (a / "decorrelator.csv").string() + " --h1 0.2 --out " +
                  b.string() + "/c").status == 0);
  std::ifstream fc(b / "c" / "decorrelator.csv");
  std::stringstream sc;
  sc << fc.rdbuf();
  CHECK(sc.str().find("# config: h1=0.2\n") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("sweep resume through the CLI") {
  const auto dir = temp_dir("resume");
  const std::string args = "sweep --mode decorrelator-map --h1-points 3 --h2-points 3 --cycles 100 "
                           "--window-start 50 --window-end 100 --out " + dir.string();
  REQUIRE(run_cli(args).status == 0);
  CHECK(run_cli(args).status != 0);
  const auto r = run_cli(args + " --resume");
  CHECK(r.status == 0);
  CHECK(r.out.find("stable fraction") != std::string::npos);
  fs::remove_all(dir);
}

}
