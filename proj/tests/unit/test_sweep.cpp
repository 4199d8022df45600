#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "error.hpp"
#include "support/properties.hpp"
#include "sweep/config.hpp"
#include "sweep/sweep.hpp"

using namespace lmgdtc;
using namespace lmgdtc::sweep;
namespace fs = std::filesystem;
using lmgdtc::testing::make_temp_dir;
using lmgdtc::testing::read_file;

TEST_SUITE("config") {

TEST_CASE("defaults") {
  const auto c = resolve({}, Command::Decorrelator).config;
  CHECK(c.j_coupling == 0.5);
  CHECK(c.n_spins == 100);
  CHECK(c.cycles == 1000);
  CHECK(c.window_start == 500);
  CHECK(c.window_end == 1000);
  CHECK(c.delta == 1e-4);
  CHECK(c.epsilon == 0.01);
  CHECK(c.workers == 1);
}

TEST_CASE("spectral commands default to the full window") {
  CHECK(resolve({}, Command::Dft).config.window_start == 0);
  ParamSet p;
  p.set("mode", "dft-line");
  const auto c = resolve(p, Command::Sweep).config;
  CHECK(c.window_start == 0);
  CHECK(c.h2_points == 201);
  p.set("mode", "uniform-scan");
  CHECK(resolve(p, Command::Sweep).config.h1_points == 201);
}

TEST_CASE("every key is accepted and unknown keys are rejected") {
  ParamSet p;
  for (const auto& k : known_keys()) CHECK_NOTHROW(p.set(std::string(k.key), "1"));
  CHECK_THROWS_AS(p.set("colour", "red"), Error);
}

TEST_CASE("config text") {
  ParamSet p;
  p.merge_text("# a comment\nj = 0.7\n\n# config: h1=0.25\nh2=0.125\n");
  const auto c = resolve(p, Command::TrajSc).config;
  CHECK(c.j_coupling == 0.7);
  CHECK(c.h1 == 0.25);
  CHECK(c.h2 == 0.125);
  CHECK_THROWS_AS(p.merge_text("j 0.7"), Error);
}

TEST_CASE("later values win when merging") {
  ParamSet base, over;
  base.set("j", "0.1");
  base.set("h1", "0.2");
  over.set("j", "0.9");
  base.merge(over);
  CHECK(base.get("j") == "0.9");
  CHECK(base.get("h1") == "0.2");
}

TEST_CASE("validation") {
  auto bad = [](std::initializer_list<std::pair<const char*, const char*>> kv, Command cmd) {
    ParamSet p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return resolve(p, cmd);
  };
  CHECK_THROWS_AS(bad({{"n-spins", "7"}}, Command::TrajQ), Error);
  CHECK_THROWS_AS(bad({{"n-spins", "0"}}, Command::Fotoc), Error);
  CHECK_NOTHROW(bad({{"n-spins", "7"}}, Command::TrajSc));
  CHECK_THROWS_AS(bad({{"cycles", "800"}}, Command::Decorrelator), Error);
  CHECK_NOTHROW(bad({{"cycles", "5"}}, Command::TrajSc));
  CHECK_THROWS_AS(bad({{"window-start", "900"}, {"window-end", "800"}}, Command::Fotoc), Error);
  CHECK_THROWS_AS(bad({{"window-start", "0"}, {"window-end", "5"}}, Command::Dft), Error);
  CHECK_THROWS_AS(bad({{"h1", "abc"}}, Command::TrajSc), Error);
  CHECK_THROWS_AS(bad({{"mode", "heatmap"}}, Command::Sweep), Error);
  CHECK_THROWS_AS(bad({{"h1-points", "0"}}, Command::Sweep), Error);
  CHECK_THROWS_AS(bad({{"observable", "lx"}}, Command::Dft), Error);
  CHECK_THROWS_AS(bad({{"perturbation", "noise"}}, Command::Decorrelator), Error);
}

TEST_CASE("out-of-range drive amplitudes only warn") {
  ParamSet p;
  p.set("h1", "1.3");
  const auto r = resolve(p, Command::TrajSc);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("h1=1.3") != std::string::npos);
}

TEST_CASE("provenance round-trips through the config parser") {
  ParamSet p;
  p.set("j", "0.123456789");
  p.set("h1", "0.1");
  p.set("mode", "fotoc-map");
  p.set("init-phi2", "2.5");
  p.set("workers", "3");
  const auto a = resolve(p, Command::Sweep).config;
  ParamSet q;
  q.merge_text(provenance_header(a));
  const auto b = resolve(q, Command::Sweep).config;
  CHECK(provenance_header(a) == provenance_header(b));
  CHECK(b.j_coupling == a.j_coupling);
  CHECK(provenance_header(a).find("workers") == std::string::npos);
}

TEST_CASE("format_param is exact") {
  for (const double v : {0.1, 1.0 / 3.0, 1e-4, 0.17, 12345.678})
    CHECK(std::stod(format_param(v)) == v);
}

}

TEST_SUITE("sweep") {

TEST_CASE("linspace includes both ends") {
  const auto g = linspace(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == 0.5);
  CHECK(linspace(0.3, 0.7, 1) == std::vector<double>{0.3});
}

TEST_CASE("grid order and columns") {
  ParamSet p;
  p.set("h1-points", "3");
  p.set("h2-points", "2");
  const auto c = resolve(p, Command::Sweep).config;
  const auto g = grid_points(c);
  REQUIRE(g.size() == 6);
  CHECK(g[1].h1 == 0.0);
  CHECK(g[1].h2 == 1.0);
  CHECK(g[2].h1 == 0.5);
  CHECK(column_names(Mode::DecorrelatorMap) == std::vector<std::string>{"h1", "h2", "D_avg"});
  CHECK(column_names(Mode::UniformScan) == std::vector<std::string>{"h", "D_avg", "F_avg"});
  CHECK(sweep_filename(Mode::FotocMap) == "sweep_fotoc-map.csv");
}

TEST_CASE("fresh run refuses to overwrite") {
  const auto dir = make_temp_dir("overwrite");
  ParamSet p;
  p.set("h1-points", "2");
  p.set("h2-points", "2");
  p.set("cycles", "20");
  p.set("window-start", "10");
  p.set("window-end", "20");
  const auto c = resolve(p, Command::Sweep).config;
  const auto path = (fs::path(dir) / "s.csv").string();
  const auto s = run_sweep(c, path);
  CHECK(s.grid_size == 4);
  CHECK(s.computed == 4);
  CHECK(s.stable_fraction.has_value());
  CHECK(read_file(path).ends_with(std::string(kCompleteMarker) + "\n"));
  CHECK_THROWS_AS(run_sweep(c, path), Error);
  fs::remove_all(dir);
}

TEST_CASE("run_command writes every command's file") {
  const auto dir = make_temp_dir("commands");
  ParamSet p;
  p.set("out", dir);
  p.set("cycles", "40");
  p.set("window-start", "0");
  p.set("window-end", "40");
  p.set("n-spins", "10");
  p.set("h1-points", "2");
  p.set("h2-points", "2");
  for (const auto cmd : {Command::TrajSc, Command::TrajQ, Command::Decorrelator, Command::Fotoc,
                         Command::Dft, Command::Sweep}) {
    const auto rep = run_command(cmd, p, false);
    REQUIRE(rep.outputs.size() == 1);
    const auto text = read_file(rep.outputs[0]);
    CHECK(text.starts_with("# lmgdtc " + command_name(cmd)));
    CHECK(text.find("# config: n-spins=10") != std::string::npos);
    CHECK_FALSE(rep.summary.empty());
  }
  std::istringstream traj(read_file((fs::path(dir) / "traj_q.csv").string()));
  std::string line;
  std::size_t data_rows = 0;
  while (std::getline(traj, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'n') ++data_rows;
  CHECK(data_rows == 41);
  fs::remove_all(dir);
}

}

TEST_SUITE("config") {

TEST_CASE("an output file can serve as a config file") {
  ParamSet p;
  p.merge_text("# lmgdtc decorrelator\n# config: j=0.7\nn,D,D1,D2\n0,0,0,0\n");
  CHECK(p.get("j") == "0.7");
}

}
