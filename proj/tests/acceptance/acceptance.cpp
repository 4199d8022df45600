// Acceptance gate: one PASS/FAIL line per criterion. Pass criterion names
// (A1 ... A9) as arguments to run a subset; no arguments runs everything.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diagnostics/spectrum.hpp"
#include "quantum/floquet.hpp"
#include "semiclassical/bloch_map.hpp"
#include "support/properties.hpp"
#include "sweep/config.hpp"
#include "sweep/sweep.hpp"

using namespace lmgdtc;
namespace fs = std::filesystem;
namespace dg = lmgdtc::diagnostics;
namespace sc = lmgdtc::semiclassical;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr double kJ = 0.5;
constexpr std::size_t kDftCycles = 999;  // series 0..999, window [0, 1000)
constexpr dg::DftWindow kDftWindow{0, 1000};

// lz, lz1, lz2 spectra at one drive point
std::vector<dg::Spectrum> z_spectra(dg::Source src, double h1, double h2) {
  dg::LinePoint p;
  p.j_coupling = kJ;
  p.h1 = h1;
  p.h2 = h2;
  p.n_spins = 100;
  std::vector<dg::Spectrum> out;
  for (const auto& s : dg::z_series(src, p, kDftCycles)) out.push_back(dg::dft_magnitude(s, kDftWindow));
  return out;
}

Outcome a1() {
  const auto q = quantum::run_quantum_trajectory(quantum::QuantumModel::make(100, kJ, 0.5, 0.5), 1000);
  const auto s = sc::run_trajectory({}, {kJ, 0.5, 0.5, 1e-4}, 1000);
  double worst_q = 0.0, worst_sc = 0.0;
  for (std::size_t n = 0; n <= 1000; ++n) {
    const double expected = n % 2 == 0 ? 1.0 : -1.0;
    worst_q = std::max(worst_q, std::abs(q[n].lz - expected));
    worst_sc = std::max(worst_sc, std::abs(s[n].total().z() - q[n].lz));
  }
  return {worst_q <= 1e-8 && worst_sc <= 1e-8,
          "max|lz_q - (-1)^n| = " + fmt("%.2e", worst_q) + ", max|lz_sc - lz_q| = " + fmt("%.2e", worst_sc) +
              " (tol 1e-8, n <= 1000)"};
}

Outcome a2() {
  bool ok = true;
  std::string detail;
  for (const auto src : {dg::Source::Semiclassical, dg::Source::Quantum}) {
    const auto spec = z_spectra(src, 0.17, 0.5);
    const auto c1 = dg::classify_dtc(spec[1]);
    const auto c2 = dg::classify_dtc(spec[2]);
    const bool half = dg::has_peak_near(spec[0], 0.5, 0.1);
    const bool sixth = dg::has_peak_near(spec[0], 1.0 / 6.0, 0.1);
    ok = ok && c1.order == 6 && c2.order == 2 && half && sixth;
    detail += dg::source_name(src) + ": lz1 " + c1.label() + ", lz2 " + c2.label() + ", lz peaks 1/2 " +
              (half ? "yes" : "no") + " 1/6 " + (sixth ? "yes" : "no") + "; ";
  }
  return {ok, detail + "window [0,1000)"};
}

// First h2 in the list where `test` holds; the stated value is tried first.
std::optional<double> first_hit(double stated, const std::vector<double>& bracket,
                                const std::function<bool(double)>& test) {
  if (test(stated)) return stated;
  for (const double h2 : bracket)
    if (test(h2)) return h2;
  return std::nullopt;
}

std::vector<double> steps(double lo, double hi, double step) {
  std::vector<double> v;
  for (int k = 0; lo + k * step <= hi + 1e-12; ++k) v.push_back(lo + k * step);
  return v;
}

Outcome a3() {
  auto classes = [](double h2) {
    const auto spec = z_spectra(dg::Source::Semiclassical, 0.5, h2);
    return std::pair{dg::classify_dtc(spec[1]), dg::classify_dtc(spec[2])};
  };
  // The approximate upper bounds of the brackets get 10% slack; the scan
  // step is 0.005 and h2 = 0 (undriven region 2) is excluded.
  const auto chimera = first_hit(0.03, steps(0.005, 0.055, 0.005), [&](double h2) {
    const auto [c1, c2] = classes(h2);
    return c1.order == 2 && c2.period_t;
  });
  const auto ten = first_hit(0.08, steps(0.055, 0.11, 0.005), [&](double h2) { return classes(h2).second.order == 10; });
  const auto six = first_hit(0.17, steps(0.15, 0.20, 0.005), [&](double h2) { return classes(h2).second.order == 6; });
  auto show = [](const char* what, const std::optional<double>& h) {
    return std::string(what) + (h ? " at h2=" + fmt("%.3f", *h) : " not found");
  };
  return {chimera && ten && six, show("lz1 2-DTC + lz2 period-T", chimera) + "; " + show("lz2 10-DTC", ten) + "; " +
                                     show("lz2 6-DTC", six)};
}

Outcome a4() {
  bool ok = true;
  std::string detail;
  for (const double h2 : {0.05, 0.17, 0.5}) {
    for (const auto src : {dg::Source::Semiclassical, dg::Source::Quantum}) {
      const auto spec = z_spectra(src, 0.25, h2);
      const auto b1 = dg::dominant_bin(spec[1]);
      const auto b2 = dg::dominant_bin(spec[2]);
      if (src == dg::Source::Semiclassical) ok = ok && b1 == b2;
      detail += "h2=" + fmt("%g", h2) + " " + dg::source_name(src) + ": f1=" + fmt("%.3f", spec[1].freqs[b1]) +
                " f2=" + fmt("%.3f", spec[2].freqs[b2]) + "; ";
    }
  }
  return {ok, detail + "criterion on semiclassical bins"};
}

Outcome a5() {
  const auto grid = sweep::linspace(0.0, 1.0, 41);
  std::size_t regular = 0, agree = 0;
  for (const double h2 : grid) {
    const double d = sc::time_averaged_decorrelator({}, {kJ, 0.17, h2, 1e-4}, {500, 1000});
    if (d >= sweep::kStableDecorrelator) continue;
    ++regular;
    const auto s = z_spectra(dg::Source::Semiclassical, 0.17, h2);
    const auto q = z_spectra(dg::Source::Quantum, 0.17, h2);
    if (dg::dominant_bin(s[0]) == dg::dominant_bin(q[0])) ++agree;
  }
  const double frac = regular == 0 ? 0.0 : static_cast<double>(agree) / regular;
  return {regular > 0 && frac >= 0.8, std::to_string(agree) + " of " + std::to_string(regular) +
                                          " non-chaotic points agree (" + fmt("%.2f", frac) + ", need 0.80)"};
}

Outcome from_property(lmgdtc::testing::Verdict (*check)()) {
  const auto v = check();
  return {v.ok, v.ok ? "N in {4,6,8}, 5 triples each, n <= 50, tol 1e-10" : v.detail};
}

Outcome a7() {
  std::vector<double> diffs;
  const auto ref = sc::run_trajectory({}, {kJ, 0.17, 0.5, 1e-4}, 10);
  for (const int n : {64, 128, 256, 512}) {
    const auto q = quantum::run_quantum_trajectory(quantum::QuantumModel::make(n, kJ, 0.17, 0.5), 10);
    double worst = 0.0;
    for (std::size_t k = 0; k <= 10; ++k) worst = std::max(worst, std::abs(q[k].lz - ref[k].total().z()));
    diffs.push_back(worst);
  }
  bool ok = true;
  std::string detail = "max diff";
  for (const double d : diffs) detail += " " + fmt("%.4g", d);
  detail += "; ratios";
  for (std::size_t k = 1; k < diffs.size(); ++k) {
    const double r = diffs[k - 1] / diffs[k];
    ok = ok && diffs[k] < diffs[k - 1] && r >= 1.5 && r <= 3.0;
    detail += " " + fmt("%.3f", r);
  }
  return {ok, detail + " (need [1.5, 3])"};
}

std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
    i = j + 1;
  }
  return r;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / ra.size();
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / rb.size();
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    sab += (ra[k] - ma) * (rb[k] - mb);
    saa += (ra[k] - ma) * (ra[k] - ma);
    sbb += (rb[k] - mb) * (rb[k] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

std::vector<double> last_column(const std::string& path) {
  std::istringstream in(lmgdtc::testing::read_file(path));
  std::string line;
  std::vector<double> v;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    v.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  }
  return v;
}

Outcome a8() {
  const auto dir = lmgdtc::testing::make_temp_dir("a8");
  std::vector<std::vector<double>> cols;
  for (const char* mode : {"decorrelator-map", "fotoc-map"}) {
    sweep::ParamSet p;
    p.set("mode", mode);
    p.set("h1-points", "21");
    p.set("h2-points", "21");
    p.set("workers", "0");
    const auto cfg = sweep::resolve(p, sweep::Command::Sweep).config;
    const auto path = (fs::path(dir) / sweep::sweep_filename(cfg.mode)).string();
    sweep::run_sweep(cfg, path);
    cols.push_back(last_column(path));
  }
  fs::remove_all(dir);
  if (cols[0].size() != 441 || cols[1].size() != 441) return {false, "sweep produced an incomplete grid"};
  const double rho = spearman(cols[0], cols[1]);
  return {rho > 0.5, "Spearman rho(D_avg, F_avg) = " + fmt("%.3f", rho) + " on 21x21 (need > 0.5)"};
}

Outcome a9() {
  std::size_t failed = 0;
  std::string detail;
  const auto& props = lmgdtc::testing::all_properties();
  for (const auto& p : props) {
    const auto v = p.run();
    if (!v.ok) {
      ++failed;
      detail += p.name + ": " + v.detail + "; ";
    }
  }
  return {failed == 0, failed == 0 ? std::to_string(props.size()) + " property suites pass" : detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", [] { return from_property(lmgdtc::testing::oracle_equivalence); }},
      {"A7", a7}, {"A8", a8}, {"A9", a9},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected) {
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == name; })) {
      std::fprintf(stderr, "unknown criterion %s\n", name.c_str());
      return 2;
    }
  }
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s  %s [%.1f s]\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
