#include "diagnostics/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "error.hpp"
#include "quantum/floquet.hpp"

namespace lmgdtc::diagnostics {

Spectrum dft_magnitude(std::span<const double> series, DftWindow window, std::size_t pad_to) {
  if (window.end > series.size() || window.end < window.begin) {
    fail(ErrorCode::OutOfRange, "DFT window [" + std::to_string(window.begin) + ", " +
                                    std::to_string(window.end) + ") outside series of length " +
                                    std::to_string(series.size()));
  }
  const std::size_t m = window.length();
  if (m < 8) fail(ErrorCode::InvalidArgument, "DFT window must hold at least 8 cycles");
  const std::size_t len = pad_to > m ? pad_to : m;

  std::vector<std::complex<double>> twiddle(len);
  for (std::size_t t = 0; t < len; ++t)
    twiddle[t] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(t) / len);

  Spectrum out;
  out.window = window;
  out.freqs.resize(len);
  out.mags.resize(len);
  const auto x = series.subspan(window.begin, m);
  for (std::size_t k = 0; k < len; ++k) {
    std::complex<double> acc = 0.0;
    std::size_t idx = 0;  // (k * n) mod len, kept exact in integers
    for (std::size_t n = 0; n < m; ++n) {
      acc += x[n] * twiddle[idx];
      idx += k;
      if (idx >= len) idx %= len;
    }
    out.freqs[k] = static_cast<double>(k) / len;
    out.mags[k] = std::abs(acc) / static_cast<double>(m);
  }
  return out;
}

std::size_t dominant_bin(const Spectrum& spec) {
  const std::size_t half = spec.size() / 2;
  std::size_t best = 1;
  for (std::size_t k = 2; k <= half; ++k)
    if (spec.mags[k] > spec.mags[best]) best = k;
  return best;
}

std::string DtcClassification::label() const {
  if (order > 0) return std::to_string(order);
  return period_t ? "period-T" : "none";
}

DtcClassification classify_dtc(const Spectrum& spec, const ClassifyOptions& opts) {
  if (opts.max_order < 2) fail(ErrorCode::InvalidArgument, "max_order must be >= 2");
  if (!(opts.dominance > 0.0 && opts.dominance < 1.0)) {
    fail(ErrorCode::InvalidArgument, "dominance must lie in (0, 1)");
  }
  const std::size_t len = spec.size();
  if (len < 2) fail(ErrorCode::InvalidArgument, "spectrum too short");

  const double zero_weight = spec.mags[0] * spec.mags[0];
  double nonzero_weight = 0.0;
  for (std::size_t k = 1; k < len; ++k) nonzero_weight += spec.mags[k] * spec.mags[k];

  DtcClassification out;
  if (nonzero_weight <= 0.0) {
    out.period_t = zero_weight > 0.0;
    return out;
  }
  const std::size_t k = dominant_bin(spec);
  const std::size_t mirror = len - k;
  double peak_weight = spec.mags[k] * spec.mags[k];
  if (mirror != k) peak_weight += spec.mags[mirror] * spec.mags[mirror];
  out.peak_freq = spec.freqs[k];
  out.peak_ratio = peak_weight / nonzero_weight;

  if (nonzero_weight < opts.period_t_fraction * zero_weight) {
    out.period_t = true;
    return out;
  }
  if (out.peak_ratio < opts.dominance) return out;

  const double bin = 1.0 / static_cast<double>(len);
  double best_gap = bin * (1.0 + 1e-9);
  for (int p = 2; p <= opts.max_order; ++p) {
    const double gap = std::abs(out.peak_freq - 1.0 / p);
    if (gap <= best_gap) {
      best_gap = gap;
      out.order = p;
    }
  }
  return out;
}

bool has_peak_near(const Spectrum& spec, double freq, double prominence) {
  const std::size_t len = spec.size();
  const std::size_t half = len / 2;
  if (len < 4) return false;
  const double target = freq * len;
  const auto lo = static_cast<std::size_t>(std::max(1.0, std::floor(target - 1.0)));
  const auto hi = static_cast<std::size_t>(std::min<double>(half, std::ceil(target + 1.0)));
  const double global = spec.mags[dominant_bin(spec)];
  for (std::size_t k = lo; k <= hi; ++k) {
    if (std::abs(static_cast<double>(k) - target) > 1.0 + 1e-9) continue;
    const double m = spec.mags[k];
    const double left = spec.mags[k - 1];
    const double right = spec.mags[(k + 1) % len];
    if (m >= left && m >= right && m >= prominence * global && m > 0.0) return true;
  }
  return false;
}

Observable parse_observable(const std::string& name) {
  if (name == "lz") return Observable::Lz;
  if (name == "lz1") return Observable::Lz1;
  if (name == "lz2") return Observable::Lz2;
  fail(ErrorCode::InvalidArgument, "unknown observable '" + name + "' (expected lz, lz1 or lz2)");
}

std::string observable_name(Observable obs) {
  switch (obs) {
    case Observable::Lz: return "lz";
    case Observable::Lz1: return "lz1";
    case Observable::Lz2: return "lz2";
  }
  return "lz";
}

Source parse_source(const std::string& name) {
  if (name == "sc" || name == "semiclassical") return Source::Semiclassical;
  if (name == "quantum" || name == "q") return Source::Quantum;
  fail(ErrorCode::InvalidArgument, "unknown source '" + name + "' (expected sc or quantum)");
}

std::string source_name(Source src) {
  return src == Source::Semiclassical ? "sc" : "quantum";
}

std::vector<std::vector<double>> z_series(Source source, const LinePoint& p, std::size_t n_cycles) {
  std::vector<std::vector<double>> out(3);
  for (auto& s : out) s.reserve(n_cycles + 1);
  if (source == Source::Semiclassical) {
    const semiclassical::DriveParams params{p.j_coupling, p.h1, p.h2, 0.0};
    const auto traj =
        semiclassical::run_trajectory(semiclassical::bloch_from_angles(p.init), params, n_cycles);
    for (const auto& s : traj) {
      out[0].push_back(s.total().z());
      out[1].push_back(s.l1.z());
      out[2].push_back(s.l2.z());
    }
  } else {
    const auto model = quantum::QuantumModel::make(p.n_spins, p.j_coupling, p.h1, p.h2);
    for (const auto& e : quantum::run_quantum_trajectory(model, n_cycles, p.init)) {
      out[0].push_back(e.lz);
      out[1].push_back(e.lz1);
      out[2].push_back(e.lz2);
    }
  }
  return out;
}

std::vector<double> observable_series(Source source, const LinePoint& point, Observable obs,
                                      std::size_t n_cycles) {
  auto all = z_series(source, point, n_cycles);
  return std::move(all[static_cast<std::size_t>(obs)]);
}

std::vector<Spectrum> dft_density_line(const LinePoint& base, std::span<const double> h2_grid,
                                       Source source, Observable obs, DftWindow window,
                                       std::size_t pad_to) {
  for (std::size_t i = 1; i < h2_grid.size(); ++i) {
    if (!(h2_grid[i] > h2_grid[i - 1])) fail(ErrorCode::InvalidArgument, "h2 grid must be increasing");
  }
  if (window.end == 0) fail(ErrorCode::InvalidArgument, "empty DFT window");
  std::vector<Spectrum> out;
  out.reserve(h2_grid.size());
  for (const double h2 : h2_grid) {
    LinePoint p = base;
    p.h2 = h2;
    const auto series = observable_series(source, p, obs, window.end - 1);
    out.push_back(dft_magnitude(series, window, pad_to));
  }
  return out;
}

}  // namespace lmgdtc::diagnostics
