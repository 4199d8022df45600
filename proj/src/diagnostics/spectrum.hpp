#pragma once

// DFT magnitudes of stroboscopic series and subharmonic (p-DTC) labelling.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semiclassical/bloch_map.hpp"

namespace lmgdtc::diagnostics {

/// Half-open cycle range [begin, end) fed to the DFT.
struct DftWindow {
  std::size_t begin = 0;
  std::size_t end = 1000;
  std::size_t length() const noexcept { return end - begin; }
};

struct Spectrum {
  std::vector<double> freqs;  // k / L in units of the drive frequency
  std::vector<double> mags;   // |X_k| / M, M = window length
  DftWindow window;

  std::size_t size() const noexcept { return mags.size(); }
};

/// Rectangular-window DFT magnitudes. pad_to > window length zero-pads the
/// window to pad_to samples; 0 means no padding. Requires M >= 8.
Spectrum dft_magnitude(std::span<const double> series, DftWindow window, std::size_t pad_to = 0);

struct ClassifyOptions {
  int max_order = 12;
  double dominance = 0.5;
  /// Period-T when nonzero-frequency weight < this fraction of the f=0 weight.
  double period_t_fraction = 1e-3;
};

struct DtcClassification {
  int order = 0;          // p of a p-DTC, 0 when none
  bool period_t = false;  // Floquet-synchronized response
  double peak_freq = 0.0;
  double peak_ratio = 0.0;

  bool has_order() const noexcept { return order > 0; }
  std::string label() const;
};

/// Spectral weight is the squared magnitude. The dominant peak is searched in
/// 0 < f <= 1/2 and its weight includes the mirror bin at 1 - f.
DtcClassification classify_dtc(const Spectrum& spec, const ClassifyOptions& opts = {});

/// Bin index of the largest magnitude in 0 < f <= 1/2.
std::size_t dominant_bin(const Spectrum& spec);

/// True when a local maximum of the magnitude lies within one bin of freq and
/// is at least `prominence` times the largest nonzero-frequency magnitude.
bool has_peak_near(const Spectrum& spec, double freq, double prominence);

enum class Observable { Lz, Lz1, Lz2 };
enum class Source { Semiclassical, Quantum };

Observable parse_observable(const std::string& name);
std::string observable_name(Observable obs);
Source parse_source(const std::string& name);
std::string source_name(Source src);

struct LinePoint {
  double j_coupling = 0.5;
  double h1 = 0.0;
  double h2 = 0.0;
  int n_spins = 100;  // quantum source only
  semiclassical::InitialAngles init;
};

/// Stroboscopic series of one observable for cycles 0..n_cycles.
std::vector<double> observable_series(Source source, const LinePoint& point, Observable obs,
                                      std::size_t n_cycles);

/// All three z-observables from a single run, ordered lz, lz1, lz2.
std::vector<std::vector<double>> z_series(Source source, const LinePoint& point,
                                          std::size_t n_cycles);

/// One spectrum per h2 value at fixed h1 (taken from `base`).
std::vector<Spectrum> dft_density_line(const LinePoint& base, std::span<const double> h2_grid,
                                       Source source, Observable obs, DftWindow window,
                                       std::size_t pad_to = 0);

}  // namespace lmgdtc::diagnostics
