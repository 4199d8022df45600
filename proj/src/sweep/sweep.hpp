#pragma once

// Parameter sweeps over (h1, h2) grids. Grid points run on a pool of workers;
// a single writer emits each point's rows in grid order as soon as all
// earlier points are done, so an interrupted file is always a clean prefix
// of the complete one and can be resumed point by point.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sweep/config.hpp"

namespace lmgdtc::sweep {

inline constexpr double kStableDecorrelator = 1e-2;

std::vector<double> linspace(double lo, double hi, std::size_t n);

struct GridPoint {
  double h1 = 0.0;
  double h2 = 0.0;
};

/// h1 outer, h2 inner. Uniform scans use h1 == h2 along the h1 grid;
/// dft-line uses the fixed h1 with the h2 grid.
std::vector<GridPoint> grid_points(const RunConfig& cfg);

std::vector<std::string> column_names(Mode mode);
std::size_t rows_per_point(const RunConfig& cfg);

/// Data rows of one grid point, '\n'-terminated, 12 significant digits.
std::string evaluate_point(const RunConfig& cfg, const GridPoint& point);

/// Complete file header: tag line, provenance, column names.
std::string file_header(const RunConfig& cfg);
std::string sweep_filename(Mode mode);
inline constexpr const char* kCompleteMarker = "# complete";

struct SweepSummary {
  std::size_t grid_size = 0;
  std::size_t computed = 0;
  std::size_t reused = 0;
  double wall_seconds = 0.0;
  std::optional<double> stable_fraction;
  std::string fraction_label = "stable fraction";
  std::string value_name;
  double min_value = 0.0;
  double max_value = 0.0;

  std::string text() const;
};

/// Fresh run. Refuses to overwrite an existing non-empty file.
SweepSummary run_sweep(const RunConfig& cfg, const std::string& path);

/// Completes a partial file produced by the same configuration. A complete
/// file is left untouched; an empty or missing file is run from scratch.
/// Throws Mismatch when the file does not belong to this configuration.
SweepSummary resume_sweep(const RunConfig& cfg, const std::string& path);

/// Summary statistics recomputed from a finished sweep file.
SweepSummary summarize_file(const RunConfig& cfg, const std::string& path);

}  // namespace lmgdtc::sweep
