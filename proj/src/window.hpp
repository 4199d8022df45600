#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "error.hpp"

namespace lmgdtc {

/// Inclusive range of stroboscopic cycles [first, last].
struct CycleWindow {
  std::size_t first = 500;
  std::size_t last = 1000;

  std::size_t length() const noexcept { return last - first + 1; }
};

/// Arithmetic mean of series[first..last]; throws OutOfRange if the window
/// is empty or runs past the series.
inline double window_mean(std::span<const double> series, CycleWindow w) {
  if (w.last < w.first || w.last >= series.size()) {
    fail(ErrorCode::OutOfRange, "averaging window [" + std::to_string(w.first) + ", " +
                                    std::to_string(w.last) + "] outside series of length " +
                                    std::to_string(series.size()));
  }
  double sum = 0.0;
  for (std::size_t n = w.first; n <= w.last; ++n) sum += series[n];
  return sum / static_cast<double>(w.length());
}

}  // namespace lmgdtc
