#include "sweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "diagnostics/spectrum.hpp"
#include "error.hpp"
#include "quantum/floquet.hpp"
#include "semiclassical/bloch_map.hpp"

namespace lmgdtc::sweep {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double decorrelator_at(const RunConfig& cfg, double h1, double h2) {
  return semiclassical::time_averaged_decorrelator(semiclassical::bloch_from_angles(cfg.init),
                                                   cfg.drive(h1, h2), cfg.average_window(),
                                                   cfg.perturbation);
}

double fotoc_at(const RunConfig& cfg, double h1, double h2) {
  const auto model = quantum::QuantumModel::make(cfg.n_spins, cfg.j_coupling, h1, h2);
  return quantum::time_averaged_fotoc(model, cfg.epsilon, cfg.average_window(), cfg.init);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Leading key fields each row of a point must carry.
std::vector<std::vector<std::string>> expected_keys(const RunConfig& cfg, const GridPoint& p) {
  std::vector<std::vector<std::string>> keys;
  switch (cfg.mode) {
    case Mode::UniformScan: keys.push_back({num(p.h1)}); break;
    case Mode::DecorrelatorMap:
    case Mode::FotocMap: keys.push_back({num(p.h1), num(p.h2)}); break;
    case Mode::DftLine: {
      const std::size_t m = cfg.dft_window().length();
      for (const auto obs : cfg.observables())
        for (std::size_t k = 0; k < m; ++k)
          keys.push_back({num(p.h1), num(p.h2), diagnostics::observable_name(obs),
                          num(static_cast<double>(k) / m)});
      break;
    }
  }
  return keys;
}

struct ExistingFile {
  std::size_t complete_points = 0;
  std::size_t keep_bytes = 0;  // header + complete points
  bool finished = false;
};

ExistingFile inspect(const RunConfig& cfg, const std::string& content,
                     const std::vector<GridPoint>& points) {
  ExistingFile ex;
  const std::string header = file_header(cfg);
  if (content.size() < header.size()) {
    if (header.compare(0, content.size(), content) != 0) {
      fail(ErrorCode::Mismatch, "existing file header does not match this configuration");
    }
    return ex;  // torn header: start over
  }
  if (content.compare(0, header.size(), header) != 0) {
    fail(ErrorCode::Mismatch, "existing file header does not match this configuration");
  }
  const std::size_t ncols = column_names(cfg.mode).size();
  std::size_t pos = header.size();
  ex.keep_bytes = pos;
  std::size_t point = 0;
  std::vector<std::vector<std::string>> keys;
  std::size_t row_in_point = 0;
  while (pos < content.size()) {
    const auto nl = content.find('\n', pos);
    if (nl == std::string::npos) break;  // torn last line
    const std::string line = content.substr(pos, nl - pos);
    pos = nl + 1;
    if (line == kCompleteMarker) {
      if (point != points.size() || pos != content.size()) {
        fail(ErrorCode::Mismatch, "completion marker in an inconsistent position");
      }
      ex.finished = true;
      ex.keep_bytes = pos;
      break;
    }
    if (point >= points.size()) fail(ErrorCode::Mismatch, "existing file has extra rows");
    if (row_in_point == 0) keys = expected_keys(cfg, points[point]);
    const auto fields = split(line);
    bool ok = fields.size() == ncols;
    for (std::size_t i = 0; ok && i < keys[row_in_point].size(); ++i)
      ok = fields[i] == keys[row_in_point][i];
    if (!ok) fail(ErrorCode::Mismatch, "existing row does not match the sweep grid: " + line);
    if (++row_in_point == keys.size()) {
      row_in_point = 0;
      ++point;
      ex.complete_points = point;
      ex.keep_bytes = pos;
    }
  }
  return ex;
}

void compute_points(const RunConfig& cfg, const std::vector<GridPoint>& points, std::size_t first,
                    std::ofstream& out) {
  const std::size_t n = points.size();
  if (first >= n) return;
  std::vector<std::optional<std::string>> slots(n);
  std::atomic<std::size_t> next{first};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr error;
  std::atomic<bool> abort{false};

  auto worker = [&] {
    while (!abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        std::string rows = evaluate_point(cfg, points[i]);
        std::lock_guard lock(mu);
        slots[i] = std::move(rows);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        abort = true;
      }
      ready.notify_all();
    }
  };

  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.workers, 1)), n - first);
  std::vector<std::jthread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);

  for (std::size_t i = first; i < n; ++i) {
    std::string rows;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value() || error; });
      if (error) break;
      rows = std::move(*slots[i]);
      slots[i].reset();
    }
    out << rows;
    out.flush();
    if (!out) {
      abort = true;
      pool.clear();
      fail(ErrorCode::Io, "write failed");
    }
  }
  abort = true;
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out[n - 1] = hi;
  return out;
}

std::vector<GridPoint> grid_points(const RunConfig& cfg) {
  std::vector<GridPoint> pts;
  const auto h1s = linspace(cfg.h1_min, cfg.h1_max, cfg.h1_points);
  const auto h2s = linspace(cfg.h2_min, cfg.h2_max, cfg.h2_points);
  switch (cfg.mode) {
    case Mode::UniformScan:
      for (const double h : h1s) pts.push_back({h, h});
      break;
    case Mode::DftLine:
      for (const double h2 : h2s) pts.push_back({cfg.h1, h2});
      break;
    case Mode::DecorrelatorMap:
    case Mode::FotocMap:
      for (const double h1 : h1s)
        for (const double h2 : h2s) pts.push_back({h1, h2});
      break;
  }
  return pts;
}

std::vector<std::string> column_names(Mode mode) {
  switch (mode) {
    case Mode::UniformScan: return {"h", "D_avg", "F_avg"};
    case Mode::DecorrelatorMap: return {"h1", "h2", "D_avg"};
    case Mode::FotocMap: return {"h1", "h2", "F_avg"};
    case Mode::DftLine: return {"h1", "h2", "observable", "freq", "magnitude"};
  }
  return {};
}

std::size_t rows_per_point(const RunConfig& cfg) {
  if (cfg.mode != Mode::DftLine) return 1;
  return cfg.observables().size() * cfg.dft_window().length();
}

std::string evaluate_point(const RunConfig& cfg, const GridPoint& p) {
  std::string rows;
  switch (cfg.mode) {
    case Mode::UniformScan:
      rows = num(p.h1) + ',' + num(decorrelator_at(cfg, p.h1, p.h2)) + ',' +
             num(fotoc_at(cfg, p.h1, p.h2)) + '\n';
      break;
    case Mode::DecorrelatorMap:
      rows = num(p.h1) + ',' + num(p.h2) + ',' + num(decorrelator_at(cfg, p.h1, p.h2)) + '\n';
      break;
    case Mode::FotocMap:
      rows = num(p.h1) + ',' + num(p.h2) + ',' + num(fotoc_at(cfg, p.h1, p.h2)) + '\n';
      break;
    case Mode::DftLine: {
      diagnostics::LinePoint lp{cfg.j_coupling, p.h1, p.h2, cfg.n_spins, cfg.init};
      const auto window = cfg.dft_window();
      const auto all = diagnostics::z_series(cfg.source, lp, window.end - 1);
      const std::string prefix = num(p.h1) + ',' + num(p.h2) + ',';
      for (const auto obs : cfg.observables()) {
        const auto spec =
            diagnostics::dft_magnitude(all[static_cast<std::size_t>(obs)], window);
        const std::string name = diagnostics::observable_name(obs);
        for (std::size_t k = 0; k < spec.size(); ++k)
          rows += prefix + name + ',' + num(spec.freqs[k]) + ',' + num(spec.mags[k]) + '\n';
      }
      break;
    }
  }
  return rows;
}

std::string file_header(const RunConfig& cfg) {
  std::string h = "# lmgdtc sweep\n" + provenance_header(cfg);
  const auto cols = column_names(cfg.mode);
  for (std::size_t i = 0; i < cols.size(); ++i) h += (i ? "," : "") + cols[i];
  return h + '\n';
}

std::string sweep_filename(Mode mode) { return "sweep_" + mode_name(mode) + ".csv"; }

std::string SweepSummary::text() const {
  std::ostringstream os;
  os << "grid points: " << grid_size << " (computed " << computed << ", reused " << reused
     << ")\nwall time: " << num(wall_seconds) << " s\n";
  if (stable_fraction) os << fraction_label << ": " << num(*stable_fraction) << '\n';
  if (!value_name.empty())
    os << value_name << " range: [" << num(min_value) << ", " << num(max_value) << "]\n";
  return os.str();
}

SweepSummary summarize_file(const RunConfig& cfg, const std::string& path) {
  SweepSummary s;
  const auto points = grid_points(cfg);
  s.grid_size = points.size();
  std::istringstream in(read_all(path));
  std::string line;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t stable = 0;
  std::size_t counted = 0;
  const std::size_t value_col = cfg.mode == Mode::UniformScan ? 1 : 2;
  std::vector<double> mags;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = split(line);
    if (cfg.mode == Mode::DftLine) {
      mags.push_back(std::stod(f[4]));
      if (mags.size() == cfg.dft_window().length()) {
        diagnostics::Spectrum spec;
        spec.mags = mags;
        for (std::size_t k = 0; k < mags.size(); ++k)
          spec.freqs.push_back(static_cast<double>(k) / mags.size());
        ++counted;
        if (diagnostics::classify_dtc(spec).has_order()) ++stable;
        mags.clear();
      }
      continue;
    }
    const double v = std::stod(f[value_col]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++counted;
    if (cfg.mode != Mode::FotocMap && v < kStableDecorrelator) ++stable;
  }
  if (cfg.mode == Mode::DftLine) {
    s.fraction_label = "p-DTC fraction";
    if (counted) s.stable_fraction = static_cast<double>(stable) / counted;
  } else {
    s.value_name = cfg.mode == Mode::FotocMap ? "F_avg" : "D_avg";
    s.min_value = counted ? lo : 0.0;
    s.max_value = counted ? hi : 0.0;
    if (cfg.mode != Mode::FotocMap && counted)
      s.stable_fraction = static_cast<double>(stable) / counted;
  }
  return s;
}

SweepSummary run_sweep(const RunConfig& cfg, const std::string& path) {
  std::error_code ec;
  if (fs::exists(path, ec) && fs::file_size(path, ec) > 0) {
    fail(ErrorCode::Mismatch, "output file " + path + " already exists; resume or remove it");
  }
  return resume_sweep(cfg, path);
}

SweepSummary resume_sweep(const RunConfig& cfg, const std::string& path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto points = grid_points(cfg);
  std::error_code ec;
  ExistingFile ex;
  if (fs::exists(path, ec)) ex = inspect(cfg, read_all(path), points);

  if (!ex.finished) {
    if (ex.keep_bytes == 0) {
      std::ofstream fresh(path, std::ios::binary | std::ios::trunc);
      if (!fresh) fail(ErrorCode::Io, "cannot write " + path);
      fresh << file_header(cfg);
      if (!fresh) fail(ErrorCode::Io, "cannot write " + path);
    } else {
      fs::resize_file(path, ex.keep_bytes, ec);
      if (ec) fail(ErrorCode::Io, "cannot truncate " + path + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCode::Io, "cannot write " + path);
    compute_points(cfg, points, ex.complete_points, out);
    out << kCompleteMarker << '\n';
    if (!out) fail(ErrorCode::Io, "cannot write " + path);
  }

  auto s = summarize_file(cfg, path);
  s.reused = ex.complete_points;
  s.computed = points.size() - ex.complete_points;
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace lmgdtc::sweep
