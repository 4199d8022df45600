#include "sweep/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "error.hpp"

namespace lmgdtc::sweep {

namespace {

const std::vector<KeyInfo> kKeys = {
    {"j", "0.5", "interaction strength J (units of 1/T, drive period T = 1)"},
    {"h1", "0.5", "drive amplitude of region 1 (rotation 2*pi*h1 per period)"},
    {"h2", "0.5", "drive amplitude of region 2 (rotation 2*pi*h2 per period)"},
    {"n-spins", "100", "total number of spins N (even) for quantum runs"},
    {"cycles", "1000", "number of drive periods to simulate"},
    {"window-start", "", "first cycle of the window (default 500; 0 for DFT)"},
    {"window-end", "", "last cycle of the averaging window, inclusive (default 1000); "
                       "for DFT the exclusive end (default 1000)"},
    {"delta", "0.0001", "decorrelator perturbation (added to h1 and h2, or initial tilt in rad)"},
    {"epsilon", "0.01", "FOTOC perturbation W = exp(i*epsilon*(Sz1+Sz2))"},
    {"mode", "decorrelator-map", "sweep mode: decorrelator-map | fotoc-map | dft-line | uniform-scan"},
    {"observable", "lz", "DFT observable: lz | lz1 | lz2 | all"},
    {"source", "sc", "DFT source: sc (semiclassical) | quantum"},
    {"perturbation", "drive", "decorrelator companion: drive | state"},
    {"h1-min", "0", "lower end of the h1 (or uniform h) grid"},
    {"h1-max", "1", "upper end of the h1 (or uniform h) grid"},
    {"h1-points", "", "h1 grid points (default 101; 201 for uniform-scan)"},
    {"h2-min", "0", "lower end of the h2 grid"},
    {"h2-max", "1", "upper end of the h2 grid"},
    {"h2-points", "", "h2 grid points (default 101; 201 for dft-line)"},
    {"init-theta1", "0", "polar angle of the region-1 initial state (rad)"},
    {"init-phi1", "0", "azimuthal angle of the region-1 initial state (rad)"},
    {"init-theta2", "0", "polar angle of the region-2 initial state (rad)"},
    {"init-phi2", "0", "azimuthal angle of the region-2 initial state (rad)"},
    {"out", ".", "output directory"},
    {"workers", "1", "worker threads for sweeps (0 = all hardware threads)"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const ParamSet& p, const std::string& key, double fallback) {
  const auto v = p.get(key);
  if (!v) return fallback;
  double out = 0.0;
  const auto* end = v->data() + v->size();
  const auto [ptr, ec] = std::from_chars(v->data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
    fail(ErrorCode::InvalidArgument, "invalid number for " + key + ": '" + *v + "'");
  }
  return out;
}

long long to_integer(const ParamSet& p, const std::string& key, long long fallback) {
  const auto v = p.get(key);
  if (!v) return fallback;
  long long out = 0;
  const auto* end = v->data() + v->size();
  const auto [ptr, ec] = std::from_chars(v->data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    fail(ErrorCode::InvalidArgument, "invalid integer for " + key + ": '" + *v + "'");
  }
  return out;
}

std::size_t to_count(const ParamSet& p, const std::string& key, std::size_t fallback) {
  const long long v = to_integer(p, key, static_cast<long long>(fallback));
  if (v < 0) fail(ErrorCode::InvalidArgument, key + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Mode parse_mode(const std::string& name) {
  if (name == "decorrelator-map") return Mode::DecorrelatorMap;
  if (name == "fotoc-map") return Mode::FotocMap;
  if (name == "dft-line") return Mode::DftLine;
  if (name == "uniform-scan") return Mode::UniformScan;
  fail(ErrorCode::InvalidArgument, "unknown sweep mode '" + name + "'");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::DecorrelatorMap: return "decorrelator-map";
    case Mode::FotocMap: return "fotoc-map";
    case Mode::DftLine: return "dft-line";
    case Mode::UniformScan: return "uniform-scan";
  }
  return "decorrelator-map";
}

Command parse_command(const std::string& name) {
  if (name == "traj-sc") return Command::TrajSc;
  if (name == "traj-q") return Command::TrajQ;
  if (name == "decorrelator") return Command::Decorrelator;
  if (name == "fotoc") return Command::Fotoc;
  if (name == "dft") return Command::Dft;
  if (name == "sweep") return Command::Sweep;
  fail(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
}

std::string command_name(Command cmd) {
  switch (cmd) {
    case Command::TrajSc: return "traj-sc";
    case Command::TrajQ: return "traj-q";
    case Command::Decorrelator: return "decorrelator";
    case Command::Fotoc: return "fotoc";
    case Command::Dft: return "dft";
    case Command::Sweep: return "sweep";
  }
  return "sweep";
}

const std::vector<KeyInfo>& known_keys() { return kKeys; }

bool is_known_key(std::string_view key) {
  for (const auto& k : kKeys)
    if (k.key == key) return true;
  return false;
}

void ParamSet::set(const std::string& key, const std::string& value) {
  if (!is_known_key(key)) fail(ErrorCode::InvalidArgument, "unknown key '" + key + "'");
  values_[key] = value;
}

std::optional<std::string> ParamSet::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ParamSet::merge_text(std::string_view text, const std::string& origin) {
  constexpr std::string_view prefix = "# config:";
  // An output file: only its provenance lines are configuration.
  const bool output_file = text.starts_with("# lmgdtc");
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.starts_with(prefix)) {
      line = trim(line.substr(prefix.size()));
    } else if (output_file || line.empty() || line.starts_with('#')) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::InvalidArgument,
           origin + ":" + std::to_string(line_no) + ": expected key=value");
    }
    set(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
  }
}

void ParamSet::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str(), path);
}

void ParamSet::merge(const ParamSet& overrides) {
  for (const auto& [k, v] : overrides.values_) values_[k] = v;
}

std::vector<diagnostics::Observable> RunConfig::observables() const {
  using diagnostics::Observable;
  if (observable == "all") return {Observable::Lz, Observable::Lz1, Observable::Lz2};
  return {diagnostics::parse_observable(observable)};
}

bool uses_dft_window(Command command, Mode mode) {
  return command == Command::Dft || (command == Command::Sweep && mode == Mode::DftLine);
}

bool needs_quantum(const RunConfig& cfg, Command command) {
  switch (command) {
    case Command::TrajQ:
    case Command::Fotoc: return true;
    case Command::Dft: return cfg.source == diagnostics::Source::Quantum;
    case Command::Sweep:
      return cfg.mode == Mode::FotocMap || cfg.mode == Mode::UniformScan ||
             (cfg.mode == Mode::DftLine && cfg.source == diagnostics::Source::Quantum);
    default: return false;
  }
}

Resolved resolve(const ParamSet& p, Command command) {
  Resolved r;
  RunConfig& c = r.config;
  c.j_coupling = to_double(p, "j", c.j_coupling);
  c.h1 = to_double(p, "h1", c.h1);
  c.h2 = to_double(p, "h2", c.h2);
  c.delta = to_double(p, "delta", c.delta);
  c.epsilon = to_double(p, "epsilon", c.epsilon);
  c.mode = parse_mode(p.get("mode").value_or("decorrelator-map"));
  c.observable = p.get("observable").value_or("lz");
  c.source = diagnostics::parse_source(p.get("source").value_or("sc"));
  const auto pert = p.get("perturbation").value_or("drive");
  if (pert == "drive") {
    c.perturbation = semiclassical::Perturbation::Drive;
  } else if (pert == "state") {
    c.perturbation = semiclassical::Perturbation::InitialState;
  } else {
    fail(ErrorCode::InvalidArgument, "perturbation must be drive or state");
  }
  c.init = {to_double(p, "init-theta1", 0.0), to_double(p, "init-phi1", 0.0),
            to_double(p, "init-theta2", 0.0), to_double(p, "init-phi2", 0.0)};
  c.out = p.get("out").value_or(".");

  const long long n = to_integer(p, "n-spins", c.n_spins);
  if (n > 1'000'000 || n < -1'000'000) fail(ErrorCode::InvalidArgument, "n-spins out of range");
  c.n_spins = static_cast<int>(n);
  const long long w = to_integer(p, "workers", 1);
  if (w < 0 || w > 4096) fail(ErrorCode::InvalidArgument, "workers must be in [0, 4096]");
  c.workers = w == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                     : static_cast<int>(w);

  c.cycles = to_count(p, "cycles", 1000);
  if (c.cycles < 1) fail(ErrorCode::InvalidArgument, "cycles must be >= 1");

  const bool dft = uses_dft_window(command, c.mode);
  c.window_start = to_count(p, "window-start", dft ? 0 : 500);
  c.window_end = to_count(p, "window-end", 1000);
  // Trajectory commands record every cycle and ignore the window.
  const bool windowed = command != Command::TrajSc && command != Command::TrajQ;
  if (windowed) {
    if (c.window_end > c.cycles) {
      fail(ErrorCode::InvalidArgument, "window-end " + std::to_string(c.window_end) +
                                           " exceeds cycles " + std::to_string(c.cycles));
    }
    if (dft && c.window_end < c.window_start + 8) {
      fail(ErrorCode::InvalidArgument, "DFT window must span at least 8 cycles");
    }
    if (!dft && c.window_end < c.window_start) {
      fail(ErrorCode::InvalidArgument, "window-start must not exceed window-end");
    }
  }

  const std::size_t h1_default = c.mode == Mode::UniformScan ? 201 : 101;
  const std::size_t h2_default = c.mode == Mode::DftLine ? 201 : 101;
  c.h1_min = to_double(p, "h1-min", 0.0);
  c.h1_max = to_double(p, "h1-max", 1.0);
  c.h1_points = to_count(p, "h1-points", h1_default);
  c.h2_min = to_double(p, "h2-min", 0.0);
  c.h2_max = to_double(p, "h2-max", 1.0);
  c.h2_points = to_count(p, "h2-points", h2_default);
  if (c.h1_points < 1 || c.h2_points < 1) fail(ErrorCode::InvalidArgument, "grid point counts must be >= 1");
  if (c.h1_min > c.h1_max || c.h2_min > c.h2_max) {
    fail(ErrorCode::InvalidArgument, "grid minimum exceeds maximum");
  }
  if (c.observable != "all") diagnostics::parse_observable(c.observable);
  if (c.delta < 0.0) fail(ErrorCode::InvalidArgument, "delta must be >= 0");

  if (needs_quantum(c, command) && (c.n_spins < 2 || c.n_spins % 2 != 0)) {
    fail(ErrorCode::InvalidArgument,
         "n-spins must be even and >= 2, got " + std::to_string(c.n_spins));
  }

  auto warn_range = [&](const char* key, double v) {
    if (v < 0.0 || v > 1.0) {
      r.warnings.push_back(std::string(key) + "=" + format_param(v) +
                           " lies outside [0, 1]; the model is periodic in h with period 1");
    }
  };
  if (command == Command::Sweep) {
    warn_range("h1-min", c.h1_min);
    warn_range("h1-max", c.h1_max);
    if (c.mode != Mode::UniformScan) {
      warn_range("h2-min", c.h2_min);
      warn_range("h2-max", c.h2_max);
    }
    if (c.mode == Mode::DftLine) warn_range("h1", c.h1);
  } else {
    warn_range("h1", c.h1);
    warn_range("h2", c.h2);
  }
  return r;
}

std::string format_param(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

std::string provenance_header(const RunConfig& c) {
  std::ostringstream os;
  auto line = [&](std::string_view key, const std::string& value) {
    os << "# config: " << key << '=' << value << '\n';
  };
  line("j", format_param(c.j_coupling));
  line("h1", format_param(c.h1));
  line("h2", format_param(c.h2));
  line("n-spins", std::to_string(c.n_spins));
  line("cycles", std::to_string(c.cycles));
  line("window-start", std::to_string(c.window_start));
  line("window-end", std::to_string(c.window_end));
  line("delta", format_param(c.delta));
  line("epsilon", format_param(c.epsilon));
  line("mode", mode_name(c.mode));
  line("observable", c.observable);
  line("source", diagnostics::source_name(c.source));
  line("perturbation", c.perturbation == semiclassical::Perturbation::Drive ? "drive" : "state");
  line("h1-min", format_param(c.h1_min));
  line("h1-max", format_param(c.h1_max));
  line("h1-points", std::to_string(c.h1_points));
  line("h2-min", format_param(c.h2_min));
  line("h2-max", format_param(c.h2_max));
  line("h2-points", std::to_string(c.h2_points));
  line("init-theta1", format_param(c.init.theta1));
  line("init-phi1", format_param(c.init.phi1));
  line("init-theta2", format_param(c.init.theta2));
  line("init-phi2", format_param(c.init.phi2));
  return os.str();
}

}  // namespace lmgdtc::sweep
