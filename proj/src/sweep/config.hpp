#pragma once

// Flat key=value run configuration shared by config files, CLI flags, the C
// API and the provenance header embedded in every output file.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagnostics/spectrum.hpp"
#include "semiclassical/bloch_map.hpp"
#include "window.hpp"

namespace lmgdtc::sweep {

enum class Mode { DecorrelatorMap, FotocMap, DftLine, UniformScan };

Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

struct KeyInfo {
  std::string_view key;
  std::string_view default_value;  // empty when the default depends on context
  std::string_view help;
};

/// Every recognised key, in the order used for provenance headers.
const std::vector<KeyInfo>& known_keys();
bool is_known_key(std::string_view key);

/// Raw string values, validated only for key names.
class ParamSet {
public:
  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  bool contains(const std::string& key) const { return values_.count(key) != 0; }

  /// Accepts `key=value`, `# config: key=value`; skips blank and other `#` lines.
  /// Text starting with an output-file tag contributes its `# config:` lines only.
  void merge_text(std::string_view text, const std::string& origin = "config");
  void merge_file(const std::string& path);
  /// Later values win.
  void merge(const ParamSet& overrides);

private:
  std::map<std::string, std::string> values_;
};

/// Fully resolved, typed configuration.
struct RunConfig {
  double j_coupling = 0.5;
  double h1 = 0.5;
  double h2 = 0.5;
  int n_spins = 100;
  std::size_t cycles = 1000;
  std::size_t window_start = 500;
  std::size_t window_end = 1000;
  double delta = 1e-4;
  double epsilon = 0.01;
  Mode mode = Mode::DecorrelatorMap;
  std::string observable = "lz";  // lz | lz1 | lz2 | all
  diagnostics::Source source = diagnostics::Source::Semiclassical;
  semiclassical::Perturbation perturbation = semiclassical::Perturbation::Drive;
  double h1_min = 0.0, h1_max = 1.0;
  std::size_t h1_points = 101;
  double h2_min = 0.0, h2_max = 1.0;
  std::size_t h2_points = 101;
  semiclassical::InitialAngles init;
  std::string out = ".";
  int workers = 1;

  semiclassical::DriveParams drive(double h1v, double h2v) const {
    return {j_coupling, h1v, h2v, delta};
  }
  CycleWindow average_window() const { return {window_start, window_end}; }
  diagnostics::DftWindow dft_window() const { return {window_start, window_end}; }
  std::vector<diagnostics::Observable> observables() const;
};

enum class Command { TrajSc, TrajQ, Decorrelator, Fotoc, Dft, Sweep };

Command parse_command(const std::string& name);
std::string command_name(Command cmd);

struct Resolved {
  RunConfig config;
  std::vector<std::string> warnings;
};

/// Parses and validates. Spectral commands default to the window [0, 1000),
/// averaging commands to [500, 1000]; the sweep mode picks grid sizes.
/// Throws InvalidArgument.
Resolved resolve(const ParamSet& params, Command command);

bool uses_dft_window(Command command, Mode mode);
bool needs_quantum(const RunConfig& cfg, Command command);

/// Canonical provenance lines (`# config: key=value`) for every key except
/// out and workers, which do not affect results.
std::string provenance_header(const RunConfig& cfg);

/// Shortest round-trip-safe decimal text for a double.
std::string format_param(double v);

}  // namespace lmgdtc::sweep
