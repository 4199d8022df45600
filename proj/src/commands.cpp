#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diagnostics/spectrum.hpp"
#include "error.hpp"
#include "quantum/floquet.hpp"
#include "semiclassical/bloch_map.hpp"
#include "sweep/sweep.hpp"

namespace lmgdtc {

namespace fs = std::filesystem;
using sweep::Command;
using sweep::RunConfig;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string header(Command cmd, const RunConfig& cfg, const std::string& columns) {
  return "# lmgdtc " + sweep::command_name(cmd) + '\n' + sweep::provenance_header(cfg) + columns +
         '\n';
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
}

std::string traj_sc(const RunConfig& cfg, std::string& summary) {
  const auto traj = semiclassical::run_trajectory(semiclassical::bloch_from_angles(cfg.init),
                                                  cfg.drive(cfg.h1, cfg.h2), cfg.cycles);
  std::string body;
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const auto& s = traj[n];
    const auto t = s.total();
    body += std::to_string(n);
    for (const double v : {s.l1.x(), s.l1.y(), s.l1.z(), s.l2.x(), s.l2.y(), s.l2.z(), t.x(),
                           t.y(), t.z()})
      body += ',' + num(v);
    body += '\n';
  }
  summary = "cycles: " + std::to_string(cfg.cycles) + "\nfinal lz: " + num(traj.back().total().z()) + '\n';
  return header(Command::TrajSc, cfg, "n,l1x,l1y,l1z,l2x,l2y,l2z,lx,ly,lz") + body;
}

std::string traj_q(const RunConfig& cfg, std::string& summary) {
  const auto model = quantum::QuantumModel::make(cfg.n_spins, cfg.j_coupling, cfg.h1, cfg.h2);
  const auto series = quantum::run_quantum_trajectory(model, cfg.cycles, cfg.init);
  std::string body;
  for (std::size_t n = 0; n < series.size(); ++n) {
    const auto& e = series[n];
    body += std::to_string(n);
    for (const double v : {e.lz1, e.lz2, e.lz, e.lx1, e.lx2, e.ly1, e.ly2}) body += ',' + num(v);
    body += '\n';
  }
  summary = "hilbert dimension: " + std::to_string(model.dim()) + "\nfinal lz: " +
            num(series.back().lz) + '\n';
  return header(Command::TrajQ, cfg, "n,lz1,lz2,lz,lx1,lx2,ly1,ly2") + body;
}

std::string decorrelator(const RunConfig& cfg, std::string& summary) {
  const auto d = semiclassical::decorrelator_series(semiclassical::bloch_from_angles(cfg.init),
                                                    cfg.drive(cfg.h1, cfg.h2), cfg.cycles,
                                                    cfg.perturbation);
  std::string body;
  for (std::size_t n = 0; n < d.total.size(); ++n)
    body += std::to_string(n) + ',' + num(d.total[n]) + ',' + num(d.region1[n]) + ',' +
            num(d.region2[n]) + '\n';
  const double avg = window_mean(d.total, cfg.average_window());
  summary = "D_avg over [" + std::to_string(cfg.window_start) + ", " +
            std::to_string(cfg.window_end) + "]: " + num(avg) +
            (avg < sweep::kStableDecorrelator ? " (stable)\n" : " (unstable)\n");
  return header(Command::Decorrelator, cfg, "n,D,D1,D2") + body;
}

std::string fotoc(const RunConfig& cfg, std::string& summary) {
  const auto model = quantum::QuantumModel::make(cfg.n_spins, cfg.j_coupling, cfg.h1, cfg.h2);
  const auto f = quantum::fotoc_series(model, cfg.epsilon, cfg.cycles, cfg.init);
  std::string body;
  for (std::size_t n = 0; n < f.size(); ++n) body += std::to_string(n) + ',' + num(f[n]) + '\n';
  summary = "F_avg over [" + std::to_string(cfg.window_start) + ", " +
            std::to_string(cfg.window_end) + "]: " + num(window_mean(f, cfg.average_window())) + '\n';
  return header(Command::Fotoc, cfg, "n,F") + body;
}

std::string dft(const RunConfig& cfg, std::string& summary) {
  const diagnostics::LinePoint lp{cfg.j_coupling, cfg.h1, cfg.h2, cfg.n_spins, cfg.init};
  const auto window = cfg.dft_window();
  const auto all = diagnostics::z_series(cfg.source, lp, window.end - 1);
  std::string body;
  const std::string prefix = num(cfg.h1) + ',' + num(cfg.h2) + ',';
  for (const auto obs : cfg.observables()) {
    const auto spec = diagnostics::dft_magnitude(all[static_cast<std::size_t>(obs)], window);
    const auto cls = diagnostics::classify_dtc(spec);
    const auto name = diagnostics::observable_name(obs);
    for (std::size_t k = 0; k < spec.size(); ++k)
      body += prefix + name + ',' + num(spec.freqs[k]) + ',' + num(spec.mags[k]) + '\n';
    summary += name + ": order " + cls.label() + ", peak f=" + num(cls.peak_freq) +
               ", peak ratio " + num(cls.peak_ratio) + '\n';
  }
  return header(Command::Dft, cfg, "h1,h2,observable,freq,magnitude") + body;
}

}  // namespace

std::string output_filename(Command command, const RunConfig& cfg) {
  switch (command) {
    case Command::TrajSc: return "traj_sc.csv";
    case Command::TrajQ: return "traj_q.csv";
    case Command::Decorrelator: return "decorrelator.csv";
    case Command::Fotoc: return "fotoc.csv";
    case Command::Dft: return "dft.csv";
    case Command::Sweep: return sweep::sweep_filename(cfg.mode);
  }
  return "out.csv";
}

CommandReport run_command(Command command, const sweep::ParamSet& params, bool resume) {
  auto resolved = sweep::resolve(params, command);
  const RunConfig& cfg = resolved.config;
  CommandReport report;
  report.warnings = std::move(resolved.warnings);

  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec || !fs::is_directory(cfg.out)) {
    fail(ErrorCode::Io, "cannot create output directory " + cfg.out);
  }
  const std::string path = (fs::path(cfg.out) / output_filename(command, cfg)).string();
  report.outputs.push_back(path);

  if (command == Command::Sweep) {
    const auto s = resume ? sweep::resume_sweep(cfg, path) : sweep::run_sweep(cfg, path);
    report.summary = "mode: " + sweep::mode_name(cfg.mode) + '\n' + s.text();
    return report;
  }

  std::string content;
  switch (command) {
    case Command::TrajSc: content = traj_sc(cfg, report.summary); break;
    case Command::TrajQ: content = traj_q(cfg, report.summary); break;
    case Command::Decorrelator: content = decorrelator(cfg, report.summary); break;
    case Command::Fotoc: content = fotoc(cfg, report.summary); break;
    case Command::Dft: content = dft(cfg, report.summary); break;
    case Command::Sweep: break;
  }
  write_file(path, content);
  return report;
}

}  // namespace lmgdtc
