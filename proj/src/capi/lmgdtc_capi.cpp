#include "lmgdtc/lmgdtc.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "commands.hpp"
#include "diagnostics/spectrum.hpp"
#include "error.hpp"
#include "quantum/floquet.hpp"
#include "semiclassical/bloch_map.hpp"
#include "sweep/config.hpp"

struct lmgdtc_table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
};

struct lmgdtc_quantum_model {
  lmgdtc::quantum::QuantumModel model;
};

struct lmgdtc_config {
  lmgdtc::sweep::ParamSet params;
};

struct lmgdtc_report {
  lmgdtc::CommandReport report;
};

namespace {

thread_local std::string g_last_error;

lmgdtc_status to_status(lmgdtc::ErrorCode code) {
  switch (code) {
    case lmgdtc::ErrorCode::InvalidArgument: return LMGDTC_ERR_INVALID_ARGUMENT;
    case lmgdtc::ErrorCode::OutOfRange: return LMGDTC_ERR_OUT_OF_RANGE;
    case lmgdtc::ErrorCode::Io: return LMGDTC_ERR_IO;
    case lmgdtc::ErrorCode::Mismatch: return LMGDTC_ERR_MISMATCH;
  }
  return LMGDTC_ERR_INTERNAL;
}

template <class F>
lmgdtc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LMGDTC_OK;
  } catch (const lmgdtc::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return LMGDTC_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) lmgdtc::fail(lmgdtc::ErrorCode::InvalidArgument, what);
}

lmgdtc::semiclassical::InitialAngles angles_of(const lmgdtc_drive* d) {
  if (!d) return {};
  return {d->theta1, d->phi1, d->theta2, d->phi2};
}

lmgdtc_table* make_table(std::vector<std::string> names) {
  auto* t = new lmgdtc_table;
  t->names = std::move(names);
  t->columns.resize(t->names.size());
  return t;
}

}  // namespace

extern "C" {

const char* lmgdtc_version(void) { return "1.0.0"; }

const char* lmgdtc_status_name(lmgdtc_status status) {
  switch (status) {
    case LMGDTC_OK: return "ok";
    case LMGDTC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LMGDTC_ERR_OUT_OF_RANGE: return "out of range";
    case LMGDTC_ERR_IO: return "i/o error";
    case LMGDTC_ERR_MISMATCH: return "mismatch";
    case LMGDTC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lmgdtc_last_error(void) { return g_last_error.c_str(); }

size_t lmgdtc_table_rows(const lmgdtc_table* t) {
  return t && !t->columns.empty() ? t->columns[0].size() : 0;
}

size_t lmgdtc_table_cols(const lmgdtc_table* t) { return t ? t->names.size() : 0; }

const char* lmgdtc_table_column_name(const lmgdtc_table* t, size_t col) {
  return t && col < t->names.size() ? t->names[col].c_str() : nullptr;
}

lmgdtc_status lmgdtc_table_column(const lmgdtc_table* t, size_t col, const double** data) {
  return guarded([&] {
    require(t && data, "null argument");
    if (col >= t->columns.size()) lmgdtc::fail(lmgdtc::ErrorCode::OutOfRange, "column index out of range");
    *data = t->columns[col].data();
  });
}

void lmgdtc_table_destroy(lmgdtc_table* t) { delete t; }

void lmgdtc_drive_defaults(lmgdtc_drive* d) {
  if (!d) return;
  *d = lmgdtc_drive{0.5, 0.5, 0.5, 1e-4, 0.0, 0.0, 0.0, 0.0};
}

lmgdtc_status lmgdtc_sc_trajectory(const lmgdtc_drive* d, size_t n_cycles, lmgdtc_table** out) {
  return guarded([&] {
    require(d && out, "null argument");
    namespace sc = lmgdtc::semiclassical;
    const auto traj = sc::run_trajectory(sc::bloch_from_angles(angles_of(d)),
                                         {d->j_coupling, d->h1, d->h2, d->delta}, n_cycles);
    auto* t = make_table({"n", "l1x", "l1y", "l1z", "l2x", "l2y", "l2z", "lx", "ly", "lz"});
    for (std::size_t n = 0; n < traj.size(); ++n) {
      const auto& s = traj[n];
      const auto tot = s.total();
      const double row[] = {static_cast<double>(n), s.l1.x(), s.l1.y(), s.l1.z(), s.l2.x(),
                            s.l2.y(), s.l2.z(), tot.x(), tot.y(), tot.z()};
      for (std::size_t c = 0; c < 10; ++c) t->columns[c].push_back(row[c]);
    }
    *out = t;
  });
}

lmgdtc_status lmgdtc_sc_decorrelator(const lmgdtc_drive* d, size_t n_cycles, int perturb_state,
                                     lmgdtc_table** out) {
  return guarded([&] {
    require(d && out, "null argument");
    require(d->delta >= 0.0, "delta must be >= 0");
    namespace sc = lmgdtc::semiclassical;
    const auto series = sc::decorrelator_series(
        sc::bloch_from_angles(angles_of(d)), {d->j_coupling, d->h1, d->h2, d->delta}, n_cycles,
        perturb_state ? sc::Perturbation::InitialState : sc::Perturbation::Drive);
    auto* t = make_table({"n", "D", "D1", "D2"});
    for (std::size_t n = 0; n < series.total.size(); ++n) {
      t->columns[0].push_back(static_cast<double>(n));
      t->columns[1].push_back(series.total[n]);
      t->columns[2].push_back(series.region1[n]);
      t->columns[3].push_back(series.region2[n]);
    }
    *out = t;
  });
}

lmgdtc_status lmgdtc_quantum_model_create(int n_spins, double j_coupling, double h1, double h2,
                                          lmgdtc_quantum_model** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new lmgdtc_quantum_model{
        lmgdtc::quantum::QuantumModel::make(n_spins, j_coupling, h1, h2)};
  });
}

void lmgdtc_quantum_model_destroy(lmgdtc_quantum_model* m) { delete m; }

size_t lmgdtc_quantum_model_dim(const lmgdtc_quantum_model* m) { return m ? m->model.dim() : 0; }

lmgdtc_status lmgdtc_quantum_trajectory(const lmgdtc_quantum_model* m, const lmgdtc_drive* init,
                                        size_t n_cycles, lmgdtc_table** out) {
  return guarded([&] {
    require(m && out, "null argument");
    const auto series = lmgdtc::quantum::run_quantum_trajectory(m->model, n_cycles, angles_of(init));
    auto* t = make_table({"n", "lz1", "lz2", "lz", "lx1", "lx2", "ly1", "ly2"});
    for (std::size_t n = 0; n < series.size(); ++n) {
      const auto& e = series[n];
      const double row[] = {static_cast<double>(n), e.lz1, e.lz2, e.lz, e.lx1, e.lx2, e.ly1, e.ly2};
      for (std::size_t c = 0; c < 8; ++c) t->columns[c].push_back(row[c]);
    }
    *out = t;
  });
}

lmgdtc_status lmgdtc_quantum_fotoc(const lmgdtc_quantum_model* m, const lmgdtc_drive* init,
                                   double epsilon, size_t n_cycles, lmgdtc_table** out) {
  return guarded([&] {
    require(m && out, "null argument");
    const auto f = lmgdtc::quantum::fotoc_series(m->model, epsilon, n_cycles, angles_of(init));
    auto* t = make_table({"n", "F"});
    for (std::size_t n = 0; n < f.size(); ++n) {
      t->columns[0].push_back(static_cast<double>(n));
      t->columns[1].push_back(f[n]);
    }
    *out = t;
  });
}

lmgdtc_status lmgdtc_dft(const double* series, size_t len, size_t begin, size_t end,
                         size_t pad_to, lmgdtc_table** out) {
  return guarded([&] {
    require(series && out, "null argument");
    const auto spec = lmgdtc::diagnostics::dft_magnitude({series, len}, {begin, end}, pad_to);
    auto* t = make_table({"freq", "magnitude"});
    t->columns[0] = spec.freqs;
    t->columns[1] = spec.mags;
    *out = t;
  });
}

lmgdtc_status lmgdtc_classify(const double* series, size_t len, size_t begin, size_t end,
                              int max_order, double dominance, lmgdtc_dtc_class* out) {
  return guarded([&] {
    require(series && out, "null argument");
    const auto spec = lmgdtc::diagnostics::dft_magnitude({series, len}, {begin, end});
    lmgdtc::diagnostics::ClassifyOptions opts;
    opts.max_order = max_order;
    opts.dominance = dominance;
    const auto c = lmgdtc::diagnostics::classify_dtc(spec, opts);
    *out = lmgdtc_dtc_class{c.order, c.period_t ? 1 : 0, c.peak_freq, c.peak_ratio};
  });
}

lmgdtc_status lmgdtc_config_create(lmgdtc_config** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new lmgdtc_config;
  });
}

void lmgdtc_config_destroy(lmgdtc_config* c) { delete c; }

lmgdtc_status lmgdtc_config_set(lmgdtc_config* c, const char* key, const char* value) {
  return guarded([&] {
    require(c && key && value, "null argument");
    c->params.set(key, value);
  });
}

lmgdtc_status lmgdtc_config_load_file(lmgdtc_config* c, const char* path) {
  return guarded([&] {
    require(c && path, "null argument");
    c->params.merge_file(path);
  });
}

size_t lmgdtc_key_count(void) { return lmgdtc::sweep::known_keys().size(); }

const char* lmgdtc_key_name(size_t i) {
  const auto& keys = lmgdtc::sweep::known_keys();
  return i < keys.size() ? keys[i].key.data() : nullptr;
}

const char* lmgdtc_key_default(size_t i) {
  const auto& keys = lmgdtc::sweep::known_keys();
  return i < keys.size() ? keys[i].default_value.data() : nullptr;
}

const char* lmgdtc_key_help(size_t i) {
  const auto& keys = lmgdtc::sweep::known_keys();
  return i < keys.size() ? keys[i].help.data() : nullptr;
}

lmgdtc_status lmgdtc_run(const lmgdtc_config* c, const char* command, int resume,
                         lmgdtc_report** out) {
  return guarded([&] {
    require(c && command && out, "null argument");
    const auto cmd = lmgdtc::sweep::parse_command(command);
    *out = new lmgdtc_report{lmgdtc::run_command(cmd, c->params, resume != 0)};
  });
}

const char* lmgdtc_report_summary(const lmgdtc_report* r) {
  return r ? r->report.summary.c_str() : "";
}

size_t lmgdtc_report_output_count(const lmgdtc_report* r) {
  return r ? r->report.outputs.size() : 0;
}

const char* lmgdtc_report_output(const lmgdtc_report* r, size_t i) {
  return r && i < r->report.outputs.size() ? r->report.outputs[i].c_str() : nullptr;
}

size_t lmgdtc_report_warning_count(const lmgdtc_report* r) {
  return r ? r->report.warnings.size() : 0;
}

const char* lmgdtc_report_warning(const lmgdtc_report* r, size_t i) {
  return r && i < r->report.warnings.size() ? r->report.warnings[i].c_str() : nullptr;
}

void lmgdtc_report_destroy(lmgdtc_report* r) { delete r; }

}  // extern "C"
