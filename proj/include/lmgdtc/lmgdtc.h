/*
 * lmgdtc: periodically driven two-region Lipkin-Meshkov-Glick model.
 *
 * Plain C interface to the simulation library. All objects are opaque
 * handles owned by the caller and released with the matching *_destroy
 * function. Every fallible call returns an lmgdtc_status; on failure a
 * one-line message is available from lmgdtc_last_error() on the same thread.
 */
#ifndef LMGDTC_LMGDTC_H
#define LMGDTC_LMGDTC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LMGDTC_BUILDING)
#    define LMGDTC_API __declspec(dllexport)
#  else
#    define LMGDTC_API __declspec(dllimport)
#  endif
#else
#  define LMGDTC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lmgdtc_status {
  LMGDTC_OK = 0,
  LMGDTC_ERR_INVALID_ARGUMENT = 1,
  LMGDTC_ERR_OUT_OF_RANGE = 2,
  LMGDTC_ERR_IO = 3,
  LMGDTC_ERR_MISMATCH = 4,
  LMGDTC_ERR_INTERNAL = 5
} lmgdtc_status;

LMGDTC_API const char* lmgdtc_version(void);
LMGDTC_API const char* lmgdtc_status_name(lmgdtc_status status);
/* Message of the most recent failure on the calling thread ("" if none). */
LMGDTC_API const char* lmgdtc_last_error(void);

/* ---- tables: named double-valued columns of equal length ---------------- */

typedef struct lmgdtc_table lmgdtc_table;

LMGDTC_API size_t lmgdtc_table_rows(const lmgdtc_table* table);
LMGDTC_API size_t lmgdtc_table_cols(const lmgdtc_table* table);
LMGDTC_API const char* lmgdtc_table_column_name(const lmgdtc_table* table, size_t col);
/* Borrowed pointer to a column, valid until the table is destroyed. */
LMGDTC_API lmgdtc_status lmgdtc_table_column(const lmgdtc_table* table, size_t col,
                                             const double** data);
LMGDTC_API void lmgdtc_table_destroy(lmgdtc_table* table);

/* ---- semiclassical map --------------------------------------------------- */

/* Drive parameters plus per-region initial orientation (polar theta,
 * azimuth phi, radians). Drive period is 1; rotation per period is 2*pi*h. */
typedef struct lmgdtc_drive {
  double j_coupling;
  double h1;
  double h2;
  double delta;
  double theta1;
  double phi1;
  double theta2;
  double phi2;
} lmgdtc_drive;

/* J = 0.5, h1 = h2 = 0.5, delta = 1e-4, both regions along +z. */
LMGDTC_API void lmgdtc_drive_defaults(lmgdtc_drive* drive);

/* Columns n,l1x,l1y,l1z,l2x,l2y,l2z,lx,ly,lz for cycles 0..n_cycles. */
LMGDTC_API lmgdtc_status lmgdtc_sc_trajectory(const lmgdtc_drive* drive, size_t n_cycles,
                                              lmgdtc_table** out);

/* Columns n,D,D1,D2. perturb_state = 0 perturbs the drives (h + delta),
 * nonzero tilts the companion's initial state by delta about x. */
LMGDTC_API lmgdtc_status lmgdtc_sc_decorrelator(const lmgdtc_drive* drive, size_t n_cycles,
                                                int perturb_state, lmgdtc_table** out);

/* ---- quantum Floquet evolution ------------------------------------------ */

typedef struct lmgdtc_quantum_model lmgdtc_quantum_model;

/* n_spins must be even and >= 2. */
LMGDTC_API lmgdtc_status lmgdtc_quantum_model_create(int n_spins, double j_coupling, double h1,
                                                     double h2, lmgdtc_quantum_model** out);
LMGDTC_API void lmgdtc_quantum_model_destroy(lmgdtc_quantum_model* model);
LMGDTC_API size_t lmgdtc_quantum_model_dim(const lmgdtc_quantum_model* model);

/* Columns n,lz1,lz2,lz,lx1,lx2,ly1,ly2. Only the angle fields of `init` are
 * read; NULL starts from the +z polarized state. */
LMGDTC_API lmgdtc_status lmgdtc_quantum_trajectory(const lmgdtc_quantum_model* model,
                                                   const lmgdtc_drive* init, size_t n_cycles,
                                                   lmgdtc_table** out);

/* Columns n,F with F(n) = 1 - |<psi0|U^-n W U^n|psi0>|^2. */
LMGDTC_API lmgdtc_status lmgdtc_quantum_fotoc(const lmgdtc_quantum_model* model,
                                              const lmgdtc_drive* init, double epsilon,
                                              size_t n_cycles, lmgdtc_table** out);

/* ---- spectral diagnostics ------------------------------------------------ */

typedef struct lmgdtc_dtc_class {
  int order;    /* p of a p-DTC, 0 when none */
  int period_t; /* nonzero for a Floquet-synchronized response */
  double peak_freq;
  double peak_ratio;
} lmgdtc_dtc_class;

/* Columns freq,magnitude of series[begin, end); pad_to = 0 disables padding. */
LMGDTC_API lmgdtc_status lmgdtc_dft(const double* series, size_t len, size_t begin, size_t end,
                                    size_t pad_to, lmgdtc_table** out);

LMGDTC_API lmgdtc_status lmgdtc_classify(const double* series, size_t len, size_t begin,
                                         size_t end, int max_order, double dominance,
                                         lmgdtc_dtc_class* out);

/* ---- configuration and commands ----------------------------------------- */

typedef struct lmgdtc_config lmgdtc_config;
typedef struct lmgdtc_report lmgdtc_report;

LMGDTC_API lmgdtc_status lmgdtc_config_create(lmgdtc_config** out);
LMGDTC_API void lmgdtc_config_destroy(lmgdtc_config* config);
LMGDTC_API lmgdtc_status lmgdtc_config_set(lmgdtc_config* config, const char* key,
                                           const char* value);
/* Merges a key=value file; `# config:` provenance lines are accepted. */
LMGDTC_API lmgdtc_status lmgdtc_config_load_file(lmgdtc_config* config, const char* path);

LMGDTC_API size_t lmgdtc_key_count(void);
LMGDTC_API const char* lmgdtc_key_name(size_t index);
LMGDTC_API const char* lmgdtc_key_default(size_t index);
LMGDTC_API const char* lmgdtc_key_help(size_t index);

/* command: traj-sc, traj-q, decorrelator, fotoc, dft or sweep. `resume`
 * applies to sweep only. */
LMGDTC_API lmgdtc_status lmgdtc_run(const lmgdtc_config* config, const char* command, int resume,
                                    lmgdtc_report** out);
LMGDTC_API const char* lmgdtc_report_summary(const lmgdtc_report* report);
LMGDTC_API size_t lmgdtc_report_output_count(const lmgdtc_report* report);
LMGDTC_API const char* lmgdtc_report_output(const lmgdtc_report* report, size_t index);
LMGDTC_API size_t lmgdtc_report_warning_count(const lmgdtc_report* report);
LMGDTC_API const char* lmgdtc_report_warning(const lmgdtc_report* report, size_t index);
LMGDTC_API void lmgdtc_report_destroy(lmgdtc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LMGDTC_LMGDTC_H */
