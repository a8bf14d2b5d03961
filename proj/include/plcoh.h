/* plcoh - power-law coherency estimation for pairs of time series.
 *
 * C interface to the library: series generation (mixed-correlated long-memory
 * pairs), scale-resolved fluctuation and coherency profiles (DCCA, DMCA,
 * HXA), exponent estimation, and Monte Carlo summaries.
 *
 * Conventions:
 *   - Every fallible call returns plcoh_status; PLCOH_OK is 0.
 *   - On failure, plcoh_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread.
 *   - Objects created through *_create / generate / profile calls are owned
 *     by the caller and released with the matching *_destroy.
 *   - All functions are thread-safe on distinct objects; a single object
 *     must not be mutated concurrently (all accessors are read-only).
 */
#ifndef PLCOH_H
#define PLCOH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plcoh_status {
  PLCOH_OK = 0,
  PLCOH_ERR_INVALID_ARGUMENT = 1,
  PLCOH_ERR_TOO_SHORT = 2,
  PLCOH_ERR_NON_FINITE = 3,
  PLCOH_ERR_DOMAIN = 4,
  PLCOH_ERR_INSUFFICIENT_POINTS = 5,
  PLCOH_ERR_SCALE_TOO_LARGE = 6,
  PLCOH_ERR_DEGENERATE_BOX = 7,
  PLCOH_ERR_EVEN_WINDOW = 8,
  PLCOH_ERR_WINDOW_TOO_LARGE = 9,
  PLCOH_ERR_LAG_OUT_OF_RANGE = 10,
  PLCOH_ERR_DEGENERATE_SERIES = 11,
  PLCOH_ERR_ALL_FITS_FAILED = 12,
  PLCOH_ERR_ALL_REPETITIONS_FAILED = 13,
  PLCOH_ERR_INTERNAL = 14
} plcoh_status;

typedef enum plcoh_method {
  PLCOH_DCCA = 0, /* box-wise linear detrending of profiles */
  PLCOH_DMCA = 1, /* centered moving-average detrending */
  PLCOH_HXA = 2   /* lagged profile-increment correlations */
} plcoh_method;

/* Library version string, e.g. "0.1.0". */
const char* plcoh_version(void);

/* Message from the most recent failing call on this thread ("" if none). */
const char* plcoh_last_error(void);

/* Stable identifier for a status / method value (never NULL). */
const char* plcoh_status_name(plcoh_status status);
const char* plcoh_method_name(plcoh_method method);

/* ------------------------------------------------------------------ */
/* Series pairs                                                       */
/* ------------------------------------------------------------------ */

typedef struct plcoh_series plcoh_series; /* an immutable (x, y) pair */

/* Copies `length` samples from x and y. length must be >= 2 and all values
 * finite. */
plcoh_status plcoh_series_create(const double* x, const double* y,
                                 size_t length, plcoh_series** out);
void plcoh_series_destroy(plcoh_series* series);
size_t plcoh_series_length(const plcoh_series* series);

/* Borrowed pointers into the series, valid until it is destroyed. */
plcoh_status plcoh_series_data(const plcoh_series* series, const double** x,
                               const double** y);

/* ------------------------------------------------------------------ */
/* Generator: mixed-correlated long-memory pairs                      */
/* ------------------------------------------------------------------ */

/* Each output is a sum of two truncated MA(inf) components with memory
 * parameters d in (-0.5, 0.5); the cross-link is the correlation rho23
 * between the innovations of the second component of x and the first
 * component of y. */
typedef struct plcoh_arfima_params {
  double d1, d2, d3, d4;
  double sigma[4]; /* innovation standard deviations, all > 0 */
  double rho23;    /* in [-1, 1] */
  size_t length;
  size_t n_trunc; /* MA truncation lag; 0 selects the default */
  uint64_t seed;  /* base seed; repetitions use derived substreams */
} plcoh_arfima_params;

/* Baseline configuration: d1 = d4 = 0.4, d2 = d3 = 0.2, unit sigmas,
 * rho23 = 0, length = 1000, automatic truncation, seed = 0. */
void plcoh_arfima_params_init(plcoh_arfima_params* params);

/* Truncation lag actually used for these params (resolves n_trunc = 0). */
size_t plcoh_resolved_n_trunc(const plcoh_arfima_params* params);

/* Population exponents implied by the memory parameters. */
double plcoh_theoretical_h_x(const plcoh_arfima_params* params);
double plcoh_theoretical_h_y(const plcoh_arfima_params* params);
double plcoh_theoretical_h_xy(const plcoh_arfima_params* params);
double plcoh_theoretical_h_rho(const plcoh_arfima_params* params);

/* Draws the pair for repetition `rep_index` of the stream identified by
 * params->seed. Deterministic in (params, rep_index). */
plcoh_status plcoh_generate(const plcoh_arfima_params* params,
                            uint64_t rep_index, plcoh_series** out);

/* ------------------------------------------------------------------ */
/* Profiles and exponent estimation                                   */
/* ------------------------------------------------------------------ */

typedef struct plcoh_estimate_options {
  int s_min;             /* DCCA: smallest box size (>= 4) */
  int s_max;             /* DCCA: largest box size; 0 selects length/5 */
  int box_step;          /* DCCA: stride between box starts; 0 tiles the
                          * series with non-overlapping boxes */
  int scales_per_decade; /* DCCA: log-spaced grid density */
  int s_step;            /* DCCA: > 0 replaces the log-spaced grid with a
                          * linear one stepping by this amount */
  int kappa_max;         /* DMCA: largest (odd) moving-average window */
  int tau_max;           /* HXA: largest lag */
  int hxa_jackknife;     /* HXA: average fits over lag cutoffs 5..tau_max */
} plcoh_estimate_options;

/* Defaults: s_min 10, s_max 0 (auto), box_step 10, scales_per_decade 10,
 * s_step 0 (log-spaced grid), kappa_max 21, tau_max 20, jackknife on. */
void plcoh_estimate_options_init(plcoh_estimate_options* options);

typedef struct plcoh_estimates {
  double h_rho; /* power-law coherency exponent */
  double h_x;   /* univariate exponent of x */
  double h_y;   /* univariate exponent of y */
  double h_xy;  /* bivariate exponent */
  int fit_points;      /* points in the coherency fit */
  double residual_sse; /* residual sum of squares of that fit */
  int jackknife_fits;  /* HXA only: sub-fits averaged */
  int jackknife_skips; /* HXA only: sub-fits skipped */
} plcoh_estimates;

plcoh_status plcoh_estimate(plcoh_method method, const plcoh_series* series,
                            const plcoh_estimate_options* options,
                            plcoh_estimates* out);

typedef struct plcoh_profile plcoh_profile; /* (scale, value) rows */

/* Scale-resolved detrended cross-covariance of the pair. */
plcoh_status plcoh_fluctuation_profile(plcoh_method method,
                                       const plcoh_series* series,
                                       const plcoh_estimate_options* options,
                                       plcoh_profile** out);

/* Squared scale-specific correlation rho^2(scale) in [0, 1]. Scales with a
 * degenerate denominator are dropped; see plcoh_profile_dropped. */
plcoh_status plcoh_coherency_profile(plcoh_method method,
                                     const plcoh_series* series,
                                     const plcoh_estimate_options* options,
                                     plcoh_profile** out);

size_t plcoh_profile_size(const plcoh_profile* profile);
plcoh_status plcoh_profile_row(const plcoh_profile* profile, size_t index,
                               double* scale, double* value);
size_t plcoh_profile_dropped(const plcoh_profile* profile);
void plcoh_profile_destroy(plcoh_profile* profile);

/* ------------------------------------------------------------------ */
/* Monte Carlo summaries                                              */
/* ------------------------------------------------------------------ */

typedef struct plcoh_cell_result {
  plcoh_method method;
  size_t length;
  int option_value; /* s_min, kappa_max, or tau_max depending on method */
  double rho23;
  double h_rho_true;
  double mean;
  double bias;
  double sd;  /* sample standard deviation (divisor n-1) */
  double mse; /* bias^2 + sd^2 */
  int n_effective;
  int failures;
} plcoh_cell_result;

/* Generates and estimates `repetitions` pairs; repetition r uses substream
 * (params->seed, r). The summary is independent of `jobs` (fixed-order
 * reduction); jobs <= 0 selects the hardware concurrency. */
plcoh_status plcoh_mc_run_cell(plcoh_method method,
                               const plcoh_arfima_params* params,
                               const plcoh_estimate_options* options,
                               int repetitions, int jobs,
                               plcoh_cell_result* out);

/* Cartesian grid: rows ordered by length, then option value, then rho23.
 * `rows` must hold n_lengths * n_options * n_rhos entries; every cell reuses
 * params->seed. Option values set s_min / kappa_max / tau_max according to
 * the method; pass n_options = 0 for the standard axis of the method.
 * Cells that fail outright are reported with NaN statistics and
 * failures = repetitions; the run continues. */
plcoh_status plcoh_mc_run_table(plcoh_method method,
                                const plcoh_arfima_params* params,
                                const plcoh_estimate_options* options,
                                const size_t* lengths, size_t n_lengths,
                                const int* option_values, size_t n_options,
                                const double* rho23_values, size_t n_rhos,
                                int repetitions, int jobs,
                                plcoh_cell_result* rows, size_t* n_rows);

/* Length sweep at rho23 = 1 for all three methods. `rows` must hold
 * 3 * n_lengths entries (method-major, DCCA then DMCA then HXA);
 * `decay_exponents[3]` receives the slope of log variance against log
 * length per method in the same order. Passing NULL options selects the
 * sweep convention: default options, except that DCCA uses non-overlapping
 * boxes (box_step 0) on a linear scale grid (s_step 10), which keeps long
 * series tractable and resolves the large scales where a perfectly coupled
 * pair decoheres. */
plcoh_status plcoh_mc_run_sweep(const plcoh_arfima_params* params,
                                const plcoh_estimate_options* options,
                                const size_t* lengths, size_t n_lengths,
                                int repetitions, int jobs,
                                plcoh_cell_result* rows, size_t* n_rows,
                                double decay_exponents[3]);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PLCOH_H */
