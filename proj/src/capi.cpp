#include "plcoh.h"

#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "arfima.hpp"
#include "coherency.hpp"
#include "error.hpp"
#include "fluctuation.hpp"
#include "montecarlo.hpp"
#include "series.hpp"

#ifndef PLCOH_VERSION_STRING
#define PLCOH_VERSION_STRING "0.0.0"
#endif

struct plcoh_series {
  plcoh::SeriesPair pair;
};

struct plcoh_profile {
  plcoh::Method method;
  std::vector<plcoh::ScalePoint> entries;
  size_t dropped;
};

namespace {

thread_local std::string g_last_error;

void set_last_error(std::string message) { g_last_error = std::move(message); }

plcoh_status map_code(plcoh::ErrorCode code) {
  using plcoh::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return PLCOH_ERR_INVALID_ARGUMENT;
    case ErrorCode::TooShort:
      return PLCOH_ERR_TOO_SHORT;
    case ErrorCode::NonFinite:
      return PLCOH_ERR_NON_FINITE;
    case ErrorCode::Domain:
      return PLCOH_ERR_DOMAIN;
    case ErrorCode::InsufficientPoints:
      return PLCOH_ERR_INSUFFICIENT_POINTS;
    case ErrorCode::ScaleTooLarge:
      return PLCOH_ERR_SCALE_TOO_LARGE;
    case ErrorCode::DegenerateBox:
      return PLCOH_ERR_DEGENERATE_BOX;
    case ErrorCode::EvenWindow:
      return PLCOH_ERR_EVEN_WINDOW;
    case ErrorCode::WindowTooLarge:
      return PLCOH_ERR_WINDOW_TOO_LARGE;
    case ErrorCode::LagOutOfRange:
      return PLCOH_ERR_LAG_OUT_OF_RANGE;
    case ErrorCode::DegenerateSeries:
      return PLCOH_ERR_DEGENERATE_SERIES;
    case ErrorCode::AllFitsFailed:
      return PLCOH_ERR_ALL_FITS_FAILED;
    case ErrorCode::AllRepetitionsFailed:
      return PLCOH_ERR_ALL_REPETITIONS_FAILED;
  }
  return PLCOH_ERR_INTERNAL;
}

template <typename Fn>
plcoh_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return PLCOH_OK;
  } catch (const plcoh::Error& e) {
    set_last_error(e.what());
    return map_code(e.code());
  } catch (const std::exception& e) {
    set_last_error(e.what());
    return PLCOH_ERR_INTERNAL;
  } catch (...) {
    set_last_error("unknown error");
    return PLCOH_ERR_INTERNAL;
  }
}

plcoh_status invalid(const char* message) {
  set_last_error(message);
  return PLCOH_ERR_INVALID_ARGUMENT;
}

plcoh::Method to_method(plcoh_method method) {
  switch (method) {
    case PLCOH_DCCA:
      return plcoh::Method::Dcca;
    case PLCOH_DMCA:
      return plcoh::Method::Dmca;
    case PLCOH_HXA:
      return plcoh::Method::Hxa;
  }
  plcoh::fail(plcoh::ErrorCode::InvalidArgument,
              "unknown method id " + std::to_string(static_cast<int>(method)));
}

plcoh_method from_method(plcoh::Method method) {
  switch (method) {
    case plcoh::Method::Dcca:
      return PLCOH_DCCA;
    case plcoh::Method::Dmca:
      return PLCOH_DMCA;
    case plcoh::Method::Hxa:
      return PLCOH_HXA;
  }
  return PLCOH_DCCA;
}

plcoh::ArfimaParams to_params(const plcoh_arfima_params& p) {
  plcoh::ArfimaParams out;
  out.d1 = p.d1;
  out.d2 = p.d2;
  out.d3 = p.d3;
  out.d4 = p.d4;
  out.sigma = {p.sigma[0], p.sigma[1], p.sigma[2], p.sigma[3]};
  out.rho23 = p.rho23;
  out.length = p.length;
  out.n_trunc = p.n_trunc;
  out.seed = p.seed;
  return out;
}

plcoh::EstimateOptions to_options(const plcoh_estimate_options& o) {
  plcoh::EstimateOptions out;
  out.s_min = o.s_min;
  out.s_max = o.s_max;
  out.box_step = o.box_step;
  out.scales_per_decade = o.scales_per_decade;
  out.s_step = o.s_step;
  out.kappa_max = o.kappa_max;
  out.tau_max = o.tau_max;
  out.hxa_jackknife = o.hxa_jackknife != 0;
  return out;
}

plcoh_cell_result to_cell(const plcoh::CellResult& cell) {
  plcoh_cell_result out;
  out.method = from_method(cell.method);
  out.length = cell.length;
  out.option_value = cell.option_value;
  out.rho23 = cell.rho23;
  out.h_rho_true = cell.h_rho_true;
  out.mean = cell.mean;
  out.bias = cell.bias;
  out.sd = cell.sd;
  out.mse = cell.mse;
  out.n_effective = cell.n_effective;
  out.failures = cell.failures;
  return out;
}

int option_value_of(plcoh::Method method, const plcoh::EstimateOptions& o) {
  switch (method) {
    case plcoh::Method::Dcca:
      return o.s_min;
    case plcoh::Method::Dmca:
      return o.kappa_max;
    case plcoh::Method::Hxa:
      return o.tau_max;
  }
  return 0;
}

}  // namespace

extern "C" {

const char* plcoh_version(void) { return PLCOH_VERSION_STRING; }

const char* plcoh_last_error(void) { return g_last_error.c_str(); }

const char* plcoh_status_name(plcoh_status status) {
  switch (status) {
    case PLCOH_OK:
      return "ok";
    case PLCOH_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case PLCOH_ERR_TOO_SHORT:
      return "too_short";
    case PLCOH_ERR_NON_FINITE:
      return "non_finite";
    case PLCOH_ERR_DOMAIN:
      return "domain";
    case PLCOH_ERR_INSUFFICIENT_POINTS:
      return "insufficient_points";
    case PLCOH_ERR_SCALE_TOO_LARGE:
      return "scale_too_large";
    case PLCOH_ERR_DEGENERATE_BOX:
      return "degenerate_box";
    case PLCOH_ERR_EVEN_WINDOW:
      return "even_window";
    case PLCOH_ERR_WINDOW_TOO_LARGE:
      return "window_too_large";
    case PLCOH_ERR_LAG_OUT_OF_RANGE:
      return "lag_out_of_range";
    case PLCOH_ERR_DEGENERATE_SERIES:
      return "degenerate_series";
    case PLCOH_ERR_ALL_FITS_FAILED:
      return "all_fits_failed";
    case PLCOH_ERR_ALL_REPETITIONS_FAILED:
      return "all_repetitions_failed";
    case PLCOH_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* plcoh_method_name(plcoh_method method) {
  switch (method) {
    case PLCOH_DCCA:
      return "dcca";
    case PLCOH_DMCA:
      return "dmca";
    case PLCOH_HXA:
      return "hxa";
  }
  return "unknown";
}

plcoh_status plcoh_series_create(const double* x, const double* y,
                                 size_t length, plcoh_series** out) {
  if (!x || !y || !out) return invalid("series_create: null pointer");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<plcoh_series>();
    handle->pair = plcoh::make_series_pair(
        std::vector<double>(x, x + length), std::vector<double>(y, y + length));
    *out = handle.release();
  });
}

void plcoh_series_destroy(plcoh_series* series) { delete series; }

size_t plcoh_series_length(const plcoh_series* series) {
  return series ? series->pair.length() : 0;
}

plcoh_status plcoh_series_data(const plcoh_series* series, const double** x,
                               const double** y) {
  if (!series || !x || !y) return invalid("series_data: null pointer");
  *x = series->pair.x.data();
  *y = series->pair.y.data();
  return PLCOH_OK;
}

void plcoh_arfima_params_init(plcoh_arfima_params* params) {
  if (!params) return;
  const plcoh::ArfimaParams defaults;
  params->d1 = defaults.d1;
  params->d2 = defaults.d2;
  params->d3 = defaults.d3;
  params->d4 = defaults.d4;
  for (int i = 0; i < 4; ++i) params->sigma[i] = defaults.sigma[i];
  params->rho23 = defaults.rho23;
  params->length = defaults.length;
  params->n_trunc = defaults.n_trunc;
  params->seed = defaults.seed;
}

size_t plcoh_resolved_n_trunc(const plcoh_arfima_params* params) {
  return params ? plcoh::resolved_n_trunc(to_params(*params)) : 0;
}

double plcoh_theoretical_h_x(const plcoh_arfima_params* params) {
  return params ? plcoh::theoretical_h_x(to_params(*params)) : 0.0;
}

double plcoh_theoretical_h_y(const plcoh_arfima_params* params) {
  return params ? plcoh::theoretical_h_y(to_params(*params)) : 0.0;
}

double plcoh_theoretical_h_xy(const plcoh_arfima_params* params) {
  return params ? plcoh::theoretical_h_xy(to_params(*params)) : 0.0;
}

double plcoh_theoretical_h_rho(const plcoh_arfima_params* params) {
  return params ? plcoh::theoretical_h_rho(to_params(*params)) : 0.0;
}

plcoh_status plcoh_generate(const plcoh_arfima_params* params,
                            uint64_t rep_index, plcoh_series** out) {
  if (!params || !out) return invalid("generate: null pointer");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<plcoh_series>();
    handle->pair = plcoh::generate_mc_arfima(to_params(*params), rep_index);
    *out = handle.release();
  });
}

void plcoh_estimate_options_init(plcoh_estimate_options* options) {
  if (!options) return;
  const plcoh::EstimateOptions defaults;
  options->s_min = defaults.s_min;
  options->s_max = defaults.s_max;
  options->box_step = defaults.box_step;
  options->scales_per_decade = defaults.scales_per_decade;
  options->s_step = defaults.s_step;
  options->kappa_max = defaults.kappa_max;
  options->tau_max = defaults.tau_max;
  options->hxa_jackknife = defaults.hxa_jackknife ? 1 : 0;
}

plcoh_status plcoh_estimate(plcoh_method method, const plcoh_series* series,
                            const plcoh_estimate_options* options,
                            plcoh_estimates* out) {
  if (!series || !options || !out) return invalid("estimate: null pointer");
  return guarded([&] {
    const plcoh::FullEstimates est = plcoh::estimate_all(
        to_method(method), series->pair, to_options(*options));
    out->h_rho = est.h_rho.value;
    out->h_x = est.h_x.value;
    out->h_y = est.h_y.value;
    out->h_xy = est.h_xy.value;
    out->fit_points = est.h_rho.n_points;
    out->residual_sse = est.h_rho.residual_sse;
    out->jackknife_fits = est.jackknife_fits;
    out->jackknife_skips = est.jackknife_skips;
  });
}

plcoh_status plcoh_fluctuation_profile(plcoh_method method,
                                       const plcoh_series* series,
                                       const plcoh_estimate_options* options,
                                       plcoh_profile** out) {
  if (!series || !options || !out) {
    return invalid("fluctuation_profile: null pointer");
  }
  *out = nullptr;
  return guarded([&] {
    const plcoh::Method m = to_method(method);
    const plcoh::ProfileTriple triple =
        plcoh::cross_profiles(m, series->pair, to_options(*options));
    auto handle = std::make_unique<plcoh_profile>();
    handle->method = m;
    handle->entries = triple.xy.entries;
    handle->dropped = 0;
    *out = handle.release();
  });
}

plcoh_status plcoh_coherency_profile(plcoh_method method,
                                     const plcoh_series* series,
                                     const plcoh_estimate_options* options,
                                     plcoh_profile** out) {
  if (!series || !options || !out) {
    return invalid("coherency_profile: null pointer");
  }
  *out = nullptr;
  return guarded([&] {
    const plcoh::Method m = to_method(method);
    const plcoh::CoherencyProfile coh =
        plcoh::coherency_profile(m, series->pair, to_options(*options));
    auto handle = std::make_unique<plcoh_profile>();
    handle->method = m;
    handle->entries = coh.entries;
    handle->dropped = coh.dropped_scales;
    *out = handle.release();
  });
}

size_t plcoh_profile_size(const plcoh_profile* profile) {
  return profile ? profile->entries.size() : 0;
}

plcoh_status plcoh_profile_row(const plcoh_profile* profile, size_t index,
                               double* scale, double* value) {
  if (!profile || !scale || !value) return invalid("profile_row: null pointer");
  if (index >= profile->entries.size()) {
    return invalid("profile_row: index out of range");
  }
  *scale = profile->entries[index].scale;
  *value = profile->entries[index].value;
  return PLCOH_OK;
}

size_t plcoh_profile_dropped(const plcoh_profile* profile) {
  return profile ? profile->dropped : 0;
}

void plcoh_profile_destroy(plcoh_profile* profile) { delete profile; }

plcoh_status plcoh_mc_run_cell(plcoh_method method,
                               const plcoh_arfima_params* params,
                               const plcoh_estimate_options* options,
                               int repetitions, int jobs,
                               plcoh_cell_result* out) {
  if (!params || !options || !out) return invalid("mc_run_cell: null pointer");
  return guarded([&] {
    plcoh::CellSpec spec;
    spec.method = to_method(method);
    spec.params = to_params(*params);
    spec.options = to_options(*options);
    spec.option_value = option_value_of(spec.method, spec.options);
    spec.repetitions = repetitions;
    spec.seed = params->seed;
    *out = to_cell(plcoh::run_cell(spec, jobs));
  });
}

plcoh_status plcoh_mc_run_table(plcoh_method method,
                                const plcoh_arfima_params* params,
                                const plcoh_estimate_options* options,
                                const size_t* lengths, size_t n_lengths,
                                const int* option_values, size_t n_options,
                                const double* rho23_values, size_t n_rhos,
                                int repetitions, int jobs,
                                plcoh_cell_result* rows, size_t* n_rows) {
  if (!params || !options || !lengths || !rho23_values || !rows || !n_rows) {
    return invalid("mc_run_table: null pointer");
  }
  if (n_options > 0 && !option_values) {
    return invalid("mc_run_table: option_values is null with n_options > 0");
  }
  *n_rows = 0;
  return guarded([&] {
    plcoh::TableConfig config;
    config.method = to_method(method);
    config.base = to_params(*params);
    config.lengths.assign(lengths, lengths + n_lengths);
    if (n_options > 0) {
      config.option_values.assign(option_values, option_values + n_options);
    }
    config.rho23_values.assign(rho23_values, rho23_values + n_rhos);
    config.est = to_options(*options);
    config.repetitions = repetitions;
    config.seed = params->seed;
    const std::vector<plcoh::CellResult> cells =
        plcoh::run_table(config, jobs);
    for (size_t i = 0; i < cells.size(); ++i) rows[i] = to_cell(cells[i]);
    *n_rows = cells.size();
  });
}

plcoh_status plcoh_mc_run_sweep(const plcoh_arfima_params* params,
                                const plcoh_estimate_options* options,
                                const size_t* lengths, size_t n_lengths,
                                int repetitions, int jobs,
                                plcoh_cell_result* rows, size_t* n_rows,
                                double decay_exponents[3]) {
  if (!params || !lengths || !rows || !n_rows || !decay_exponents) {
    return invalid("mc_run_sweep: null pointer");
  }
  *n_rows = 0;
  return guarded([&] {
    plcoh::SweepConfig config;
    config.base = to_params(*params);
    config.lengths.assign(lengths, lengths + n_lengths);
    if (options) config.est = to_options(*options);
    config.repetitions = repetitions;
    config.seed = params->seed;
    const std::vector<plcoh::MethodSweep> sweeps =
        plcoh::run_length_sweep(config, jobs);
    size_t row = 0;
    for (size_t m = 0; m < sweeps.size(); ++m) {
      decay_exponents[m] = sweeps[m].variance_decay_exponent;
      for (const plcoh::CellResult& cell : sweeps[m].cells) {
        rows[row++] = to_cell(cell);
      }
    }
    *n_rows = row;
  });
}

}  // extern "C"
