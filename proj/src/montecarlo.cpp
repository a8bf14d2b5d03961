#include "montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "error.hpp"
#include "logfit.hpp"

namespace plcoh {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// The option-axis value a configuration sits at for `method`.
int axis_value(Method method, const EstimateOptions& options) {
  switch (method) {
    case Method::Dcca:
      return options.s_min;
    case Method::Dmca:
      return options.kappa_max;
    case Method::Hxa:
      return options.tau_max;
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace

CellResult run_cell(const CellSpec& spec, int jobs) {
  if (spec.repetitions < 1) {
    fail(ErrorCode::InvalidArgument, "repetitions must be >= 1");
  }
  validate_params(spec.params);

  const int reps = spec.repetitions;
  std::vector<double> values(static_cast<std::size_t>(reps), 0.0);
  std::vector<char> ok(static_cast<std::size_t>(reps), 0);

  std::atomic<int> next{0};
  std::mutex fatal_mutex;
  std::exception_ptr fatal;

  auto worker = [&]() {
    for (;;) {
      const int rep = next.fetch_add(1, std::memory_order_relaxed);
      if (rep >= reps) return;
      try {
        ArfimaParams params = spec.params;
        params.seed = spec.seed;
        const SeriesPair pair =
            generate_mc_arfima(params, static_cast<std::uint64_t>(rep));
        values[static_cast<std::size_t>(rep)] =
            estimate_h_rho(spec.method, pair, spec.options).value;
        ok[static_cast<std::size_t>(rep)] = 1;
      } catch (const Error&) {
        // Per-repetition estimator failure: excluded and counted.
      } catch (...) {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        return;
      }
    }
  };

  const int n_threads = std::min(resolve_jobs(jobs), reps);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  // Fixed-order fold over repetition index, so the summary is independent of
  // how repetitions were scheduled across threads.
  CellResult out;
  out.method = spec.method;
  out.length = spec.params.length;
  out.option_value = spec.option_value != 0
                         ? spec.option_value
                         : axis_value(spec.method, spec.options);
  out.rho23 = spec.params.rho23;
  out.h_rho_true = theoretical_h_rho(spec.params);

  double sum = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    if (ok[static_cast<std::size_t>(rep)]) {
      sum += values[static_cast<std::size_t>(rep)];
      ++out.n_effective;
    } else {
      ++out.failures;
    }
  }
  if (out.n_effective == 0) {
    fail(ErrorCode::AllRepetitionsFailed,
         "every repetition failed for " + std::string(method_name(spec.method)) +
             " at length " + std::to_string(spec.params.length));
  }
  out.mean = sum / out.n_effective;
  out.bias = out.mean - out.h_rho_true;
  if (out.n_effective >= 2) {
    double ss = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      if (!ok[static_cast<std::size_t>(rep)]) continue;
      const double d = values[static_cast<std::size_t>(rep)] - out.mean;
      ss += d * d;
    }
    out.sd = std::sqrt(ss / (out.n_effective - 1));
  }
  out.mse = out.bias * out.bias + out.sd * out.sd;
  return out;
}

std::vector<int> default_option_values(Method method) {
  switch (method) {
    case Method::Dcca:
      return {10, 50, 100};
    case Method::Dmca:
      return {21, 51, 101};
    case Method::Hxa:
      return {20, 50, 100};
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

EstimateOptions apply_option(Method method, EstimateOptions base, int value) {
  switch (method) {
    case Method::Dcca:
      base.s_min = value;
      break;
    case Method::Dmca:
      base.kappa_max = value;
      break;
    case Method::Hxa:
      base.tau_max = value;
      break;
  }
  return base;
}

std::vector<CellResult> run_table(const TableConfig& config, int jobs) {
  if (config.lengths.empty() || config.rho23_values.empty()) {
    fail(ErrorCode::InvalidArgument, "table axes must be nonempty");
  }
  const std::vector<int> options = config.option_values.empty()
                                       ? default_option_values(config.method)
                                       : config.option_values;

  std::vector<CellResult> rows;
  rows.reserve(config.lengths.size() * options.size() *
               config.rho23_values.size());
  for (const std::size_t length : config.lengths) {
    for (const int option : options) {
      for (const double rho : config.rho23_values) {
        CellSpec spec;
        spec.method = config.method;
        spec.params = config.base;
        spec.params.length = length;
        spec.params.rho23 = rho;
        spec.options = apply_option(config.method, config.est, option);
        spec.option_value = option;
        spec.repetitions = config.repetitions;
        spec.seed = config.seed;
        try {
          rows.push_back(run_cell(spec, jobs));
        } catch (const Error&) {
          CellResult failed;
          failed.method = spec.method;
          failed.length = length;
          failed.option_value = option;
          failed.rho23 = rho;
          failed.h_rho_true = theoretical_h_rho(spec.params);
          const double nan = std::numeric_limits<double>::quiet_NaN();
          failed.mean = failed.bias = failed.sd = failed.mse = nan;
          failed.failures = config.repetitions;
          rows.push_back(failed);
        }
      }
    }
  }
  return rows;
}

std::vector<MethodSweep> run_length_sweep(const SweepConfig& config, int jobs) {
  if (config.lengths.empty()) {
    fail(ErrorCode::InvalidArgument, "sweep lengths must be nonempty");
  }
  std::vector<MethodSweep> out;
  for (const Method method : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    MethodSweep sweep;
    sweep.method = method;
    for (const std::size_t length : config.lengths) {
      CellSpec spec;
      spec.method = method;
      spec.params = config.base;
      spec.params.length = length;
      spec.params.rho23 = 1.0;
      spec.options = config.est;
      spec.option_value = axis_value(method, spec.options);
      spec.repetitions = config.repetitions;
      spec.seed = config.seed;
      sweep.cells.push_back(run_cell(spec, jobs));
    }
    std::vector<ScalePoint> var_points;
    for (const CellResult& cell : sweep.cells) {
      var_points.push_back(
          {static_cast<double>(cell.length), cell.sd * cell.sd});
    }
    try {
      const LogLogFit fit = loglog_fit(var_points);
      sweep.variance_decay_exponent = fit.slope;
      sweep.exponent_points = fit.n_points;
    } catch (const Error&) {
      // Fewer than 3 usable lengths: cells are still reported, the decay
      // exponent is not defined.
      sweep.variance_decay_exponent =
          std::numeric_limits<double>::quiet_NaN();
      sweep.exponent_points = 0;
    }
    out.push_back(std::move(sweep));
  }
  return out;
}

}  // namespace plcoh
