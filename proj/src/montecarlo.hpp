#pragma once

#include <cstdint>
#include <vector>

#include "arfima.hpp"
#include "coherency.hpp"

namespace plcoh {

// One simulation cell: a generator configuration estimated R times with one
// method. `option_value` is the cell's position on the method's option axis
// (s_min for DCCA, kappa_max for DMCA, tau_max for HXA) and is carried
// through to the result for reporting; 0 derives it from `options`, the
// fully resolved estimator configuration.
struct CellSpec {
  Method method = Method::Dcca;
  ArfimaParams params;       // length and rho23 of the cell live here
  EstimateOptions options;
  int option_value = 0;
  int repetitions = 1000;
  std::uint64_t seed = 0;
};

struct CellResult {
  Method method = Method::Dcca;
  std::size_t length = 0;
  int option_value = 0;
  double rho23 = 0.0;
  double h_rho_true = 0.0;
  double mean = 0.0;
  double bias = 0.0;
  double sd = 0.0;    // sample SD, divisor n-1; 0 when n_effective < 2
  double mse = 0.0;   // bias^2 + sd^2
  int n_effective = 0;
  int failures = 0;
};

// Runs one cell: repetition r draws its pair from substream (seed, r) and is
// estimated independently, so the fold over repetitions is a fixed-order
// reduction and the result does not depend on `jobs`. Repetitions whose
// generation or estimation throws are excluded and counted as failures.
// jobs <= 0 selects the hardware concurrency.
CellResult run_cell(const CellSpec& spec, int jobs = 0);

// Cartesian grid of cells for one method, mirroring one results table:
// rows ordered by length, then option value, then rho23. Every cell is run
// with the same base seed (common random numbers across the option and rho
// axes), which sharpens cross-cell comparisons without affecting
// per-cell validity.
struct TableConfig {
  Method method = Method::Dmca;
  ArfimaParams base;                      // length/rho23/seed overridden per cell
  std::vector<std::size_t> lengths = {500, 1000, 5000};
  std::vector<int> option_values;         // empty: default_option_values(method)
  std::vector<double> rho23_values = {0.1, 0.5, 0.9};
  EstimateOptions est;
  int repetitions = 1000;
  std::uint64_t seed = 0;
};

// The option axes studied in the reference tables.
std::vector<int> default_option_values(Method method);

// Applies one option value to the axis it controls for `method`.
EstimateOptions apply_option(Method method, EstimateOptions base, int value);

// Cells that fail outright (not per-repetition failures but a whole-cell
// error) are reported with n_effective = 0, failures = repetitions and NaN
// summary statistics; the table run continues.
std::vector<CellResult> run_table(const TableConfig& config, int jobs = 0);

// Length sweep at perfect innovation correlation with each method's
// best-performing options, used to study how estimator variance decays with
// series length. `variance_decay_exponent` is the slope of log variance
// against log length.
struct SweepConfig {
  ArfimaParams base;                      // rho23 forced to 1 per cell
  std::vector<std::size_t> lengths = {500, 2000, 8000, 32000};
  // Best options per method. For DCCA the sweep defaults to non-overlapping
  // boxes on a linear scale grid: at the long lengths studied here the
  // overlapping-box scan is far more expensive, and the linear grid weights
  // the large scales where the perfectly coupled pair loses coherence.
  EstimateOptions est{.box_step = 0, .s_step = 10};
  int repetitions = 300;
  std::uint64_t seed = 0;
};

struct MethodSweep {
  Method method = Method::Dcca;
  std::vector<CellResult> cells;          // ordered by length
  double variance_decay_exponent = 0.0;
  int exponent_points = 0;                // lengths with positive variance
};

std::vector<MethodSweep> run_length_sweep(const SweepConfig& config,
                                          int jobs = 0);

}  // namespace plcoh
