#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "arfima.hpp"
#include "coherency.hpp"
#include "error.hpp"
#include "series.hpp"

using namespace plcoh;

namespace {

SeriesPair random_pair(std::mt19937_64& rng, std::size_t length) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> x(length), y(length);
  for (std::size_t i = 0; i < length; ++i) {
    x[i] = n(rng);
    y[i] = 0.4 * x[i] + n(rng);
  }
  return make_series_pair(std::move(x), std::move(y));
}

CoherencyProfile synthetic_power_law(Method method, double exponent,
                                     int scale_max) {
  CoherencyProfile p;
  p.method = method;
  for (int s = 1; s <= scale_max; ++s) {
    p.entries.push_back({static_cast<double>(s), std::pow(s, exponent)});
  }
  return p;
}

}  // namespace

TEST_CASE("squared correlation is the ratio of profile products") {
  std::mt19937_64 rng(7);
  const SeriesPair pair = random_pair(rng, 120);
  EstimateOptions opt;
  opt.s_min = 10;
  opt.s_max = 20;
  const ProfileTriple triple = cross_profiles(Method::Dcca, pair, opt);
  const CoherencyProfile coh = coherency_from_triple(triple);
  REQUIRE(coh.entries.size() == triple.xy.entries.size());
  for (std::size_t i = 0; i < coh.entries.size(); ++i) {
    const double vxy = triple.xy.entries[i].value;
    const double expected =
        vxy * vxy / (triple.xx.entries[i].value * triple.yy.entries[i].value);
    CHECK(coh.entries[i].value == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("squared correlation stays within the unit interval") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 100; ++trial) {
    const SeriesPair pair = random_pair(rng, 150 + (rng() % 200));
    EstimateOptions opt;
    for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
      const CoherencyProfile coh = coherency_profile(m, pair, opt);
      for (const ScalePoint& p : coh.entries) {
        CHECK(p.value >= 0.0);
        CHECK(p.value <= 1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("a series against itself has unit coherency and zero exponent") {
  std::mt19937_64 rng(55);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> x(500);
  for (double& v : x) v = n(rng);
  const SeriesPair pair = make_series_pair(x, x);
  EstimateOptions opt;
  for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    CAPTURE(method_name(m));
    const CoherencyProfile coh = coherency_profile(m, pair, opt);
    for (const ScalePoint& p : coh.entries) {
      CHECK(p.value == 1.0);  // exact: shared residuals cancel bitwise
    }
    const HurstEstimate est = estimate_h_rho(m, pair, opt);
    CHECK(est.value == 0.0);  // log of an all-ones profile is exactly zero
  }
}

TEST_CASE("coherency exponent is symmetric under argument exchange") {
  std::mt19937_64 rng(303);
  const SeriesPair pair = random_pair(rng, 400);
  const SeriesPair swapped = make_series_pair(pair.y, pair.x);
  EstimateOptions opt;
  for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    const HurstEstimate a = estimate_h_rho(m, pair, opt);
    const HurstEstimate b = estimate_h_rho(m, swapped, opt);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("coherency is invariant under positive rescaling") {
  std::mt19937_64 rng(606);
  const SeriesPair pair = random_pair(rng, 400);
  std::vector<double> sx(pair.x), sy(pair.y);
  for (double& v : sx) v *= 37.5;
  for (double& v : sy) v *= 0.004;
  const SeriesPair scaled = make_series_pair(std::move(sx), std::move(sy));
  EstimateOptions opt;
  for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    const CoherencyProfile a = coherency_profile(m, pair, opt);
    const CoherencyProfile b = coherency_profile(m, scaled, opt);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].value ==
            doctest::Approx(b.entries[i].value).epsilon(1e-10));
    }
  }
}

TEST_CASE("constant input has no defined coherency") {
  const SeriesPair pair =
      make_series_pair(std::vector<double>(100, 3.0),
                       std::vector<double>(100, -1.0));
  EstimateOptions opt;
  for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    CHECK_THROWS_AS(coherency_profile(m, pair, opt), Error);
    try {
      coherency_profile(m, pair, opt);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateSeries);
    }
  }
}

TEST_CASE("exponent fit recovers an injected power law exactly") {
  const ScaleGrid grid{GridKind::Lag, {}};
  for (const double h_rho : {-0.2, -0.05, 0.1}) {
    const CoherencyProfile p =
        synthetic_power_law(Method::Hxa, 4.0 * h_rho, 20);
    const HurstEstimate est = h_rho_from_profile(p, grid);
    CHECK(est.value == doctest::Approx(h_rho).epsilon(1e-10));
    CHECK(est.kind == ExponentKind::Hrho);
  }
}

TEST_CASE("zero-coherency scales are dropped, not floored") {
  ProfileTriple triple;
  triple.xy.method = triple.xx.method = triple.yy.method = Method::Hxa;
  for (int s = 1; s <= 6; ++s) {
    const double v = (s == 3) ? 0.0 : std::pow(s, -0.8);
    triple.xy.entries.push_back({static_cast<double>(s), v});
    triple.xx.entries.push_back({static_cast<double>(s), 1.0});
    triple.yy.entries.push_back({static_cast<double>(s), 1.0});
  }
  const CoherencyProfile coh = coherency_from_triple(triple);
  CHECK(coh.entries.size() == 6);  // zero numerator stays as rho2 = 0 ...
  const ScaleGrid grid{GridKind::Lag, {}};
  const HurstEstimate est = h_rho_from_profile(coh, grid);
  CHECK(est.n_points == 5);  // ... and is excluded from the log fit
  CHECK(est.value == doctest::Approx(-0.4).epsilon(1e-10));

  // A zero denominator drops the scale from the profile itself.
  triple.xx.entries[4].value = 0.0;
  const CoherencyProfile dropped = coherency_from_triple(triple);
  CHECK(dropped.entries.size() == 5);
  CHECK(dropped.dropped_scales == 1);
}

TEST_CASE("an exact power law is invariant to the fit range") {
  // Every lag-cutoff window fits the same law, so each sub-fit and hence
  // any average of them recovers the injected exponent.
  const CoherencyProfile p =
      synthetic_power_law(Method::Hxa, 4.0 * -0.2, 20);
  const ScaleGrid grid{GridKind::Lag, {}};
  for (int cutoff = 5; cutoff <= 20; ++cutoff) {
    CoherencyProfile window;
    window.method = p.method;
    for (const ScalePoint& sp : p.entries) {
      if (sp.scale <= cutoff) window.entries.push_back(sp);
    }
    CHECK(h_rho_from_profile(window, grid).value ==
          doctest::Approx(-0.2).epsilon(1e-10));
  }
}

TEST_CASE("jackknife with the minimal cutoff equals a single fit") {
  std::mt19937_64 rng(42);
  const SeriesPair pair = random_pair(rng, 300);
  EstimateOptions opt;
  opt.tau_max = 5;
  const JackknifeEstimate jk = estimate_h_rho_hxa_jackknife(pair, opt);
  CHECK(jk.fits_used == 1);
  CHECK(jk.fits_skipped == 0);

  opt.hxa_jackknife = false;
  const HurstEstimate single = estimate_h_rho(Method::Hxa, pair, opt);
  CHECK(jk.estimate.value == single.value);
}

TEST_CASE("jackknife requires at least the minimal cutoff") {
  std::mt19937_64 rng(43);
  const SeriesPair pair = random_pair(rng, 300);
  EstimateOptions opt;
  opt.tau_max = 4;
  CHECK_THROWS_AS(estimate_h_rho_hxa_jackknife(pair, opt), Error);
}

TEST_CASE("jackknife averages over all cutoffs") {
  std::mt19937_64 rng(44);
  const SeriesPair pair = random_pair(rng, 600);
  EstimateOptions opt;
  opt.tau_max = 20;
  const JackknifeEstimate jk = estimate_h_rho_hxa_jackknife(pair, opt);
  CHECK(jk.fits_used + jk.fits_skipped == 16);  // cutoffs 5..20

  // Reproduce the average from scratch.
  const CoherencyProfile coh = coherency_profile(Method::Hxa, pair, opt);
  const ScaleGrid grid{GridKind::Lag, {}};
  double sum = 0.0;
  int used = 0;
  for (int cutoff = 5; cutoff <= 20; ++cutoff) {
    CoherencyProfile window;
    window.method = coh.method;
    for (const ScalePoint& sp : coh.entries) {
      if (sp.scale <= cutoff) window.entries.push_back(sp);
    }
    sum += h_rho_from_profile(window, grid).value;
    ++used;
  }
  CHECK(jk.fits_used == used);
  CHECK(jk.estimate.value == doctest::Approx(sum / used).epsilon(1e-14));
}

TEST_CASE("full estimate report is consistent with the parts") {
  std::mt19937_64 rng(45);
  const SeriesPair pair = random_pair(rng, 500);
  EstimateOptions opt;
  for (const Method m : {Method::Dcca, Method::Dmca, Method::Hxa}) {
    const FullEstimates full = estimate_all(m, pair, opt);
    const HurstEstimate h_rho = estimate_h_rho(m, pair, opt);
    CHECK(full.h_rho.value == h_rho.value);
    const HurstEstimate h_xy = estimate_hxy(m, pair, opt);
    CHECK(full.h_xy.value == h_xy.value);
    CHECK(full.h_x.kind == ExponentKind::Hx);
    CHECK(full.h_y.kind == ExponentKind::Hy);
  }
}

TEST_CASE("independent inputs show low coherency on average") {
  ArfimaParams params;
  params.length = 10000;
  params.rho23 = 0.0;
  params.seed = 2026;
  EstimateOptions opt;
  double total = 0.0;
  std::size_t count = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const SeriesPair pair = generate_mc_arfima(params, rep);
    const CoherencyProfile coh = coherency_profile(Method::Dmca, pair, opt);
    for (const ScalePoint& p : coh.entries) {
      total += p.value;
      ++count;
    }
  }
  CHECK(total / static_cast<double>(count) < 0.05);
}
