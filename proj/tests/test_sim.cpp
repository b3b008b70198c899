// Copyright 2026 The fcache Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fcache/analysis.hpp"
#include "fcache/placement.hpp"
#include "fcache/sim.hpp"

namespace an = fcache::analysis;
namespace sim = fcache::sim;
using fcache::NetworkConfig;
using fcache::PlacementVector;

namespace {

NetworkConfig make(int n, int k, int M, unsigned q, double alpha, std::uint64_t trials,
                   std::vector<double> gamma = {1.0}) {
  NetworkConfig c;
  c.n = n;
  c.k = k;
  c.M = M;
  c.q = q;
  c.alpha = alpha;
  c.gamma = std::move(gamma);
  c.trials = trials;
  c.seed = 2024;
  return c;
}

struct ThreadCount {
  int saved = omp_get_max_threads();
  explicit ThreadCount(int n) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_SUITE("sim") {
  TEST_CASE("geometry: histogram sums to the sample count") {
    const auto h = sim::connectivity_distribution({45, 60}, 200000, 1);
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == h.samples);
    CHECK(h.samples == 200000);
    const auto g = h.gamma();
    double s = 0.0;
    for (double v : g) s += v;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    // The square-grid model never leaves a point uncovered at this radius.
    CHECK(h.uncovered() == 0.0);
  }

  TEST_CASE("geometry: spacing 60, radius 45 gives the published distribution") {
    const auto g = sim::connectivity_distribution({60, 45}, 1 << 21, 8).gamma();
    REQUIRE(g.size() == fcache::kPublishedConnectivity.size());
    for (std::size_t h = 0; h < g.size(); ++h) CHECK(std::abs(g[h] - fcache::kPublishedConnectivity[h]) <= 1e-3);
  }

  TEST_CASE("geometry: r = d / sqrt(2) covers every point") {
    const auto h = sim::connectivity_distribution({1.0, std::numbers::sqrt2 / 2 + 1e-12}, 100000, 3);
    CHECK(h.uncovered() == 0.0);
  }

  TEST_CASE("geometry: sparse hubs are mostly uncovered") {
    const auto h = sim::connectivity_distribution({100.0, 10.0}, 1000000, 4);
    const double expected = 1.0 - std::numbers::pi * 100.0 / 10000.0;
    CHECK(std::abs(h.uncovered() - expected) <= 4 * std::sqrt(expected * (1 - expected) / 1e6));
    CHECK(h.counts.size() <= 2);
  }

  TEST_CASE("geometry: small radius leaves gaps") {
    const auto h = sim::connectivity_distribution({45.0, 20.0}, 100000, 5);
    CHECK(h.uncovered() > 0.0);
  }

  TEST_CASE("geometry: stable when samples double") {
    const auto a = sim::connectivity_distribution({45, 60}, 1 << 20, 6).gamma();
    const auto b = sim::connectivity_distribution({45, 60}, 1 << 21, 7).gamma();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-3);
  }

  TEST_CASE("geometry: invalid input") {
    CHECK_THROWS_AS(sim::connectivity_distribution({0.0, 60}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sim::connectivity_distribution({45, -1.0}, 10, 1), std::invalid_argument);
  }

  TEST_CASE("geometry: serial and parallel kernels agree for any thread count") {
    const auto serial = sim::connectivity_distribution_serial({45, 60}, 300001, 9);
    for (int threads : {1, 3, 8}) {
      ThreadCount tc(threads);
      const auto par = sim::connectivity_distribution({45, 60}, 300001, 9);
      CHECK(par.counts == serial.counts);
      CHECK(par.samples == serial.samples);
    }
  }

  TEST_CASE("scheme names") {
    CHECK(sim::to_string(sim::Scheme::kMds) == "mds");
    CHECK(sim::scheme_from_string("lrfc") == sim::Scheme::kLrfc);
    CHECK_THROWS_AS(sim::scheme_from_string("raptor"), std::invalid_argument);
  }

  TEST_CASE("mds with everything cached has zero backhaul") {
    const auto c = make(20, 10, 20, 16, 0.0, 50000);
    const auto r = sim::simulate_delivery(c, PlacementVector(std::vector<int>(20, 10)), sim::Scheme::kMds);
    CHECK(r.sum == 0);
    CHECK(r.mean == 0.0);
    CHECK(r.std_error == 0.0);
  }

  TEST_CASE("no cache: lrfc mean is k + E[overhead]") {
    const auto c = make(10, 10, 0, 128, 0.0, 1000000);
    const auto r = sim::simulate_delivery(c, PlacementVector::zeros(10), sim::Scheme::kLrfc);
    const double expected = 10 + an::expected_overhead(10, 128);
    CHECK(std::abs(r.mean - expected) <= 3 * r.std_error);
    CHECK(r.normalized == doctest::Approx(r.mean / 10));
    CHECK(r.ci95 == doctest::Approx(1.96 * r.std_error / 10));
  }

  TEST_CASE("records follow the stated invariants") {
    auto c = make(8, 5, 3, 4, 0.6, 20000, {0.3, 0.5, 0.2});
    const auto x = fcache::placement::optimize_bound(c).x;
    sim::SimOptions opt;
    opt.keep_records = true;
    for (auto scheme : {sim::Scheme::kLrfc, sim::Scheme::kMds}) {
      const auto r = sim::simulate_delivery(c, x, scheme, opt);
      REQUIRE(r.records.size() == c.trials);
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        REQUIRE(rec.trial == i);
        REQUIRE(rec.file >= 1);
        REQUIRE(rec.file <= c.n);
        REQUIRE(rec.hubs >= 1);
        REQUIRE(rec.hubs <= 3);
        REQUIRE(rec.cached == static_cast<long>(x[static_cast<std::size_t>(rec.file - 1)]) * rec.hubs);
        REQUIRE(rec.backhaul >= 0);
        if (scheme == sim::Scheme::kMds) REQUIRE(rec.backhaul == std::max(0L, c.k - rec.cached));
        // Cached symbols alone can never exceed rank k.
        if (scheme == sim::Scheme::kLrfc) REQUIRE(rec.backhaul >= std::max(0L, c.k - rec.cached));
        sum += static_cast<std::uint64_t>(rec.backhaul);
      }
      CHECK(sum == r.sum);
    }
  }

  TEST_CASE("same seed gives the same record stream; different seed does not") {
    auto c = make(30, 10, 5, 16, 0.8, 10000, fcache::kPublishedConnectivity);
    const auto x = fcache::placement::optimize_bound(c).x;
    sim::SimOptions opt;
    opt.keep_records = true;
    const auto a = sim::simulate_delivery(c, x, sim::Scheme::kLrfc, opt);
    const auto b = sim::simulate_delivery(c, x, sim::Scheme::kLrfc, opt);
    CHECK(a.records == b.records);
    c.seed += 1;
    const auto d = sim::simulate_delivery(c, x, sim::Scheme::kLrfc, opt);
    CHECK(a.records != d.records);
  }

  TEST_CASE("serial reference reproduces the parallel kernel for any thread count") {
    auto c = make(25, 10, 4, 4, 0.8, 20000, fcache::kPublishedConnectivity);
    const auto x = fcache::placement::optimize_bound(c).x;
    sim::SimOptions opt;
    opt.keep_records = true;
    for (auto scheme : {sim::Scheme::kLrfc, sim::Scheme::kMds}) {
      const auto ref = sim::simulate_delivery_serial(c, x, scheme, opt);
      for (int threads : {1, 2, 7}) {
        ThreadCount tc(threads);
        const auto par = sim::simulate_delivery(c, x, scheme, opt);
        CHECK(par.sum == ref.sum);
        CHECK(par.sum_sq == ref.sum_sq);
        CHECK(par.mean == ref.mean);
        CHECK(par.std_error == ref.std_error);
        CHECK(par.records == ref.records);
      }
    }
  }

  TEST_CASE("overhead Monte Carlo: serial and parallel agree") {
    const auto ref = sim::overhead_monte_carlo_serial(10, 4, 50000, 17);
    for (int threads : {1, 4}) {
      ThreadCount tc(threads);
      const auto par = sim::overhead_monte_carlo(10, 4, 50000, 17);
      CHECK(par.histogram == ref.histogram);
      CHECK(par.mean == ref.mean);
      CHECK(par.std_error == ref.std_error);
    }
    CHECK(std::abs(ref.mean - an::expected_overhead(10, 4)) <= 3 * ref.std_error);
  }

  TEST_CASE("payload mode decodes every block and matches rank-only statistics") {
    auto c = make(6, 8, 2, 16, 0.5, 4000, {0.5, 0.5});
    const auto x = fcache::placement::optimize_bound(c).x;
    sim::SimOptions opt;
    opt.payload_symbols = 16;
    const auto full = sim::simulate_delivery(c, x, sim::Scheme::kLrfc, opt);
    CHECK(full.decode_mismatches == 0);
    CHECK(full.trials == 4000);
    const double analytic = an::expected_backhaul(c, x).expected;
    CHECK(std::abs(full.mean - analytic) <= 4 * full.std_error);
  }

  TEST_CASE("crossvalidate") {
    auto c = make(10, 10, 0, 16, 0.0, 200000);
    const auto cv = sim::crossvalidate(c, PlacementVector::zeros(10));
    CHECK(cv.analytic == doctest::Approx(10 + an::expected_overhead(10, 16)));
    REQUIRE(cv.bound.has_value());
    CHECK(*cv.bound == doctest::Approx(10 + an::delta_u(16)));
    CHECK_FALSE(cv.flagged);

    c.q = 2;
    const auto cv2 = sim::crossvalidate(c, PlacementVector::zeros(10));
    CHECK_FALSE(cv2.bound.has_value());

    const auto mds = sim::crossvalidate(c, PlacementVector::zeros(10), sim::Scheme::kMds);
    CHECK(mds.analytic == 10.0);
    CHECK(mds.simulated.mean == 10.0);
    CHECK(mds.z_score == 0.0);
    CHECK_FALSE(mds.bound.has_value());
  }

  TEST_CASE("z score edge cases") {
    CHECK(sim::z_score(1.0, 1.0, 0.0) == 0.0);
    CHECK(std::isinf(sim::z_score(1.5, 1.0, 0.0)));
    CHECK(sim::z_score(1.2, 1.0, 0.1) == doctest::Approx(2.0));
  }

  TEST_CASE("trial csv") {
    const std::vector<sim::TrialRecord> recs = {{0, 3, 2, 8, 3}, {1, 1, 1, 10, 0}};
    std::ostringstream os;
    sim::write_trial_csv(os, recs);
    CHECK(os.str() == "trial,j,h,z,t\n0,3,2,8,3\n1,1,1,10,0\n");
  }
}
