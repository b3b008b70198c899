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

#include <cmath>
#include <numeric>

#include "fcache/analysis.hpp"
#include "fcache/placement.hpp"
#include "oracles.hpp"

namespace an = fcache::analysis;
namespace pl = fcache::placement;
using fcache::NetworkConfig;
using fcache::PlacementVector;

namespace {

NetworkConfig make(int n, int k, int M, unsigned q, double alpha, std::vector<double> gamma = {1.0}) {
  NetworkConfig c;
  c.n = n;
  c.k = k;
  c.M = M;
  c.q = q;
  c.alpha = alpha;
  c.gamma = std::move(gamma);
  return c;
}

// Zipf exponent that gives p = (1 - b, b) for two files.
double two_file_alpha(double b) { return std::log2((1.0 - b) / b); }

}  // namespace

TEST_SUITE("placement") {
  TEST_CASE("M = 0 places nothing") {
    const auto c = make(5, 10, 0, 16, 0.8);
    const auto r = pl::optimize_bound(c);
    CHECK(r.x == PlacementVector::zeros(5));
    CHECK(r.objective == doctest::Approx(an::delta_u(16) + 10));
  }

  TEST_CASE("uniform popularity gives a balanced allocation") {
    const auto c = make(10, 10, 4, 128, 0.0);
    const auto r = pl::optimize_bound(c);
    CHECK(r.x == PlacementVector(std::vector<int>(10, 4)));
    CHECK(pl::optimize_mds(c).x == r.x);
  }

  TEST_CASE("two files, skewed popularity") {
    const auto c = make(2, 2, 1, 16, two_file_alpha(0.1));
    CHECK(an::zipf_pmf(2, c.alpha)[0] == doctest::Approx(0.9));
    CHECK(pl::optimize_bound(c).x == PlacementVector({2, 0}));
    CHECK(pl::optimize_mds(c).x == PlacementVector({2, 0}));
    CHECK(pl::optimize_bound(c).objective - pl::optimize_mds(c).objective == doctest::Approx(an::delta_u(16)));
  }

  TEST_CASE("bound placement against the exact optimum, n = 2, k = 3") {
    const auto c = make(2, 3, 1, 16, two_file_alpha(0.2));
    CHECK(pl::feasible_count(2, 3, 3) == 4);
    const auto exact = pl::optimize_exact(c);
    const auto bound = pl::optimize_bound(c);
    const double at_bound = an::expected_backhaul(c, bound.x).expected;
    CHECK(exact.objective <= at_bound + 1e-12);
    CHECK(exact.objective == doctest::Approx(an::expected_backhaul(c, exact.x).expected).epsilon(1e-12));
    // Both solvers pick the popular file.
    CHECK(bound.x == PlacementVector({3, 0}));
    CHECK(exact.x == PlacementVector({3, 0}));
  }

  TEST_CASE("exact: full budget and single file") {
    const auto full = make(3, 3, 3, 16, 0.5);
    CHECK(pl::optimize_exact(full).x == PlacementVector({3, 3, 3}));
    const auto one = make(1, 4, 1, 4, 0.0);
    CHECK(pl::optimize_exact(one).x == PlacementVector({4}));
    CHECK(pl::optimize_bound(one).x == PlacementVector({4}));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(pl::optimize_bound(make(2, 5, 3, 16, 0.0)), pl::Infeasible);
    CHECK_THROWS_AS(pl::optimize_mds(make(2, 5, 3, 16, 0.0)), pl::Infeasible);
    auto wide = make(2, 5, 3, 16, 0.0);
    wide.cap_headroom = 3;
    CHECK_NOTHROW(pl::optimize_bound(wide));
    CHECK_THROWS_AS(pl::optimize_mds(wide), pl::Infeasible);
    CHECK_THROWS_AS(pl::optimize_exact(make(30, 10, 10, 16, 0.0), 1000), pl::SearchTooLarge);
  }

  TEST_CASE("feasible count matches enumeration") {
    for (int n = 1; n <= 4; ++n) {
      for (int cap = 0; cap <= 4; ++cap) {
        for (long budget = 0; budget <= n * cap; ++budget) {
          std::uint64_t seen = 0;
          pl::for_each_feasible(n, cap, budget, [&](const std::vector<int>& x) {
            REQUIRE(std::accumulate(x.begin(), x.end(), 0L) == budget);
            ++seen;
          });
          REQUIRE(seen == pl::feasible_count(n, cap, budget));
        }
      }
    }
  }

  TEST_CASE("greedy allocate: ties, round robin, cap") {
    auto flat = [](int, int) { return 1.0; };
    CHECK(pl::greedy_allocate(3, 2, 4, flat) == PlacementVector({2, 1, 1}));
    auto none = [](int, int) { return 0.0; };
    CHECK(pl::greedy_allocate(3, 2, 4, none) == PlacementVector({2, 1, 1}));
    CHECK(pl::greedy_allocate(3, 2, 6, none) == PlacementVector({2, 2, 2}));
    CHECK_THROWS_AS(pl::greedy_allocate(3, 2, 7, none), pl::Infeasible);
  }

  TEST_CASE("property: greedy equals exhaustive minimum on small instances") {
    const std::vector<std::vector<double>> gammas = {{1.0}, fcache::kPublishedConnectivity, {0.25, 0.25, 0.5}};
    for (unsigned q : {4u, 16u}) {
      for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 4; ++k) {
          for (int M = 0; M <= n; ++M) {
            for (double alpha : {0.0, 0.8, 2.0}) {
              for (const auto& g : gammas) {
                const auto c = make(n, k, M, q, alpha, g);
                const auto r = pl::optimize_bound(c);
                REQUIRE(r.x.total() == c.budget());
                const double best = fcache::oracle::exhaustive_min(n, k, c.budget(), [&](const std::vector<int>& x) {
                  return fcache::oracle::coverage_gap_direct(c, x);
                });
                REQUIRE(std::abs(r.objective - (an::delta_u(q) + best)) <= 1e-12 * (1 + std::abs(r.objective)));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("property: popularity ordering and budget exactness") {
    for (double alpha : {0.3, 0.8, 1.5}) {
      for (int M : {1, 7, 23, 60}) {
        const auto c = make(100, 10, M, 128, alpha, fcache::kPublishedConnectivity);
        const auto x = pl::optimize_bound(c).x;
        REQUIRE(x.total() == c.budget());
        for (std::size_t j = 1; j < x.size(); ++j) REQUIRE(x[j - 1] >= x[j]);
      }
    }
  }

  TEST_CASE("property: objective is non-increasing in M and alpha") {
    for (double alpha : {0.0, 0.8}) {
      double prev = std::numeric_limits<double>::infinity();
      for (int M = 0; M <= 40; M += 4) {
        const double obj = pl::optimize_bound(make(40, 10, M, 4, alpha, fcache::kPublishedConnectivity)).objective;
        REQUIRE(obj <= prev + 1e-12);
        prev = obj;
      }
    }
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha = 0.0; alpha <= 2.0; alpha += 0.25) {
      const double obj = pl::optimize_bound(make(50, 10, 10, 16, alpha, fcache::kPublishedConnectivity)).objective;
      REQUIRE(obj <= prev + 1e-12);
      prev = obj;
    }
  }

  TEST_CASE("q = 2 objective omits the overhead constant") {
    const auto c = make(4, 4, 2, 2, 0.7);
    const auto r = pl::optimize_bound(c);
    CHECK(r.objective == doctest::Approx(an::coverage_gap(c, r.x)));
    CHECK(r.x == pl::optimize_bound(make(4, 4, 2, 128, 0.7)).x);
  }
}
