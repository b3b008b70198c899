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

#include <cmath>
#include <limits>

#include "fcache/analysis.hpp"
#include "fcache/sim.hpp"

namespace fcache::sim {

double z_score(double empirical, double analytic, double std_error) {
  const double diff = empirical - analytic;
  if (std_error > 0.0) return diff / std_error;
  if (std::abs(diff) <= 1e-12) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

CrossValidation crossvalidate(const NetworkConfig& config, const PlacementVector& x, Scheme scheme,
                              const SimOptions& options) {
  CrossValidation cv;
  cv.scheme = scheme;
  if (scheme == Scheme::kMds) {
    cv.analytic = analysis::mds_expected_backhaul(config, x).expected;
  } else {
    const auto report = analysis::expected_backhaul(config, x);
    cv.analytic = report.expected;
    cv.bound = report.upper_bound;
  }
  cv.simulated = simulate_delivery(config, x, scheme, options);
  cv.z_score = z_score(cv.simulated.mean, cv.analytic, cv.simulated.std_error);
  cv.flagged = !(std::abs(cv.z_score) <= 3.0);
  return cv;
}

}  // namespace fcache::sim
