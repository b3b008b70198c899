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

// Cache placement: choose x_1..x_n with sum x_j = M k.
//
// The bound objective and the MDS objective are both
//   const + sum_j p_j sum_h gamma_h (k - x_j h)^+
// which is separable and convex in each x_j: raising x_j by one lowers the
// term for hub count h by min(h, (k - x_j h)^+), a non-increasing sequence.
// Granting symbols one at a time to the file with the largest decrement is
// therefore optimal.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fcache/network_config.hpp"

namespace fcache::placement {

class Infeasible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SearchTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  PlacementVector x;
  double objective = 0.0;
};

/// Minimises the backhaul upper bound. At q = 2 the overhead bound does not
/// exist; the same argmin is returned and `objective` omits the constant.
Result optimize_bound(const NetworkConfig& config);

/// MDS baseline placement: same greedy, objective is the MDS rate.
Result optimize_mds(const NetworkConfig& config);

/// Exact minimiser of E[T] by enumerating every feasible vector.
/// Ties go to the lexicographically smallest vector.
Result optimize_exact(const NetworkConfig& config, std::uint64_t search_limit = 1'000'000);

/// Number of vectors with entries in [0, cap] summing to budget (saturating).
std::uint64_t feasible_count(int n, int cap, long budget);

/// Calls visit(x) for every feasible vector in lexicographic order.
void for_each_feasible(int n, int cap, long budget, const std::function<void(const std::vector<int>&)>& visit);

/// Greedy marginal allocation on a separable objective. `decrement(j, x)`
/// is the objective decrease from raising file j from x to x + 1; it must be
/// non-increasing in x. Ties go to the lowest index; once every decrement is
/// zero the remainder is dealt round-robin by index.
PlacementVector greedy_allocate(int n, int cap, long budget, const std::function<double(int, int)>& decrement);

}  // namespace fcache::placement
