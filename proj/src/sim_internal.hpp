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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fcache/rng.hpp"
#include "fcache/sim.hpp"

namespace fcache::sim::detail {

inline std::uint64_t block_count(std::uint64_t items, std::uint64_t per_block) {
  return (items + per_block - 1) / per_block;
}

inline std::vector<double> cumulative(const std::vector<double>& pmf) {
  std::vector<double> cum(pmf.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) cum[i] = acc += pmf[i];
  return cum;
}

/// Inverse-CDF draw. Rounding slack at the top end lands on the last index
/// with positive mass.
inline std::size_t draw_index(const std::vector<double>& cum, double u) {
  const double scaled = u * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), scaled);
  std::size_t i = it == cum.end() ? cum.size() - 1 : static_cast<std::size_t>(it - cum.begin());
  while (i > 0 && cum[i] == cum[i - 1]) --i;
  return i;
}

__extension__ using U128 = unsigned __int128;

/// Mean and standard error from exact integer moments.
inline void finish_moments(std::uint64_t n, std::uint64_t sum, std::uint64_t sum_sq, double& mean, double& std_error) {
  mean = n ? static_cast<double>(sum) / static_cast<double>(n) : 0.0;
  std_error = 0.0;
  if (n < 2) return;
  const U128 num = static_cast<U128>(n) * sum_sq - static_cast<U128>(sum) * sum;
  const long double var = static_cast<long double>(num) / (static_cast<long double>(n) * static_cast<long double>(n - 1));
  std_error = static_cast<double>(std::sqrt(var / static_cast<long double>(n)));
}

inline void finish_report(SimReport& r, int k) {
  finish_moments(r.trials, r.sum, r.sum_sq, r.mean, r.std_error);
  r.normalized = r.mean / k;
  r.ci95 = 1.96 * r.std_error / k;
}

}  // namespace fcache::sim::detail
