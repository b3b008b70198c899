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

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fcache {

/// Free parameters of one hub-and-satellite caching scenario.
struct NetworkConfig {
  int n = 100;         // library size (files)
  int k = 10;          // input symbols per file
  int M = 0;           // cache size per hub, in files
  unsigned q = 128;    // field order
  double alpha = 0.0;  // Zipf exponent
  // gamma[h - 1] is the probability that a user reaches exactly h hubs.
  std::vector<double> gamma{1.0};
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  // Per-file placement cap is k + cap_headroom.
  int cap_headroom = 0;
  double tol = 1e-12;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;

  int cap() const noexcept { return k + cap_headroom; }
  long budget() const noexcept { return static_cast<long>(M) * k; }
  int max_hubs() const noexcept { return static_cast<int>(gamma.size()); }
};

/// Coded symbols of each file cached in every hub.
class PlacementVector {
 public:
  PlacementVector() = default;
  explicit PlacementVector(std::vector<int> counts);
  static PlacementVector zeros(int n) { return PlacementVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  std::size_t size() const noexcept { return counts_.size(); }
  int operator[](std::size_t j) const { return counts_[j]; }
  int& operator[](std::size_t j) { return counts_[j]; }
  const std::vector<int>& counts() const noexcept { return counts_; }
  long total() const noexcept;

  /// Length n, non-negative entries, optional per-entry cap.
  void validate_for(const NetworkConfig& config, bool enforce_cap) const;

  friend bool operator==(const PlacementVector&, const PlacementVector&) = default;
  friend auto operator<=>(const PlacementVector&, const PlacementVector&) = default;

 private:
  std::vector<int> counts_;
};

/// Connectivity distribution reported in the evaluation scenarios
/// (user within reach of 1, 2, 3, 4 hubs).
inline const std::vector<double> kPublishedConnectivity = {0.2907, 0.6591, 0.0430, 0.0072};

}  // namespace fcache
