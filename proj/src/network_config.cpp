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

#include "fcache/network_config.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace fcache {

void NetworkConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (M < 0) throw std::invalid_argument("M must be >= 0");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite and >= 0");
  if (gamma.empty()) throw std::invalid_argument("gamma must have at least one entry");
  for (double g : gamma) {
    if (!(g >= 0.0)) throw std::invalid_argument("gamma entries must be non-negative");
  }
  const double sum = std::accumulate(gamma.begin(), gamma.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("gamma must sum to 1 (got " + std::to_string(sum) + ")");
  }
  if (cap_headroom < 0) throw std::invalid_argument("cap_headroom must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

PlacementVector::PlacementVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int x : counts_) {
    if (x < 0) throw std::invalid_argument("placement entries must be non-negative");
  }
}

long PlacementVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0L);
}

void PlacementVector::validate_for(const NetworkConfig& config, bool enforce_cap) const {
  if (counts_.size() != static_cast<std::size_t>(config.n)) {
    throw std::invalid_argument("placement has " + std::to_string(counts_.size()) + " entries, expected n = " +
                                std::to_string(config.n));
  }
  if (!enforce_cap) return;
  for (int x : counts_) {
    if (x > config.cap()) {
      throw std::invalid_argument("placement entry " + std::to_string(x) + " exceeds cap " +
                                  std::to_string(config.cap()));
    }
  }
}

}  // namespace fcache
