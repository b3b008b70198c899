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
#include <stdexcept>

#include "sim_internal.hpp"

namespace fcache::sim {
namespace {

void check(const GridGeometry& geom) {
  if (!(geom.spacing_km > 0.0) || !(geom.radius_km > 0.0)) {
    throw std::invalid_argument("grid spacing and coverage radius must be positive");
  }
}

// Hubs sit at (i d, j d). Counts those within r of (px, py) in [0, d)^2.
int hubs_in_reach(const GridGeometry& geom, int reach, double px, double py) {
  const double r2 = geom.radius_km * geom.radius_km;
  int count = 0;
  for (int i = -reach; i <= reach + 1; ++i) {
    const double dx = px - i * geom.spacing_km;
    for (int j = -reach; j <= reach + 1; ++j) {
      const double dy = py - j * geom.spacing_km;
      if (dx * dx + dy * dy <= r2) ++count;
    }
  }
  return count;
}

int reach_of(const GridGeometry& geom) { return static_cast<int>(std::ceil(geom.radius_km / geom.spacing_km)); }

std::size_t max_hubs(int reach) { return static_cast<std::size_t>((2 * reach + 2) * (2 * reach + 2)); }

}  // namespace

double ConnectivityHistogram::mass(std::size_t h) const {
  if (samples == 0 || h >= counts.size()) return 0.0;
  return static_cast<double>(counts[h]) / static_cast<double>(samples);
}

std::vector<double> ConnectivityHistogram::gamma() const {
  const std::uint64_t covered = samples - (counts.empty() ? 0 : counts[0]);
  if (covered == 0) throw std::domain_error("no sampled position is covered by any hub");
  std::size_t top = counts.size();
  while (top > 1 && counts[top - 1] == 0) --top;
  std::vector<double> g;
  for (std::size_t h = 1; h < top; ++h) g.push_back(static_cast<double>(counts[h]) / static_cast<double>(covered));
  return g;
}

ConnectivityHistogram connectivity_distribution(const GridGeometry& geom, std::uint64_t samples, std::uint64_t seed) {
  check(geom);
  const int reach = reach_of(geom);
  const auto blocks = static_cast<std::int64_t>(detail::block_count(samples, kSamplesPerBlock));
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(blocks),
                                                  std::vector<std::uint64_t>(max_hubs(reach) + 1, 0));

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    auto rng = make_stream(seed, static_cast<std::uint64_t>(b));
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kSamplesPerBlock;
    const std::uint64_t n = std::min(kSamplesPerBlock, samples - first);
    auto& hist = partial[static_cast<std::size_t>(b)];
    for (std::uint64_t s = 0; s < n; ++s) {
      const double px = uniform01(rng) * geom.spacing_km;
      const double py = uniform01(rng) * geom.spacing_km;
      ++hist[static_cast<std::size_t>(hubs_in_reach(geom, reach, px, py))];
    }
  }

  ConnectivityHistogram out;
  out.samples = samples;
  out.counts.assign(max_hubs(reach) + 1, 0);
  for (const auto& hist : partial) {
    for (std::size_t h = 0; h < hist.size(); ++h) out.counts[h] += hist[h];
  }
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

ConnectivityHistogram connectivity_distribution_serial(const GridGeometry& geom, std::uint64_t samples,
                                                       std::uint64_t seed) {
  check(geom);
  ConnectivityHistogram out;
  out.samples = samples;
  const double r2 = geom.radius_km * geom.radius_km;
  const int reach = reach_of(geom);
  Rng rng;
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (s % kSamplesPerBlock == 0) rng = make_stream(seed, s / kSamplesPerBlock);
    const double px = uniform01(rng) * geom.spacing_km;
    const double py = uniform01(rng) * geom.spacing_km;
    std::size_t count = 0;
    for (int i = -reach; i <= reach + 1; ++i) {
      for (int j = -reach; j <= reach + 1; ++j) {
        const double dx = px - i * geom.spacing_km;
        const double dy = py - j * geom.spacing_km;
        if (dx * dx + dy * dy <= r2) ++count;
      }
    }
    if (out.counts.size() <= count) out.counts.resize(count + 1, 0);
    ++out.counts[count];
  }
  if (out.counts.empty()) out.counts.push_back(0);
  return out;
}

}  // namespace fcache::sim
