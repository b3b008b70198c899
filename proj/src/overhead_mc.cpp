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

#include "fcache/gf.hpp"
#include "fcache/lrfc.hpp"
#include "sim_internal.hpp"

namespace fcache::sim {

double OverheadSample::full_rank_frequency(int delta) const {
  if (delta < 0 || trials == 0) return 0.0;
  std::uint64_t hits = 0;
  for (std::size_t d = 0; d < histogram.size() && d <= static_cast<std::size_t>(delta); ++d) hits += histogram[d];
  return static_cast<double>(hits) / static_cast<double>(trials);
}

OverheadSample overhead_monte_carlo(int k, unsigned q, std::uint64_t trials, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const gf::Field& field = gf::Field::of(q);
  const auto uk = static_cast<std::size_t>(k);
  const auto blocks = static_cast<std::int64_t>(detail::block_count(trials, kTrialsPerBlock));
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel
  {
    lrfc::Decoder dec(field, uk);
    std::vector<std::uint8_t> g(uk);
#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
      auto rng = make_stream(seed, static_cast<std::uint64_t>(b));
      const std::uint64_t first = static_cast<std::uint64_t>(b) * kTrialsPerBlock;
      const std::uint64_t n = std::min(kTrialsPerBlock, trials - first);
      auto& hist = partial[static_cast<std::size_t>(b)];
      for (std::uint64_t i = 0; i < n; ++i) {
        dec.reset();
        while (!dec.full_rank()) {
          for (auto& v : g) v = field.sample_raw(rng);
          dec.absorb(g);
        }
        const std::size_t d = dec.consumed() - uk;
        if (hist.size() <= d) hist.resize(d + 1, 0);
        ++hist[d];
      }
    }
  }

  OverheadSample out;
  out.trials = trials;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (const auto& hist : partial) {
    if (out.histogram.size() < hist.size()) out.histogram.resize(hist.size(), 0);
    for (std::size_t d = 0; d < hist.size(); ++d) {
      out.histogram[d] += hist[d];
      sum += d * hist[d];
      sum_sq += d * d * hist[d];
    }
  }
  detail::finish_moments(trials, sum, sum_sq, out.mean, out.std_error);
  return out;
}

}  // namespace fcache::sim
