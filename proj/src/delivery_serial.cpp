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

// Reference kernels: one plain loop over trials, a fresh decoder per trial.
// Kept for testing the parallel kernels and as the benchmark baseline.

#include "fcache/analysis.hpp"
#include "fcache/gf.hpp"
#include "fcache/lrfc.hpp"
#include "sim_internal.hpp"

namespace fcache::sim {

SimReport simulate_delivery_serial(const NetworkConfig& config, const PlacementVector& x, Scheme scheme,
                                   const SimOptions& options) {
  config.validate();
  x.validate_for(config, scheme == Scheme::kMds);
  const gf::Field& field = gf::Field::of(config.q);
  const auto hub_cum = detail::cumulative(config.gamma);
  const auto file_cum = detail::cumulative(analysis::zipf_pmf(config.n, config.alpha));
  const auto k = static_cast<std::size_t>(config.k);

  SimReport report;
  report.trials = config.trials;
  Rng rng;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    if (trial % kTrialsPerBlock == 0) rng = make_stream(config.seed, trial / kTrialsPerBlock);
    const int h = static_cast<int>(detail::draw_index(hub_cum, uniform01(rng))) + 1;
    const auto j = detail::draw_index(file_cum, uniform01(rng));
    const long z = static_cast<long>(x[j]) * h;

    long t = 0;
    if (scheme == Scheme::kMds) {
      t = std::max(0L, config.k - z);
    } else {
      std::optional<lrfc::InputBlock> block;
      if (options.payload_symbols > 0) block = lrfc::InputBlock::random(field, k, options.payload_symbols, rng);
      lrfc::Decoder dec(field, k, options.payload_symbols);
      auto next = [&] {
        if (block) return lrfc::encode_next(*block, rng);
        lrfc::CodedSymbol s;
        s.coefficients.resize(k);
        for (auto& g : s.coefficients) g = field.sample_raw(rng);
        return s;
      };
      for (long i = 0; i < z && !dec.full_rank(); ++i) dec.absorb(next());
      for (; !dec.full_rank(); ++t) dec.absorb(next());
      if (block && !(dec.solve() == *block)) ++report.decode_mismatches;
    }

    report.sum += static_cast<std::uint64_t>(t);
    report.sum_sq += static_cast<std::uint64_t>(t * t);
    if (options.keep_records) report.records.push_back({trial, static_cast<int>(j) + 1, h, z, t});
  }
  detail::finish_report(report, config.k);
  return report;
}

OverheadSample overhead_monte_carlo_serial(int k, unsigned q, std::uint64_t trials, std::uint64_t seed) {
  const gf::Field& field = gf::Field::of(q);
  OverheadSample out;
  out.trials = trials;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  Rng rng;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    if (trial % kTrialsPerBlock == 0) rng = make_stream(seed, trial / kTrialsPerBlock);
    const auto d = lrfc::measure_overhead(field, static_cast<std::size_t>(k), rng);
    if (out.histogram.size() <= d) out.histogram.resize(d + 1, 0);
    ++out.histogram[d];
    sum += d;
    sum_sq += d * d;
  }
  detail::finish_moments(trials, sum, sum_sq, out.mean, out.std_error);
  return out;
}

}  // namespace fcache::sim
