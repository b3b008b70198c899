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

#include <ostream>
#include <stdexcept>

#include "fcache/analysis.hpp"
#include "fcache/gf.hpp"
#include "fcache/lrfc.hpp"
#include "sim_internal.hpp"

namespace fcache::sim {

std::string to_string(Scheme s) { return s == Scheme::kLrfc ? "lrfc" : "mds"; }

Scheme scheme_from_string(const std::string& s) {
  if (s == "lrfc") return Scheme::kLrfc;
  if (s == "mds") return Scheme::kMds;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected lrfc or mds)");
}

namespace {

struct BlockResult {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t mismatches = 0;
  std::vector<TrialRecord> records;
};

// Per-thread scratch for one worker.
struct Worker {
  const gf::Field& field;
  int k;
  lrfc::Decoder rank_only;
  std::vector<std::uint8_t> coeffs;

  Worker(const gf::Field& f, int k_) : field(f), k(k_), rank_only(f, static_cast<std::size_t>(k_)), coeffs(static_cast<std::size_t>(k_)) {}

  // Returns symbols needed beyond the z cached ones.
  long lrfc_rank_only(long z, Rng& rng) {
    rank_only.reset();
    for (long i = 0; i < z && !rank_only.full_rank(); ++i) absorb_fresh(rng);
    long t = 0;
    while (!rank_only.full_rank()) {
      absorb_fresh(rng);
      ++t;
    }
    return t;
  }

  long lrfc_with_payload(long z, std::size_t payload, Rng& rng, std::uint64_t& mismatches) {
    const auto block = lrfc::InputBlock::random(field, static_cast<std::size_t>(k), payload, rng);
    lrfc::Decoder dec(field, static_cast<std::size_t>(k), payload);
    for (long i = 0; i < z && !dec.full_rank(); ++i) dec.absorb(lrfc::encode_next(block, rng));
    long t = 0;
    while (!dec.full_rank()) {
      dec.absorb(lrfc::encode_next(block, rng));
      ++t;
    }
    if (!(dec.solve() == block)) ++mismatches;
    return t;
  }

 private:
  void absorb_fresh(Rng& rng) {
    for (auto& g : coeffs) g = field.sample_raw(rng);
    rank_only.absorb(coeffs);
  }
};

}  // namespace

SimReport simulate_delivery(const NetworkConfig& config, const PlacementVector& x, Scheme scheme,
                            const SimOptions& options) {
  config.validate();
  x.validate_for(config, scheme == Scheme::kMds);
  const gf::Field& field = gf::Field::of(config.q);
  const auto hub_cum = detail::cumulative(config.gamma);
  const auto file_cum = detail::cumulative(analysis::zipf_pmf(config.n, config.alpha));
  const long k = config.k;

  const auto blocks = static_cast<std::int64_t>(detail::block_count(config.trials, kTrialsPerBlock));
  std::vector<BlockResult> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel
  {
    Worker worker(field, config.k);
#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
      auto rng = make_stream(config.seed, static_cast<std::uint64_t>(b));
      auto& out = partial[static_cast<std::size_t>(b)];
      const std::uint64_t first = static_cast<std::uint64_t>(b) * kTrialsPerBlock;
      const std::uint64_t n = std::min(kTrialsPerBlock, config.trials - first);
      if (options.keep_records) out.records.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        const int h = static_cast<int>(detail::draw_index(hub_cum, uniform01(rng))) + 1;
        const auto j = detail::draw_index(file_cum, uniform01(rng));
        const long z = static_cast<long>(x[j]) * h;
        long t;
        if (scheme == Scheme::kMds) {
          t = z >= k ? 0 : k - z;
        } else if (options.payload_symbols > 0) {
          t = worker.lrfc_with_payload(z, options.payload_symbols, rng, out.mismatches);
        } else {
          t = worker.lrfc_rank_only(z, rng);
        }
        out.sum += static_cast<std::uint64_t>(t);
        out.sum_sq += static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t);
        if (options.keep_records) out.records.push_back({first + i, static_cast<int>(j) + 1, h, z, t});
      }
    }
  }

  SimReport report;
  report.trials = config.trials;
  for (auto& part : partial) {
    report.sum += part.sum;
    report.sum_sq += part.sum_sq;
    report.decode_mismatches += part.mismatches;
    report.records.insert(report.records.end(), part.records.begin(), part.records.end());
  }
  detail::finish_report(report, config.k);
  return report;
}

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << "trial,j,h,z,t\n";
  for (const auto& r : records) out << r.trial << ',' << r.file << ',' << r.hubs << ',' << r.cached << ',' << r.backhaul << '\n';
}

}  // namespace fcache::sim
