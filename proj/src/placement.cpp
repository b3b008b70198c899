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

#include "fcache/placement.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "fcache/analysis.hpp"

namespace fcache::placement {
namespace {

// Largest gain first; among equal gains the file holding fewer symbols, then
// the lowest index. The middle key spreads symbols evenly over files whose
// objectives are identical.
struct Candidate {
  double gain;
  int held;
  int file;
  bool operator<(const Candidate& o) const {
    if (gain != o.gain) return gain < o.gain;
    if (held != o.held) return held > o.held;
    return file > o.file;
  }
};

void check_budget(const NetworkConfig& config) {
  config.validate();
  if (config.budget() > static_cast<long>(config.n) * config.cap()) {
    throw Infeasible("budget M k = " + std::to_string(config.budget()) + " exceeds n * cap = " +
                     std::to_string(static_cast<long>(config.n) * config.cap()));
  }
}

double coverage_decrement(const NetworkConfig& config, const std::vector<double>& p, int j, int x) {
  double dec = 0.0;
  for (int h = 1; h <= config.max_hubs(); ++h) {
    const long missing = config.k - static_cast<long>(x) * h;
    if (missing > 0) dec += config.gamma[static_cast<std::size_t>(h - 1)] * static_cast<double>(std::min<long>(h, missing));
  }
  return p[static_cast<std::size_t>(j)] * dec;
}

}  // namespace

PlacementVector greedy_allocate(int n, int cap, long budget, const std::function<double(int, int)>& decrement) {
  if (budget > static_cast<long>(n) * cap) throw Infeasible("budget exceeds n * cap");
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::priority_queue<Candidate> heap;
  for (int j = 0; j < n; ++j) {
    if (cap > 0) heap.push({decrement(j, 0), 0, j});
  }

  long left = budget;
  while (left > 0 && !heap.empty() && heap.top().gain > 0.0) {
    const int j = heap.top().file;
    heap.pop();
    ++x[static_cast<std::size_t>(j)];
    --left;
    const int held = x[static_cast<std::size_t>(j)];
    if (held < cap) heap.push({decrement(j, held), held, j});
  }
  for (int j = 0; left > 0; j = (j + 1) % n) {
    if (x[static_cast<std::size_t>(j)] < cap) {
      ++x[static_cast<std::size_t>(j)];
      --left;
    }
  }
  return PlacementVector(std::move(x));
}

Result optimize_bound(const NetworkConfig& config) {
  check_budget(config);
  const auto p = analysis::zipf_pmf(config.n, config.alpha);
  Result r;
  r.x = greedy_allocate(config.n, config.cap(), config.budget(),
                        [&](int j, int x) { return coverage_decrement(config, p, j, x); });
  r.objective = analysis::coverage_gap(config, r.x, p);
  if (config.q > 2) r.objective += analysis::delta_u(config.q);
  return r;
}

Result optimize_mds(const NetworkConfig& config) {
  NetworkConfig mds = config;
  mds.cap_headroom = 0;
  check_budget(mds);
  const auto p = analysis::zipf_pmf(mds.n, mds.alpha);
  Result r;
  r.x = greedy_allocate(mds.n, mds.cap(), mds.budget(),
                        [&](int j, int x) { return coverage_decrement(mds, p, j, x); });
  r.objective = analysis::coverage_gap(mds, r.x, p);
  return r;
}

std::uint64_t feasible_count(int n, int cap, long budget) {
  constexpr std::uint64_t kSaturate = std::numeric_limits<std::uint64_t>::max() / 4;
  if (budget < 0) return 0;
  // ways[b] = vectors over the files seen so far summing to b
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(budget) + 1, 0);
  ways[0] = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t b = 0; b < ways.size(); ++b) {
      if (ways[b] == 0) continue;
      for (int v = 0; v <= cap && b + static_cast<std::size_t>(v) < ways.size(); ++v) {
        next[b + static_cast<std::size_t>(v)] = std::min(kSaturate, next[b + static_cast<std::size_t>(v)] + ways[b]);
      }
    }
    ways = std::move(next);
  }
  return ways.back();
}

void for_each_feasible(int n, int cap, long budget, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, long left) -> void {
    if (j == n - 1) {
      if (left <= cap) {
        x[static_cast<std::size_t>(j)] = static_cast<int>(left);
        visit(x);
      }
      return;
    }
    const long room = static_cast<long>(n - 1 - j) * cap;
    for (int v = static_cast<int>(std::max(0L, left - room)); v <= std::min<long>(cap, left); ++v) {
      x[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, left - v);
    }
  };
  if (n >= 1 && budget >= 0) rec(rec, 0, budget);
}

Result optimize_exact(const NetworkConfig& config, std::uint64_t search_limit) {
  check_budget(config);
  const std::uint64_t size = feasible_count(config.n, config.cap(), config.budget());
  if (size > search_limit) {
    throw SearchTooLarge("exhaustive placement search needs " + std::to_string(size) + " evaluations, limit is " +
                         std::to_string(search_limit));
  }

  const analysis::OverheadLaw law(config.k, config.q, config.tol);
  const auto p = analysis::zipf_pmf(config.n, config.alpha);
  // cost[j][v] = p_j E[T | J = j] with x_j = v
  std::vector<std::vector<double>> cost(static_cast<std::size_t>(config.n),
                                        std::vector<double>(static_cast<std::size_t>(config.cap()) + 1));
  for (int j = 0; j < config.n; ++j) {
    for (int v = 0; v <= config.cap(); ++v) {
      double c = 0.0;
      for (int h = 1; h <= config.max_hubs(); ++h) {
        c += config.gamma[static_cast<std::size_t>(h - 1)] * analysis::expected_T_given_Z(law, static_cast<long>(v) * h);
      }
      cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = p[static_cast<std::size_t>(j)] * c;
    }
  }

  Result best;
  best.objective = std::numeric_limits<double>::infinity();
  for_each_feasible(config.n, config.cap(), config.budget(), [&](const std::vector<int>& x) {
    double obj = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) obj += cost[j][static_cast<std::size_t>(x[j])];
    // Visit order is lexicographic, so strict < keeps the smallest tie.
    if (obj < best.objective) {
      best.objective = obj;
      best.x = PlacementVector(x);
    }
  });
  return best;
}

}  // namespace fcache::placement
