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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "fcache/placement.hpp"
#include "fcache/sim.hpp"

namespace {

fcache::NetworkConfig delivery_config(unsigned q) {
  fcache::NetworkConfig c;
  c.n = 100;
  c.k = 10;
  c.M = 10;
  c.q = q;
  c.alpha = 0.8;
  c.gamma = fcache::kPublishedConnectivity;
  c.trials = 200000;
  return c;
}

template <auto Kernel>
void BM_Delivery(benchmark::State& state) {
  const auto c = delivery_config(static_cast<unsigned>(state.range(0)));
  const auto x = fcache::placement::optimize_bound(c).x;
  for (auto _ : state) {
    auto r = Kernel(c, x, fcache::sim::Scheme::kLrfc, {});
    benchmark::DoNotOptimize(r.sum);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.trials));
}

template <auto Kernel>
void BM_Overhead(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = Kernel(10, q, 200000, 1);
    benchmark::DoNotOptimize(r.mean);
  }
  state.SetItemsProcessed(state.iterations() * 200000);
}

template <auto Kernel>
void BM_Geometry(benchmark::State& state) {
  for (auto _ : state) {
    auto h = Kernel({45.0, 60.0}, 1 << 21, 1);
    benchmark::DoNotOptimize(h.samples);
  }
  state.SetItemsProcessed(state.iterations() * (1 << 21));
}

BENCHMARK(BM_Delivery<fcache::sim::simulate_delivery_serial>)->Name("delivery/serial")->Arg(2)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Delivery<fcache::sim::simulate_delivery>)->Name("delivery/openmp")->Arg(2)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Overhead<fcache::sim::overhead_monte_carlo_serial>)->Name("overhead/serial")->Arg(2)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Overhead<fcache::sim::overhead_monte_carlo>)->Name("overhead/openmp")->Arg(2)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Geometry<fcache::sim::connectivity_distribution_serial>)->Name("geometry/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Geometry<fcache::sim::connectivity_distribution>)->Name("geometry/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
