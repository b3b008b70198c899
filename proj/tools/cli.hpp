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

// `fcache` command line: overhead-table, sweep, geometry, simulate, placement.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcache/network_config.hpp"
#include "fcache/sim.hpp"

namespace fcache::cli {

/// Entry point. Returns the process exit code; errors go to `err` as a
/// single-line JSON object {"error": ..., "kind": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr const char* kSweepHeader = "scheme,q,n,k,M,alpha,rate_analytic,rate_bound,rate_sim,ci95";

struct SchemeSpec {
  sim::Scheme scheme = sim::Scheme::kLrfc;
  unsigned q = 0;  // unused for MDS

  /// "mds" or "lrfc:<q>".
  static SchemeSpec parse(const std::string& text);
  std::string label() const;
};

struct SweepSpec {
  NetworkConfig base;
  std::string param;  // "M", "alpha" or "n"
  std::vector<double> values;
  std::vector<SchemeSpec> schemes;

  void validate() const;
  NetworkConfig at(double value) const;
};

/// Mean-overhead reference values published for k = 10.
struct PublishedOverhead {
  unsigned q;
  double mean;
  std::optional<double> bound;
};
const std::vector<PublishedOverhead>& published_overhead_k10();

void write_overhead_table(std::ostream& out, const std::vector<unsigned>& qs, int k, std::uint64_t trials,
                          std::uint64_t seed, double tol);
void write_sweep(std::ostream& out, const SweepSpec& spec);
void write_geometry(std::ostream& out, const sim::GridGeometry& geom, std::uint64_t samples, std::uint64_t seed);
nlohmann::json placement_report(const NetworkConfig& config, const std::string& objective);
nlohmann::json simulate_report(const NetworkConfig& config, const PlacementVector& x, const SchemeSpec& scheme,
                               const sim::SimOptions& options, std::vector<sim::TrialRecord>* records = nullptr);

}  // namespace fcache::cli
