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

// Monte Carlo ground truth for the analytical model.
//
// Every kernel splits its trials into fixed-size blocks; block b draws from
// make_stream(seed, b) and accumulates integer sums. Results are therefore
// bit-identical for any number of OpenMP threads, and the *_serial variants
// (straight loops kept as references) must reproduce them exactly.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcache/network_config.hpp"

namespace fcache::sim {

inline constexpr std::uint64_t kTrialsPerBlock = 4096;
inline constexpr std::uint64_t kSamplesPerBlock = 65536;

// ---------------------------------------------------------------------------
// Hub grid geometry

/// Square lattice of hubs with spacing d, each covering a disc of radius r.
struct GridGeometry {
  double spacing_km = 45.0;
  double radius_km = 60.0;
};

struct ConnectivityHistogram {
  std::vector<std::uint64_t> counts;  // counts[h]: samples reaching exactly h hubs
  std::uint64_t samples = 0;

  double mass(std::size_t h) const;
  double uncovered() const { return mass(0); }
  /// gamma_1..gamma_H conditioned on being covered. Throws if nothing is.
  std::vector<double> gamma() const;
};

/// User positions uniform over one lattice cell; the lattice is infinite so
/// there are no border effects.
ConnectivityHistogram connectivity_distribution(const GridGeometry& geom, std::uint64_t samples, std::uint64_t seed);
ConnectivityHistogram connectivity_distribution_serial(const GridGeometry& geom, std::uint64_t samples,
                                                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// Delivery phase

enum class Scheme { kLrfc, kMds };
std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

struct TrialRecord {
  std::uint64_t trial;
  int file;     // 1-based
  int hubs;
  long cached;  // z = x_j h
  long backhaul;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SimOptions {
  bool keep_records = false;
  // > 0 runs the full codec with payloads of this many field elements and
  // checks every recovered block; 0 tracks ranks only.
  std::size_t payload_symbols = 0;
};

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double normalized = 0.0;
  double ci95 = 0.0;  // half-width on the normalized rate
  std::uint64_t decode_mismatches = 0;
  std::vector<TrialRecord> records;
};

/// Per trial: h ~ gamma, j ~ Zipf(alpha), z = x_j h cached symbols. LRFC
/// absorbs z fresh symbols, then counts the extra ones needed for full rank;
/// MDS needs exactly (k - z)^+.
SimReport simulate_delivery(const NetworkConfig& config, const PlacementVector& x, Scheme scheme,
                            const SimOptions& options = {});
SimReport simulate_delivery_serial(const NetworkConfig& config, const PlacementVector& x, Scheme scheme,
                                   const SimOptions& options = {});

/// CSV with header `trial,j,h,z,t`.
void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records);

// ---------------------------------------------------------------------------
// Decoding overhead

struct OverheadSample {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> histogram;  // histogram[d]: trials with overhead d
  double mean = 0.0;
  double std_error = 0.0;

  /// Empirical Pr{overhead <= delta}, i.e. full rank after k + delta symbols.
  double full_rank_frequency(int delta) const;
};

OverheadSample overhead_monte_carlo(int k, unsigned q, std::uint64_t trials, std::uint64_t seed);
OverheadSample overhead_monte_carlo_serial(int k, unsigned q, std::uint64_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct CrossValidation {
  Scheme scheme = Scheme::kLrfc;
  double analytic = 0.0;
  std::optional<double> bound;  // LRFC with q > 2 only
  SimReport simulated;
  double z_score = 0.0;
  bool flagged = false;  // |z| > 3
};

CrossValidation crossvalidate(const NetworkConfig& config, const PlacementVector& x, Scheme scheme = Scheme::kLrfc,
                              const SimOptions& options = {});

/// (empirical - analytic) / std_error; a zero standard error gives 0 on an
/// exact match and +-inf otherwise.
double z_score(double empirical, double analytic, double std_error);

}  // namespace fcache::sim
