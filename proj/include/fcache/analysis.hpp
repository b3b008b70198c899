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

// Closed-form decoding and backhaul statistics for LRFC caching.
//
// Notation used throughout:
//   delta  receiver overhead, symbols collected beyond k
//   P_F    probability that k + delta random symbols are not full rank
//   sigma  probability that decoding first succeeds at delta, given it failed
//          at delta - 1
//   z      coded symbols of the requested file reachable through the hubs
//   T      symbols the satellite must send to finish the request

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fcache/network_config.hpp"

namespace fcache::analysis {

inline constexpr double kDefaultTol = 1e-12;

/// Thrown by the bound-based paths at q = 2, where the overhead bound is
/// undefined.
class BoundUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// P_F(k, delta, q). Returns 1 whenever k + delta < k.
double failure_probability(int k, int delta, unsigned q);
inline double success_probability(int k, int delta, unsigned q) { return 1.0 - failure_probability(k, delta, q); }

struct FailureBounds {
  double lower;  // q^(-delta-1)
  double upper;  // q^(-delta) / (q-1)
};
/// k-independent sandwich on P_F. Requires delta >= 0 and q >= 2.
FailureBounds failure_bounds(int delta, unsigned q);

/// sigma_delta; zero for delta < 0.
double sigma(int k, int delta, unsigned q);

struct SigmaBounds {
  double lower;  // 1 - 1/(q-1); vacuous (0) at q = 2
  double upper;  // 1 - (q-1)/q^2
};
SigmaBounds sigma_bounds(unsigned q);

/// Upper bound on the mean overhead. Throws BoundUnavailable for q <= 2.
double delta_u(unsigned q);

/// Distribution of the decoding overhead for fixed (k, q).
///
/// Failure probabilities are tabulated for delta = -1 .. last(), where last()
/// is the first delta with P_F < tol. Queries past the table are computed on
/// the fly, so a const OverheadLaw is safe to share between threads.
class OverheadLaw {
 public:
  OverheadLaw(int k, unsigned q, double tol = kDefaultTol);

  int k() const noexcept { return k_; }
  unsigned q() const noexcept { return q_; }
  double tol() const noexcept { return tol_; }
  int last() const noexcept { return static_cast<int>(failure_.size()) - 2; }

  double failure(int delta) const;
  double success(int delta) const { return 1.0 - failure(delta); }
  double sigma(int delta) const;
  /// Pr{overhead = delta} from the product of conditional failures.
  double pmf(int delta) const;
  /// E[overhead] by summing delta * pmf(delta) up to last().
  double expected() const noexcept { return expected_; }
  /// E[(overhead - c)^+] = sum_{delta >= c} (delta - c) pmf(delta).
  double expected_excess(int c) const;

 private:
  int k_;
  unsigned q_;
  double tol_;
  std::vector<double> failure_;  // failure_[d + 1] = P_F(k, d, q)
  std::vector<double> pmf_;      // pmf_[d], d = 0 .. last()
  double expected_ = 0.0;
};

double overhead_pmf(int k, unsigned q, int delta);
double expected_overhead(int k, unsigned q, double tol = kDefaultTol);

/// p_j = j^-alpha / sum_i i^-alpha, j = 1..n (index 0 holds file 1).
std::vector<double> zipf_pmf(int n, double alpha);

/// Sparse pmf of Z: every (file j, hub count h) pair contributes p_j gamma_h
/// at z = x_j h; colliding support points are merged.
using ZPmf = std::map<long, double>;
ZPmf pmf_Z(const NetworkConfig& config, const PlacementVector& x);

/// P(T = t | Z = z).
double pmf_T_given_Z(const OverheadLaw& law, long z, long t);
double pmf_T_given_Z(int k, unsigned q, long z, long t);

/// E[T | Z = z].
double expected_T_given_Z(const OverheadLaw& law, long z);

struct RateReport {
  double expected = 0.0;              // E[T]
  double normalized = 0.0;            // E[T] / k
  std::optional<double> upper_bound;  // absent when q <= 2 or for MDS
  std::vector<double> per_file;       // p_j * E[T | J = j]; sums to expected
};

/// Exact E[T], summed over the support of Z.
RateReport expected_backhaul(const NetworkConfig& config, const PlacementVector& x);
RateReport expected_backhaul(const NetworkConfig& config, const PlacementVector& x, const OverheadLaw& law);

/// k Pr{Z <= k} - sum_{z <= k} z P_Z(z), which equals
/// sum_j p_j sum_h gamma_h (k - x_j h)^+. The q-independent part of the bound.
double coverage_gap(const NetworkConfig& config, const PlacementVector& x);
double coverage_gap(const NetworkConfig& config, const PlacementVector& x, const std::vector<double>& popularity);

/// delta_u + coverage_gap. Throws BoundUnavailable for q <= 2.
double backhaul_upper_bound(const NetworkConfig& config, const PlacementVector& x);

/// Ideal MDS baseline: T = (k - z)^+. Requires x_j <= k.
RateReport mds_expected_backhaul(const NetworkConfig& config, const PlacementVector& x);

}  // namespace fcache::analysis
