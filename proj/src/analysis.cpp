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

#include "fcache/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fcache::analysis {
namespace {

void require_q(unsigned q) {
  if (q < 2) throw std::invalid_argument("field order q must be >= 2");
}

}  // namespace

double failure_probability(int k, int delta, unsigned q) {
  require_q(q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int m = k + delta;
  if (m < k) return 1.0;
  // 1 - prod_{i=1..k} (1 - x_i), x_i = q^(i-1-m), accumulated as
  // F <- F + x (1 - F) from the largest x down. Every step adds a
  // non-negative amount, so the first step q^(-delta-1) is a floor.
  const double qd = static_cast<double>(q);
  double fail = 0.0;
  for (int i = k; i >= 1; --i) {
    const double x = std::pow(qd, static_cast<double>(i - 1 - m));
    fail += x * (1.0 - fail);
  }
  return fail;
}

FailureBounds failure_bounds(int delta, unsigned q) {
  require_q(q);
  if (delta < 0) throw std::invalid_argument("failure bounds need delta >= 0");
  const double qd = static_cast<double>(q);
  return {std::pow(qd, static_cast<double>(-delta - 1)), std::pow(qd, static_cast<double>(-delta)) / (qd - 1.0)};
}

double sigma(int k, int delta, unsigned q) {
  if (delta < 0) return 0.0;
  const double prev = failure_probability(k, delta - 1, q);
  if (prev == 0.0) return 1.0;
  return 1.0 - failure_probability(k, delta, q) / prev;
}

SigmaBounds sigma_bounds(unsigned q) {
  require_q(q);
  const double qd = static_cast<double>(q);
  return {std::max(0.0, 1.0 - 1.0 / (qd - 1.0)), 1.0 - (qd - 1.0) / (qd * qd)};
}

double delta_u(unsigned q) {
  if (q <= 2) throw BoundUnavailable("overhead bound undefined for q <= 2");
  const double qd = static_cast<double>(q);
  return (qd - 1.0) / ((qd - 2.0) * (qd - 2.0)) * (1.0 - (qd - 1.0) / (qd * qd));
}

OverheadLaw::OverheadLaw(int k, unsigned q, double tol) : k_(k), q_(q), tol_(tol) {
  require_q(q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  failure_.push_back(1.0);
  for (int d = 0;; ++d) {
    failure_.push_back(failure_probability(k, d, q));
    if (failure_.back() < tol) break;
  }
  // pmf(d) = [prod_{i<d} (1 - sigma_i)] sigma_d
  double survive = 1.0;
  for (int d = 0; d <= last(); ++d) {
    const double s = sigma(d);
    pmf_.push_back(survive * s);
    expected_ += d * pmf_.back();
    survive *= 1.0 - s;
  }
}

double OverheadLaw::failure(int delta) const {
  if (delta < 0) return 1.0;
  if (delta <= last()) return failure_[static_cast<std::size_t>(delta) + 1];
  return failure_probability(k_, delta, q_);
}

double OverheadLaw::sigma(int delta) const {
  if (delta < 0) return 0.0;
  const double prev = failure(delta - 1);
  if (prev == 0.0) return 1.0;
  return 1.0 - failure(delta) / prev;
}

double OverheadLaw::pmf(int delta) const {
  if (delta < 0) return 0.0;
  if (delta <= last()) return pmf_[static_cast<std::size_t>(delta)];
  double survive = 1.0;
  for (int i = 0; i < delta; ++i) survive *= 1.0 - sigma(i);
  return survive * sigma(delta);
}

double OverheadLaw::expected_excess(int c) const {
  double sum = 0.0;
  for (int d = std::max(c, 0); d <= last(); ++d) sum += (d - c) * pmf_[static_cast<std::size_t>(d)];
  return sum;
}

double overhead_pmf(int k, unsigned q, int delta) {
  if (delta < 0) return 0.0;
  double survive = 1.0;
  for (int i = 0; i < delta; ++i) survive *= 1.0 - sigma(k, i, q);
  return survive * sigma(k, delta, q);
}

double expected_overhead(int k, unsigned q, double tol) { return OverheadLaw(k, q, tol).expected(); }

std::vector<double> zipf_pmf(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("zipf_pmf needs n >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("zipf_pmf needs alpha >= 0");
  std::vector<double> p(static_cast<std::size_t>(n));
  double norm = 0.0;
  for (int j = 1; j <= n; ++j) {
    p[static_cast<std::size_t>(j - 1)] = std::pow(static_cast<double>(j), -alpha);
    norm += p[static_cast<std::size_t>(j - 1)];
  }
  for (auto& v : p) v /= norm;
  return p;
}

ZPmf pmf_Z(const NetworkConfig& config, const PlacementVector& x) {
  config.validate();
  x.validate_for(config, false);
  const auto p = zipf_pmf(config.n, config.alpha);
  ZPmf out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (int h = 1; h <= config.max_hubs(); ++h) {
      const double mass = p[j] * config.gamma[static_cast<std::size_t>(h - 1)];
      if (mass == 0.0) continue;
      out[static_cast<long>(x[j]) * h] += mass;
    }
  }
  return out;
}

double pmf_T_given_Z(const OverheadLaw& law, long z, long t) {
  if (t < 0 || z < 0) return 0.0;
  const long k = law.k();
  if (z > k && t == 0) {
    double sum = 0.0;
    for (long j = 0; j <= z - k; ++j) sum += law.pmf(static_cast<int>(j));
    return sum;
  }
  return law.pmf(static_cast<int>(z - k + t));
}

double pmf_T_given_Z(int k, unsigned q, long z, long t) { return pmf_T_given_Z(OverheadLaw(k, q), z, t); }

double expected_T_given_Z(const OverheadLaw& law, long z) {
  const long k = law.k();
  if (z <= k) return law.expected() + static_cast<double>(k - z);
  return law.expected_excess(static_cast<int>(z - k));
}

RateReport expected_backhaul(const NetworkConfig& config, const PlacementVector& x) {
  config.validate();
  return expected_backhaul(config, x, OverheadLaw(config.k, config.q, config.tol));
}

RateReport expected_backhaul(const NetworkConfig& config, const PlacementVector& x, const OverheadLaw& law) {
  if (law.k() != config.k || law.q() != config.q) throw std::invalid_argument("overhead law does not match config");
  const ZPmf pz = pmf_Z(config, x);
  const long k = config.k;

  double le_k_mass = 0.0;
  double le_k_first_moment = 0.0;
  double above_k = 0.0;
  for (const auto& [z, mass] : pz) {
    if (z <= k) {
      le_k_mass += mass;
      le_k_first_moment += static_cast<double>(z) * mass;
    } else {
      above_k += mass * law.expected_excess(static_cast<int>(z - k));
    }
  }

  RateReport report;
  report.expected = (law.expected() + static_cast<double>(k)) * le_k_mass - le_k_first_moment + above_k;
  report.normalized = report.expected / static_cast<double>(k);

  const auto p = zipf_pmf(config.n, config.alpha);
  report.per_file.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    double cond = 0.0;
    for (int h = 1; h <= config.max_hubs(); ++h) {
      cond += config.gamma[static_cast<std::size_t>(h - 1)] * expected_T_given_Z(law, static_cast<long>(x[j]) * h);
    }
    report.per_file[j] = p[j] * cond;
  }
  if (config.q > 2) report.upper_bound = delta_u(config.q) + coverage_gap(config, x, p);
  return report;
}

double coverage_gap(const NetworkConfig& config, const PlacementVector& x) {
  config.validate();
  return coverage_gap(config, x, zipf_pmf(config.n, config.alpha));
}

double coverage_gap(const NetworkConfig& config, const PlacementVector& x, const std::vector<double>& popularity) {
  x.validate_for(config, false);
  const long k = config.k;
  double gap = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    double per_file = 0.0;
    for (int h = 1; h <= config.max_hubs(); ++h) {
      const long missing = k - static_cast<long>(x[j]) * h;
      if (missing > 0) per_file += config.gamma[static_cast<std::size_t>(h - 1)] * static_cast<double>(missing);
    }
    gap += popularity[j] * per_file;
  }
  return gap;
}

double backhaul_upper_bound(const NetworkConfig& config, const PlacementVector& x) {
  config.validate();
  return delta_u(config.q) + coverage_gap(config, x);
}

RateReport mds_expected_backhaul(const NetworkConfig& config, const PlacementVector& x) {
  config.validate();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] > config.k) {
      throw std::invalid_argument("MDS placement caches " + std::to_string(x[j]) + " > k symbols of file " +
                                  std::to_string(j + 1));
    }
  }
  const auto p = zipf_pmf(config.n, config.alpha);
  RateReport report;
  report.per_file.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    double per_file = 0.0;
    for (int h = 1; h <= config.max_hubs(); ++h) {
      const long missing = config.k - static_cast<long>(x[j]) * h;
      if (missing > 0) per_file += config.gamma[static_cast<std::size_t>(h - 1)] * static_cast<double>(missing);
    }
    report.per_file[j] = p[j] * per_file;
  }
  report.expected = coverage_gap(config, x, p);
  report.normalized = report.expected / static_cast<double>(config.k);
  return report;
}

}  // namespace fcache::analysis
