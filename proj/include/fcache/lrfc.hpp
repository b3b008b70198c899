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

// Linear random fountain code over GF(q): every output symbol is a uniformly
// random linear combination of the k input symbols. The decoder keeps an
// incremental row-echelon form so rank is known after each received symbol.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fcache/gf.hpp"
#include "fcache/rng.hpp"

namespace fcache::lrfc {

using Symbol = std::vector<std::uint8_t>;

/// k input symbols of equal length. Each byte is one GF(q) element, so every
/// byte must be < q.
class InputBlock {
 public:
  InputBlock(const gf::Field& field, std::vector<Symbol> symbols);

  /// k symbols of `symbol_size` uniformly random field elements.
  static InputBlock random(const gf::Field& field, std::size_t k, std::size_t symbol_size, Rng& rng);

  const gf::Field& field() const noexcept { return *field_; }
  std::size_t k() const noexcept { return symbols_.size(); }
  std::size_t symbol_size() const noexcept { return symbol_size_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const InputBlock& a, const InputBlock& b) {
    return a.field_ == b.field_ && a.symbols_ == b.symbols_;
  }

 private:
  const gf::Field* field_;
  std::size_t symbol_size_;
  std::vector<Symbol> symbols_;
};

struct CodedSymbol {
  std::vector<std::uint8_t> coefficients;  // length k
  Symbol payload;                          // empty in rank-only use
};

/// Draws the next output symbol: i.i.d. uniform coefficients, payload equal
/// to the coefficient-weighted sum of the input symbols.
CodedSymbol encode_next(const InputBlock& block, Rng& rng);

/// Payload for a caller-chosen coefficient vector.
Symbol combine(const InputBlock& block, std::span<const std::uint8_t> coefficients);

class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Absorb { kRankIncreased, kRedundant };

/// Incremental Gaussian elimination over GF(q).
///
/// Row for pivot column c is stored normalised (entry c equal to one, zeros
/// left of c). A new symbol is reduced against the stored pivots in column
/// order; if anything survives it becomes a new pivot row.
class Decoder {
 public:
  /// symbol_size == 0 selects rank-only mode: payloads are ignored.
  Decoder(const gf::Field& field, std::size_t k, std::size_t symbol_size = 0);

  Absorb absorb(const CodedSymbol& sym);
  /// Rank-only absorb of a bare coefficient vector.
  Absorb absorb(std::span<const std::uint8_t> coefficients);

  std::size_t k() const noexcept { return k_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t consumed() const noexcept { return consumed_; }
  bool full_rank() const noexcept { return rank_ == k_; }
  bool carries_payload() const noexcept { return symbol_size_ != 0; }

  /// Pivot columns in increasing order (row-echelon row order).
  std::vector<std::size_t> pivot_columns() const;
  /// Stored row for a pivot column; empty span if the column has no pivot.
  std::span<const std::uint8_t> row(std::size_t pivot_column) const;

  /// Back-substitution. Throws DecodeFailure if rank < k or the decoder runs
  /// rank-only. Leaves the state untouched.
  InputBlock solve() const;

  void reset();

 private:
  Absorb absorb_impl(std::span<const std::uint8_t> coefficients, std::span<const std::uint8_t> payload);

  const gf::Field* field_;
  std::size_t k_;
  std::size_t symbol_size_;
  std::size_t rank_ = 0;
  std::size_t consumed_ = 0;
  std::vector<std::uint8_t> rows_;      // k x k, row c holds pivot c
  std::vector<std::uint8_t> payloads_;  // k x symbol_size
  std::vector<bool> has_pivot_;
  std::vector<std::uint8_t> scratch_row_;
  std::vector<std::uint8_t> scratch_payload_;
};

/// Draws fresh coefficient vectors into a rank-only decoder until it reaches
/// full rank; returns the number of symbols beyond k that were needed.
std::size_t measure_overhead(const gf::Field& field, std::size_t k, Rng& rng);

}  // namespace fcache::lrfc
