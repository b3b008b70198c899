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

#include "fcache/lrfc.hpp"

#include <algorithm>
#include <string>

namespace fcache::lrfc {

InputBlock::InputBlock(const gf::Field& field, std::vector<Symbol> symbols)
    : field_(&field), symbol_size_(symbols.empty() ? 0 : symbols.front().size()), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("input block needs k >= 1 symbols");
  for (const auto& s : symbols_) {
    if (s.size() != symbol_size_) throw std::invalid_argument("input symbols must have equal length");
    for (auto v : s) {
      if (v >= field.order()) {
        throw std::invalid_argument("symbol value " + std::to_string(v) + " outside GF(" +
                                    std::to_string(field.order()) + ")");
      }
    }
  }
}

InputBlock InputBlock::random(const gf::Field& field, std::size_t k, std::size_t symbol_size, Rng& rng) {
  std::vector<Symbol> symbols(k, Symbol(symbol_size));
  for (auto& s : symbols) {
    for (auto& v : s) v = field.sample_raw(rng);
  }
  return InputBlock(field, std::move(symbols));
}

Symbol combine(const InputBlock& block, std::span<const std::uint8_t> coefficients) {
  if (coefficients.size() != block.k()) throw std::invalid_argument("coefficient vector length must equal k");
  Symbol payload(block.symbol_size(), 0);
  for (std::size_t a = 0; a < block.k(); ++a) block.field().axpy(payload, coefficients[a], block[a]);
  return payload;
}

CodedSymbol encode_next(const InputBlock& block, Rng& rng) {
  CodedSymbol out;
  out.coefficients.resize(block.k());
  for (auto& g : out.coefficients) g = block.field().sample_raw(rng);
  out.payload = combine(block, out.coefficients);
  return out;
}

Decoder::Decoder(const gf::Field& field, std::size_t k, std::size_t symbol_size)
    : field_(&field),
      k_(k),
      symbol_size_(symbol_size),
      rows_(k * k, 0),
      payloads_(k * symbol_size, 0),
      has_pivot_(k, false),
      scratch_row_(k),
      scratch_payload_(symbol_size) {
  if (k == 0) throw std::invalid_argument("decoder needs k >= 1");
}

void Decoder::reset() {
  std::fill(rows_.begin(), rows_.end(), 0);
  std::fill(payloads_.begin(), payloads_.end(), 0);
  std::fill(has_pivot_.begin(), has_pivot_.end(), false);
  rank_ = 0;
  consumed_ = 0;
}

Absorb Decoder::absorb(const CodedSymbol& sym) {
  if (carries_payload() && sym.payload.size() != symbol_size_) {
    throw std::invalid_argument("payload length does not match decoder symbol size");
  }
  return absorb_impl(sym.coefficients, sym.payload);
}

Absorb Decoder::absorb(std::span<const std::uint8_t> coefficients) {
  if (carries_payload()) throw std::invalid_argument("decoder expects payloads; pass a CodedSymbol");
  return absorb_impl(coefficients, {});
}

Absorb Decoder::absorb_impl(std::span<const std::uint8_t> coefficients, std::span<const std::uint8_t> payload) {
  if (coefficients.size() != k_) {
    throw std::invalid_argument("coefficient vector length " + std::to_string(coefficients.size()) +
                                " does not match k = " + std::to_string(k_));
  }
  ++consumed_;
  if (full_rank()) return Absorb::kRedundant;

  std::copy(coefficients.begin(), coefficients.end(), scratch_row_.begin());
  if (carries_payload()) std::copy(payload.begin(), payload.end(), scratch_payload_.begin());

  for (std::size_t col = 0; col < k_; ++col) {
    const std::uint8_t c = scratch_row_[col];
    if (c == 0) continue;
    auto tail = std::span(scratch_row_).subspan(col);
    if (has_pivot_[col]) {
      field_->axpy(tail, c, std::span<const std::uint8_t>(rows_).subspan(col * k_ + col, k_ - col));
      if (carries_payload()) {
        field_->axpy(scratch_payload_, c,
                     std::span<const std::uint8_t>(payloads_).subspan(col * symbol_size_, symbol_size_));
      }
      continue;
    }
    const std::uint8_t norm = field_->inv_raw(c);
    field_->scale(tail, norm);
    std::copy(tail.begin(), tail.end(), rows_.begin() + static_cast<std::ptrdiff_t>(col * k_ + col));
    if (carries_payload()) {
      field_->scale(scratch_payload_, norm);
      std::copy(scratch_payload_.begin(), scratch_payload_.end(),
                payloads_.begin() + static_cast<std::ptrdiff_t>(col * symbol_size_));
    }
    has_pivot_[col] = true;
    ++rank_;
    return Absorb::kRankIncreased;
  }
  return Absorb::kRedundant;
}

std::vector<std::size_t> Decoder::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < k_; ++c) {
    if (has_pivot_[c]) cols.push_back(c);
  }
  return cols;
}

std::span<const std::uint8_t> Decoder::row(std::size_t pivot_column) const {
  if (pivot_column >= k_ || !has_pivot_[pivot_column]) return {};
  return std::span<const std::uint8_t>(rows_).subspan(pivot_column * k_, k_);
}

InputBlock Decoder::solve() const {
  if (!carries_payload()) throw DecodeFailure("decoder runs rank-only; no payloads to recover");
  if (!full_rank()) {
    throw DecodeFailure("rank " + std::to_string(rank_) + " < k = " + std::to_string(k_) +
                        "; collect more symbols");
  }
  std::vector<Symbol> out(k_);
  for (std::size_t c = k_; c-- > 0;) {
    Symbol u(payloads_.begin() + static_cast<std::ptrdiff_t>(c * symbol_size_),
             payloads_.begin() + static_cast<std::ptrdiff_t>((c + 1) * symbol_size_));
    for (std::size_t j = c + 1; j < k_; ++j) field_->axpy(u, rows_[c * k_ + j], out[j]);
    out[c] = std::move(u);
  }
  return InputBlock(*field_, std::move(out));
}

std::size_t measure_overhead(const gf::Field& field, std::size_t k, Rng& rng) {
  Decoder dec(field, k);
  std::vector<std::uint8_t> g(k);
  while (!dec.full_rank()) {
    for (auto& v : g) v = field.sample_raw(rng);
    dec.absorb(g);
  }
  return dec.consumed() - k;
}

}  // namespace fcache::lrfc
