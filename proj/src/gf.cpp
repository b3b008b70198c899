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

#include "fcache/gf.hpp"

#include <bit>
#include <string>

namespace fcache::gf {
namespace {

// Indexed by degree m. Bit m is the leading term.
constexpr std::array<unsigned, 9> kPolynomials = {
    0,
    0x3,    // x + 1
    0x7,    // x^2 + x + 1
    0xB,    // x^3 + x + 1
    0x13,   // x^4 + x + 1
    0x25,   // x^5 + x^2 + 1
    0x43,   // x^6 + x + 1
    0x83,   // x^7 + x + 1
    0x11B,  // x^8 + x^4 + x^3 + x + 1
};

}  // namespace

std::uint8_t poly_mul_mod(unsigned a, unsigned b, unsigned poly, unsigned degree) noexcept {
  unsigned product = 0;
  for (unsigned i = 0; i < degree; ++i) {
    if (b & (1u << i)) product ^= a << i;
  }
  for (int bit = 2 * static_cast<int>(degree) - 2; bit >= static_cast<int>(degree); --bit) {
    if (product & (1u << bit)) product ^= poly << (bit - degree);
  }
  return static_cast<std::uint8_t>(product);
}

Field::Field(unsigned order) : order_(order) {
  if (order < 2 || order > kMaxOrder || !std::has_single_bit(order)) {
    throw std::invalid_argument("field order must be a power of two in [2, 256], got " +
                                std::to_string(order));
  }
  degree_ = static_cast<unsigned>(std::countr_zero(order));
  poly_ = kPolynomials[degree_];

  // x + 1 is not primitive for m = 1 (and x is not a generator), so search for
  // a generator instead of assuming x.
  unsigned generator = 0;
  for (unsigned g = 1; g < order_ && generator == 0; ++g) {
    unsigned v = 1;
    unsigned period = 0;
    do {
      v = poly_mul_mod(v, g, poly_, degree_);
      ++period;
    } while (v != 1);
    if (period == order_ - 1) generator = g;
  }

  unsigned v = 1;
  for (unsigned e = 0; e < order_ - 1; ++e) {
    exp_[e] = static_cast<std::uint8_t>(v);
    log_[v] = static_cast<std::uint8_t>(e);
    v = poly_mul_mod(v, generator, poly_, degree_);
  }
  for (unsigned e = order_ - 1; e < exp_.size(); ++e) exp_[e] = exp_[e - (order_ - 1)];

  for (unsigned a = 1; a < order_; ++a) {
    inv_[a] = exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    for (unsigned b = 1; b < order_; ++b) mul_[a][b] = exp_[log_[a] + log_[b]];
  }
}

const Field& Field::of(unsigned order) {
  static const std::array<Field, 8> fields = {Field(2),  Field(4),  Field(8),   Field(16),
                                              Field(32), Field(64), Field(128), Field(256)};
  if (order < 2 || order > kMaxOrder || !std::has_single_bit(order)) {
    throw std::invalid_argument("field order must be a power of two in [2, 256], got " +
                                std::to_string(order));
  }
  return fields[std::countr_zero(order) - 1];
}

Element Field::element(unsigned value) const {
  if (value >= order_) {
    throw std::out_of_range("value " + std::to_string(value) + " outside GF(" + std::to_string(order_) +
                            ")");
  }
  return Element(*this, static_cast<std::uint8_t>(value));
}

void Field::check_same(Element a, Element b) const {
  if (&a.field() != this || &b.field() != this) {
    throw FieldMismatch("operands belong to different fields");
  }
}

Element Field::add(Element a, Element b) const {
  check_same(a, b);
  return Element(*this, add_raw(a.value(), b.value()));
}

Element Field::mul(Element a, Element b) const {
  check_same(a, b);
  return Element(*this, mul_raw(a.value(), b.value()));
}

Element Field::inv(Element a) const {
  check_same(a, a);
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return Element(*this, inv_raw(a.value()));
}

void Field::axpy(std::span<std::uint8_t> dst, std::uint8_t c, std::span<const std::uint8_t> src) const noexcept {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    return;
  }
  const auto& row = mul_[c];
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= row[src[i]];
}

void Field::scale(std::span<std::uint8_t> v, std::uint8_t c) const noexcept {
  if (c == 1) return;
  const auto& row = mul_[c];
  for (auto& x : v) x = row[x];
}

Element operator+(Element a, Element b) { return a.field().add(a, b); }
Element operator*(Element a, Element b) { return a.field().mul(a, b); }

}  // namespace fcache::gf
