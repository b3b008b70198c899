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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "fcache/rng.hpp"

namespace fcache::gf {

class Field;

/// Raised when two elements from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value of GF(q) tagged with the field it lives in.
///
/// Elements hold a non-owning pointer to their field. Elements obtained from
/// Field::of() are always valid since those fields have static lifetime.
class Element {
 public:
  Element(const Field& field, std::uint8_t value) noexcept : field_(&field), value_(value) {}

  std::uint8_t value() const noexcept { return value_; }
  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Element operator+(Element a, Element b);
  friend Element operator-(Element a, Element b) { return a + b; }
  friend Element operator*(Element a, Element b);
  friend bool operator==(Element a, Element b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const Field* field_;
  std::uint8_t value_;
};

/// GF(2^m), 1 <= m <= 8, with exp/log tables and a full product table.
///
/// Immutable after construction; share freely across threads.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// Throws std::invalid_argument unless order is a power of two in [2, 256].
  explicit Field(unsigned order);

  /// Process-wide instance for the given order.
  static const Field& of(unsigned order);

  unsigned order() const noexcept { return order_; }
  unsigned degree() const noexcept { return degree_; }
  /// Reduction polynomial including the x^m term, e.g. 0x13 for x^4+x+1.
  unsigned polynomial() const noexcept { return poly_; }

  Element element(unsigned value) const;
  Element zero() const noexcept { return Element(*this, 0); }
  Element one() const noexcept { return Element(*this, 1); }

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;
  Element sample(Rng& rng) const noexcept { return Element(*this, sample_raw(rng)); }

  // Raw kernels on values known to be < order(); no validation.
  static std::uint8_t add_raw(std::uint8_t a, std::uint8_t b) noexcept { return a ^ b; }
  std::uint8_t mul_raw(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a][b]; }
  std::uint8_t inv_raw(std::uint8_t a) const noexcept { return inv_[a]; }
  std::uint8_t exp_raw(unsigned e) const noexcept { return exp_[e % (order_ - 1)]; }
  std::uint8_t log_raw(std::uint8_t a) const noexcept { return log_[a]; }
  std::uint8_t sample_raw(Rng& rng) const noexcept {
    return static_cast<std::uint8_t>(rng() >> (64 - degree_));
  }

  /// dst[i] ^= c * src[i]
  void axpy(std::span<std::uint8_t> dst, std::uint8_t c, std::span<const std::uint8_t> src) const noexcept;
  /// v[i] = c * v[i]
  void scale(std::span<std::uint8_t> v, std::uint8_t c) const noexcept;

 private:
  void check_same(Element a, Element b) const;

  unsigned order_;
  unsigned degree_;
  unsigned poly_;
  std::array<std::uint8_t, 2 * kMaxOrder> exp_{};
  std::array<std::uint8_t, kMaxOrder> log_{};
  std::array<std::uint8_t, kMaxOrder> inv_{};
  std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> mul_{};
};

/// Carry-less multiply followed by reduction; slow, used to build the tables
/// and as a reference in tests.
std::uint8_t poly_mul_mod(unsigned a, unsigned b, unsigned poly, unsigned degree) noexcept;

}  // namespace fcache::gf
