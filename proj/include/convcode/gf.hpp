// Copyright 2026 The convcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "convcode/errors.hpp"

namespace convcode {

// Canonical integer encoding of a field element: the polynomial-basis
// coordinates read as base-p digits, constant coefficient least significant
// (so x^3 + x^2 + 1 over GF(2) is 13).
using Symbol = std::uint32_t;

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // low-to-high, monic, size m + 1 (empty for m == 1)
  Symbol generator = 1;                // smallest primitive element (1 for GF(2))
  std::vector<std::uint32_t> log;      // log[0] unused
  std::vector<Symbol> exp;             // length 2(q-1), so exp[a + b] needs no reduction
  std::vector<std::uint32_t> digit_weight;  // p^i for i < m
};

}  // namespace detail

class FieldElement;

/// A finite field GF(p^m) with q <= 2^16 elements.
///
/// FieldSpec is a cheap handle to shared immutable tables; copies are
/// interchangeable. Arithmetic is exposed on raw Symbols so matrices can hold
/// a single spec and a flat array of values; FieldElement wraps a
/// (spec, value) pair for call sites that want checked mixed-spec arithmetic.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static FieldSpec prime(std::uint32_t p);
  // Modulus given low-to-high, length m + 1, monic, irreducible over GF(p).
  static FieldSpec extension(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);
  // Lexicographically smallest primitive polynomial of degree m (x^4 + x + 1 for GF(16)).
  static FieldSpec extension(std::uint32_t p, unsigned m);
  // Any prime power q; extension fields get the default modulus.
  static FieldSpec of_order(std::uint32_t q);

  std::uint32_t p() const { return t_->p; }
  unsigned m() const { return t_->m; }
  std::uint32_t q() const { return t_->q; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  bool contains(Symbol a) const { return a < t_->q; }

  Symbol add(Symbol a, Symbol b) const {
    if (t_->p == 2) return a ^ b;
    if (t_->m == 1) {
      const Symbol s = a + b;
      return s >= t_->p ? s - t_->p : s;
    }
    return add_digits(a, b);
  }
  Symbol neg(Symbol a) const {
    if (t_->p == 2) return a;
    if (t_->m == 1) return a == 0 ? 0 : t_->p - a;
    return neg_digits(a);
  }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, long long e) const;

  // Order q-1 generator; smallest canonical integer that qualifies. Requires q >= 3.
  Symbol primitive_element() const;
  // primitive_element^((q-1)/r); requires r | q-1.
  Symbol nth_root_of_unity(std::uint32_t r) const;
  std::uint32_t multiplicative_order(Symbol a) const;

  std::vector<std::uint32_t> to_coords(Symbol a) const;
  Symbol from_coords(std::span<const std::uint32_t> coords) const;

  FieldElement element(Symbol a) const;
  FieldElement zero() const;
  FieldElement one() const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus);
  }

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  Symbol add_digits(Symbol a, Symbol b) const;
  Symbol neg_digits(Symbol a) const;

  std::shared_ptr<const detail::FieldTables> t_;
};

/// An element bound to its field. Arithmetic across different fields throws.
class FieldElement {
 public:
  FieldElement(FieldSpec spec, Symbol value);

  Symbol value() const { return value_; }
  const FieldSpec& spec() const { return spec_; }

  FieldElement inv() const { return {spec_, spec_.inv(value_)}; }
  FieldElement pow(long long e) const { return {spec_, spec_.pow(value_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {spec_, spec_.neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.spec_ == b.spec_;
  }

 private:
  FieldSpec spec_;
  Symbol value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, long long e);
FieldElement primitive_element(const FieldSpec& spec);
FieldElement nth_root_of_unity(const FieldSpec& spec, std::uint32_t r);

// Number theory helpers shared by builders and field selection.
bool is_prime(std::uint64_t n);
// Returns {p, m} when n = p^m, m >= 1; {0, 0} otherwise.
std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace convcode
