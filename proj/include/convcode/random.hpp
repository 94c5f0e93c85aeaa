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
#include <limits>
#include <random>
#include <vector>

#include "convcode/gf.hpp"

namespace convcode {

// Seeded source for test messages. mt19937_64 output is fixed by the standard
// and sampling uses plain rejection, so a seed yields the same symbols on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  Symbol symbol(const FieldSpec& field) { return static_cast<Symbol>(below(field.q())); }
  Symbol nonzero_symbol(const FieldSpec& field) { return static_cast<Symbol>(1 + below(field.q() - 1)); }

  std::vector<Symbol> symbols(const FieldSpec& field, std::size_t n) {
    std::vector<Symbol> out(n);
    for (auto& v : out) v = symbol(field);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace convcode
