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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convcode/access_convert.hpp"
#include "convcode/random.hpp"

namespace convcode {

/// Merge parameters for the piggybacked vector code; requires k_i > r_f > r_i.
struct BwParams {
  std::size_t k_i = 0;
  std::size_t r_i = 0;
  std::size_t r_f = 0;
  std::size_t lambda = 0;

  std::size_t g() const;
  std::size_t alpha() const { return r_f / g(); }
  std::size_t beta() const { return r_i / g(); }
  std::size_t n_i() const { return k_i + r_i; }
  std::size_t k_f() const { return lambda * k_i; }
  std::size_t n_f() const { return k_f() + r_f; }
  void validate() const;

  friend bool operator==(const BwParams&, const BwParams&) = default;
};

struct BandwidthCost {
  std::uint64_t read = 0;
  std::uint64_t write = 0;
  std::uint64_t total() const { return read + write; }
};

// Optimal conversion bandwidth in sub-symbols for sub-packetization alpha.
// Throws PreconditionError if the read term is not an integer for this alpha.
BandwidthCost bandwidth_bound(std::size_t k_i, std::size_t r_i, std::size_t r_f, std::size_t lambda,
                              std::size_t alpha);
BandwidthCost bandwidth_bound(const BwParams& params);

// r_f / gcd(r_f, r_i); needs r_f >= r_i >= 1.
std::size_t min_subpacketization(std::size_t r_f, std::size_t r_i);
// prod_t r_t / gcd(r_i, r_t) for a family of final redundancies, each > r_i.
std::size_t multi_rf_subpacketization(std::size_t r_i, std::span<const std::size_t> r_finals);

/// Piggybacked vector pair over a scalar (k_i + r_f, k_i; k_f + r_f, k_f) base pair.
struct VectorCodePair {
  BwParams params;
  ConvertiblePair base;
  Matrix p_initial;              // k_i x r_f, columns p^0 .. p^(r_f - 1)
  std::vector<Matrix> p_blocks;  // P^(l), k_i x r_f each
  std::vector<Matrix> w;         // P^(l) = P^I W_l, r_f x r_f each
  MdsCode column_code;           // [k_i + r_i, k_i] code with parity p^0 .. p^(r_i - 1)

  const FieldSpec& field() const { return p_initial.field(); }
  // Column u of P^I whose multiple rides on parity row i, sub-symbol j >= beta.
  std::size_t piggyback_column(std::size_t i, std::size_t j) const;
  // Message column feeding that piggyback.
  std::size_t piggyback_source(std::size_t i) const { return i / params.g(); }
};

// Base pair: plain GRS when q >= n_f, else doubly-extended (q >= n_f - 1).
VectorCodePair build_vector_pair(const BwParams& params, const FieldSpec& field);
// Any scalar pair of shape (k_i + r_f, k_i; k_f + r_f, k_f) with systematic forms.
VectorCodePair build_vector_pair(const BwParams& params, ConvertiblePair base);

/// n vector symbols of alpha sub-symbols each; symbols[i][j] is c_{i,j}.
struct VectorCodeword {
  std::size_t alpha = 0;
  std::vector<std::vector<Symbol>> symbols;

  std::size_t n() const { return symbols.size(); }
  friend bool operator==(const VectorCodeword&, const VectorCodeword&) = default;
};

// A k x alpha message, row t holding the alpha sub-symbols of message symbol t.
using VectorMessage = std::vector<std::vector<Symbol>>;

VectorCodeword vector_encode_initial(const VectorCodePair& pair, const VectorMessage& message);
VectorCodeword vector_encode_final(const VectorCodePair& pair, std::span<const VectorMessage> messages);

struct KnownVectorSymbol {
  std::size_t position;
  std::vector<Symbol> value;
};

// Recovers the message from any >= k_i symbols of an initial codeword.
VectorMessage vector_decode(const VectorCodePair& pair, std::span<const KnownVectorSymbol> known);
// True when the array is a codeword of the initial vector code.
bool vector_contains_initial(const VectorCodePair& pair, const VectorCodeword& word);

enum class ReadPolicy { kOptimal, kDefault };

struct BandwidthTrace {
  std::vector<std::vector<std::size_t>> reads;  // [initial codeword][position] sub-symbols read
  std::uint64_t read_total = 0;
  std::uint64_t write_total = 0;

  // Every systematic disk gave the same amount and every parity disk was read whole.
  bool uniform_download(const BwParams& params) const;
  friend bool operator==(const BandwidthTrace&, const BandwidthTrace&) = default;
};

struct VectorConversionResult {
  VectorCodeword final_codeword;
  BandwidthTrace trace;
};

// Throws InconsistentDataError for inputs outside the initial vector code.
VectorConversionResult vector_convert(const VectorCodePair& pair, std::span<const VectorCodeword> initial_codewords,
                                      ReadPolicy policy = ReadPolicy::kOptimal);

struct BandwidthReport {
  std::size_t trials = 0;
  std::uint64_t read = 0;
  std::uint64_t write = 0;
  std::uint64_t bound_read = 0;
  std::uint64_t bound_write = 0;
  std::int64_t excess = 0;  // read + write - bound total
  bool conversions_correct = false;
  bool data_independent = false;
  bool optimal = false;
  std::string failure;

  friend bool operator==(const BandwidthReport&, const BandwidthReport&) = default;
};

BandwidthReport verify_bandwidth_optimal(const VectorCodePair& pair, std::size_t trials, std::uint64_t seed,
                                         ReadPolicy policy = ReadPolicy::kOptimal);

VectorMessage random_vector_message(const VectorCodePair& pair, Rng& rng);

}  // namespace convcode
