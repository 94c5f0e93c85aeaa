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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convcode/linalg.hpp"
#include "convcode/mds.hpp"

namespace convcode {

/// lambda codewords of an [k_i + r_i, k_i] code merge into one
/// [lambda k_i + r_f, lambda k_i] codeword.
struct MergeParams {
  std::size_t k_i = 0;
  std::size_t r_i = 0;
  std::size_t r_f = 0;
  std::size_t lambda = 0;

  std::size_t n_i() const { return k_i + r_i; }
  std::size_t k_f() const { return lambda * k_i; }
  std::size_t n_f() const { return k_f() + r_f; }
  // r_f <= min{k_i, r_i}: only here can conversion beat the default re-encode.
  bool access_optimal_regime() const { return r_f <= std::min(k_i, r_i); }

  // k_i > 1, r_i >= 1, r_f > 1, lambda >= 2.
  void validate() const;

  friend bool operator==(const MergeParams&, const MergeParams&) = default;
};

enum class Family { kSubgroupMult, kSubgroupAdd, kGrs, kGrsDoublyExtended, kGrsTriplyExtended, kDefault };
enum class Variant { kBase, kA, kB };

std::string family_tag(Family family);
Family parse_family(const std::string& tag);
std::string variant_tag(Variant variant);
Variant parse_variant(const std::string& tag);

struct NamedSet {
  std::string name;
  OrderedSet set;
};

/// Coefficients combining symbols of one initial codeword into one new parity.
struct PlanTerm {
  std::vector<std::size_t> sources;  // coordinates inside that initial codeword
  std::vector<Symbol> coefficients;

  friend bool operator==(const PlanTerm&, const PlanTerm&) = default;
};

/// New parity i = sum over codewords l of sum_s terms[i][l].coefficients[s] * c^l[sources[s]].
struct ConversionPlan {
  std::vector<std::vector<PlanTerm>> parities;  // [new parity][initial codeword]

  std::size_t num_parities() const { return parities.size(); }
  // One source per (new parity, initial codeword).
  bool per_symbol() const;

  friend bool operator==(const ConversionPlan&, const ConversionPlan&) = default;
};

struct DiskId {
  std::size_t codeword;
  std::size_t position;

  friend auto operator<=>(const DiskId&, const DiskId&) = default;
};

struct AccessTrace {
  std::vector<DiskId> read_set;                  // distinct, sorted
  std::size_t disks_written = 0;
  std::vector<std::vector<DiskId>> symbol_reads;  // per new parity, in read order

  std::size_t disks_read() const { return read_set.size(); }
  std::size_t total_access() const { return disks_read() + disks_written; }
  // Every new symbol read exactly one disk of every initial codeword.
  bool per_symbol(std::size_t lambda) const;

  friend bool operator==(const AccessTrace&, const AccessTrace&) = default;
};

struct ConvertiblePair {
  MergeParams params;
  Family family = Family::kDefault;
  Variant variant = Variant::kBase;
  MdsCode initial_code;
  MdsCode final_code;
  ConversionPlan plan;
  std::vector<NamedSet> sets;  // evaluation sets used by the builder, for reporting

  const FieldSpec& field() const { return initial_code.field(); }
  const OrderedSet* find_set(const std::string& name) const;
};

// Cauchy construction over a multiplicative subgroup of order r, r-1 (variant
// A, adds 0 to Y) or r-2 (variant B, adds 0 to Y and an all-one column).
// x1 overrides the first block of evaluation points. When r_f < r_i the final
// code keeps the first r_f parity columns.
ConvertiblePair build_subgroup_mult(const MergeParams& params, const FieldSpec& field, Variant variant,
                                    std::optional<std::vector<Symbol>> x1 = std::nullopt);
// Cauchy construction over an additive subgroup of order r (base) or r-1
// (variant A, appends an all-one column).
ConvertiblePair build_subgroup_add(const MergeParams& params, const FieldSpec& field, Variant variant,
                                   std::optional<std::vector<Symbol>> x1 = std::nullopt);
// Parity-check GRS pair with diagonal block maps; doubly_extended appends the
// e^r column and lowers the field requirement by one.
ConvertiblePair build_grs(const MergeParams& params, const FieldSpec& field, bool doubly_extended);
// r_i = r_f = 3 over GF(2^m) with [V e^2 e^3] parity checks.
ConvertiblePair build_triply_extended(const MergeParams& params, const FieldSpec& field);
// Reed-Solomon pair with the re-encoding plan; works for any parameters.
ConvertiblePair build_default(const MergeParams& params, const FieldSpec& field);

// Re-encoding plan: read the k_i message symbols of every initial codeword.
ConversionPlan default_plan(const ConvertiblePair& pair);

struct BlockMatch {
  std::size_t source_column;  // i_l
  Symbol scale;               // theta with p^(l,i) = theta * p^(1,i_l)
};

struct BlockMap {
  std::vector<std::vector<BlockMatch>> blocks;  // [block l][column i]
  bool is_permutation = true;                   // i -> i_l injective in every block
};

// Matches every column of every k_i-row block of P to a scalar multiple of a
// first-block column. nullopt when some column has no match.
std::optional<BlockMap> verify_parallel_block_reconstructible(const Matrix& p, std::size_t k_i);

struct ConversionResult {
  Codeword final_codeword;
  AccessTrace trace;
};

// Runs the pair's plan. Throws InconsistentDataError for inputs outside the initial code.
ConversionResult convert(const ConvertiblePair& pair, std::span<const Codeword> initial_codewords);
ConversionResult convert_default(const ConvertiblePair& pair, std::span<const Codeword> initial_codewords);
ConversionResult run_plan(const ConvertiblePair& pair, const ConversionPlan& plan,
                          std::span<const Codeword> initial_codewords);

// Lower bound on disks read plus written.
std::size_t access_cost_bound(const MergeParams& params);

struct AccessReport {
  std::size_t trials = 0;
  std::size_t reads = 0;
  std::size_t writes = 0;
  std::size_t bound = 0;
  bool reads_optimal = false;
  bool writes_optimal = false;
  bool conversions_correct = false;
  bool data_independent = false;
  bool per_symbol = false;
  bool passed = false;
  AccessTrace trace;
  std::string failure;
};

// Random-trial check of correctness and of reads = lambda r_f, writes = r_f.
// Subgroup families must additionally be per-symbol.
AccessReport verify_access_optimal(const ConvertiblePair& pair, std::size_t trials, std::uint64_t seed);

// Coefficients of prod (x - beta), low to high.
std::vector<Symbol> vanishing_polynomial(const FieldSpec& field, std::span<const Symbol> roots);
// r_f x r_i banded matrix of f's coefficients; F * H^I discards the B^I \ B^F part.
Matrix f_matrix(const FieldSpec& field, std::span<const Symbol> f, std::size_t r_f, std::size_t r_i);

}  // namespace convcode
