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
#include <optional>
#include <span>
#include <vector>

#include "convcode/linalg.hpp"

namespace convcode {

using Codeword = std::vector<Symbol>;

struct KnownSymbol {
  std::size_t position;
  Symbol value;
};

enum class CodeRepresentation { kSystematic, kParityCheck };

// verify_mds refuses to enumerate more than this many coordinate subsets.
inline constexpr std::uint64_t kMdsSubsetCap = 1'000'000;

/// A scalar [n, k] linear code, given either by the parity block P of a
/// systematic generator [I_k P] or by a full-row-rank parity-check matrix H.
///
/// Message symbols always occupy the first k coordinates. For a parity-check
/// code that means the trailing (n-k) columns of H must be invertible before
/// the code can encode or decode; verify_mds does not need that.
class MdsCode {
 public:
  static MdsCode systematic(Matrix parity);
  static MdsCode parity_check(Matrix h);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t r() const { return n_ - k_; }
  const FieldSpec& field() const { return matrix_.field(); }
  CodeRepresentation representation() const { return repr_; }
  // P for systematic codes, H for parity-check codes.
  const Matrix& matrix() const { return matrix_; }

  bool has_systematic_form() const { return parity_.has_value(); }
  // P with G = [I_k P]. Throws SingularMatrixError when H's trailing block is singular.
  const Matrix& systematic_parity() const;
  Matrix generator_matrix() const;
  Matrix parity_check_matrix() const;

  Codeword encode(std::span<const Symbol> message) const;
  bool contains(std::span<const Symbol> word) const;
  // Throws PreconditionError (too few / duplicate positions), SingularMatrixError
  // (selected positions not an information set) or InconsistentDataError (the
  // extra knowns disagree with the decoded message).
  std::vector<Symbol> decode_erasures(std::span<const KnownSymbol> known) const;

  // Brute force over all coordinate subsets. Throws CapExceededError past kMdsSubsetCap.
  bool verify_mds() const;

  // Removes parity coordinates; the result is in systematic form.
  MdsCode puncture(std::span<const std::size_t> drop) const;

 private:
  MdsCode(CodeRepresentation repr, Matrix matrix, std::size_t n, std::size_t k, std::optional<Matrix> parity);

  CodeRepresentation repr_;
  Matrix matrix_;
  std::size_t n_;
  std::size_t k_;
  std::optional<Matrix> parity_;
};

}  // namespace convcode
