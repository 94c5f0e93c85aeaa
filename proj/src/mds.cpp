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

#include "convcode/mds.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "convcode/combinatorics.hpp"

namespace convcode {

MdsCode::MdsCode(CodeRepresentation repr, Matrix matrix, std::size_t n, std::size_t k, std::optional<Matrix> parity)
    : repr_(repr), matrix_(std::move(matrix)), n_(n), k_(k), parity_(std::move(parity)) {}

MdsCode MdsCode::systematic(Matrix parity) {
  require(parity.rows() >= 1, "systematic code needs k >= 1");
  const std::size_t k = parity.rows(), n = parity.rows() + parity.cols();
  Matrix p = parity;
  return MdsCode(CodeRepresentation::kSystematic, std::move(parity), n, k, std::move(p));
}

MdsCode MdsCode::parity_check(Matrix h) {
  require(h.cols() > h.rows(), "parity-check matrix must be wider than tall");
  require(rank(h) == h.rows(), "parity-check matrix must have full row rank");
  const std::size_t n = h.cols(), r = h.rows(), k = n - r;
  std::optional<Matrix> parity;
  try {
    // H = [H_m H_p]; c_p = -H_p^{-1} H_m c_m, so P = (-H_p^{-1} H_m)^T.
    const Matrix hp = column_range(h, k, n);
    const Matrix hm = column_range(h, 0, k);
    parity = transpose(-solve(hp, hm));
  } catch (const SingularMatrixError&) {
  }
  return MdsCode(CodeRepresentation::kParityCheck, std::move(h), n, k, std::move(parity));
}

const Matrix& MdsCode::systematic_parity() const {
  if (!parity_) throw SingularMatrixError("parity-check matrix has a singular trailing block; no systematic form");
  return *parity_;
}

Matrix MdsCode::generator_matrix() const {
  return horizontal_concat({Matrix::identity(field(), k_), systematic_parity()});
}

Matrix MdsCode::parity_check_matrix() const {
  if (repr_ == CodeRepresentation::kParityCheck) return matrix_;
  return horizontal_concat({-transpose(matrix_), Matrix::identity(field(), r())});
}

Codeword MdsCode::encode(std::span<const Symbol> message) const {
  require(message.size() == k_, "message length must be k = " + std::to_string(k_));
  for (auto v : message) require(field().contains(v), "message symbol outside the field");
  Codeword c(message.begin(), message.end());
  const auto parity = left_multiply(message, systematic_parity());
  c.insert(c.end(), parity.begin(), parity.end());
  return c;
}

bool MdsCode::contains(std::span<const Symbol> word) const {
  if (word.size() != n_) return false;
  for (auto v : word)
    if (!field().contains(v)) return false;
  const auto syndrome = multiply(parity_check_matrix(), word);
  return std::all_of(syndrome.begin(), syndrome.end(), [](Symbol v) { return v == 0; });
}

std::vector<Symbol> MdsCode::decode_erasures(std::span<const KnownSymbol> known) const {
  std::vector<KnownSymbol> sorted(known.begin(), known.end());
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.position < b.position; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i].position < n_, "known position out of range");
    require(i == 0 || sorted[i].position != sorted[i - 1].position, "duplicate known position");
    require(field().contains(sorted[i].value), "known value outside the field");
  }
  require(sorted.size() >= k_, "need at least k = " + std::to_string(k_) + " known symbols");

  const Matrix g = generator_matrix();
  std::vector<std::size_t> cols(k_);
  std::vector<Symbol> values(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    cols[i] = sorted[i].position;
    values[i] = sorted[i].value;
  }
  // m · G_S = c_S  <=>  G_S^T · m^T = c_S^T
  const auto message = solve(transpose(select_columns(g, cols)), values);
  for (std::size_t i = k_; i < sorted.size(); ++i) {
    const auto col = g.column(sorted[i].position);
    Symbol acc = 0;
    for (std::size_t j = 0; j < k_; ++j) acc = field().add(acc, field().mul(message[j], col[j]));
    if (acc != sorted[i].value)
      throw InconsistentDataError("known symbol at position " + std::to_string(sorted[i].position) +
                                  " is inconsistent with the other knowns");
  }
  return message;
}

bool MdsCode::verify_mds() const {
  if (binomial(n_, k_) > kMdsSubsetCap)
    throw CapExceededError("verify_mds capped at C(n, k) <= 10^6; C(" + std::to_string(n_) + ", " +
                           std::to_string(k_) + ") is larger");
  if (repr_ == CodeRepresentation::kSystematic) {
    // Every k columns of G = [I P] are independent.
    const Matrix g = generator_matrix();
    return for_each_combination(n_, k_, [&](std::span<const std::size_t> cols) {
      return rank(select_columns(g, cols)) == k_;
    });
  }
  // Every (n-k) columns of H are independent.
  return for_each_combination(n_, r(), [&](std::span<const std::size_t> cols) {
    return rank(select_columns(matrix_, cols)) == r();
  });
}

MdsCode MdsCode::puncture(std::span<const std::size_t> drop) const {
  std::set<std::size_t> dropped(drop.begin(), drop.end());
  require(dropped.size() == drop.size(), "duplicate coordinate in puncture set");
  require(dropped.size() <= r(), "cannot puncture more than n - k coordinates");
  for (auto c : dropped) require(c >= k_ && c < n_, "only parity coordinates can be punctured");
  std::vector<std::size_t> keep;
  for (std::size_t c = k_; c < n_; ++c)
    if (!dropped.count(c)) keep.push_back(c - k_);
  return systematic(select_columns(systematic_parity(), keep));
}

}  // namespace convcode
