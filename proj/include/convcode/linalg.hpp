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
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "convcode/gf.hpp"

namespace convcode {

/// Dense row-major matrix over a finite field.
///
/// Zero-sized dimensions are allowed so that empty blocks (for example the
/// Vandermonde block of an empty evaluation set) compose through hconcat.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries);

  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Symbol>>& rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const;

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Symbol> column(std::size_t c) const;
  const std::vector<Symbol>& entries() const { return data_; }
  std::vector<std::vector<Symbol>> to_rows() const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix transpose(const Matrix& m);

// A · v for a column vector v.
std::vector<Symbol> multiply(const Matrix& a, std::span<const Symbol> v);
// v · A for a row vector v.
std::vector<Symbol> left_multiply(std::span<const Symbol> v, const Matrix& a);

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
Matrix row_range(const Matrix& m, std::size_t begin, std::size_t end);
Matrix column_range(const Matrix& m, std::size_t begin, std::size_t end);
Matrix horizontal_concat(std::span<const Matrix> blocks);
Matrix horizontal_concat(std::initializer_list<Matrix> blocks);
Matrix vertical_concat(std::span<const Matrix> blocks);
// m · diag(diag)
Matrix scale_columns(const Matrix& m, std::span<const Symbol> diag);
Matrix diagonal(const FieldSpec& field, std::span<const Symbol> diag);

Symbol determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
// Throws SingularMatrixError.
Matrix inverse(const Matrix& m);
// X with A · X = B for square invertible A. Throws SingularMatrixError.
Matrix solve(const Matrix& a, const Matrix& b);
std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b);

/// Distinct field elements in a caller-chosen order.
class OrderedSet {
 public:
  OrderedSet(FieldSpec field, std::vector<Symbol> elements);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Symbol operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Symbol>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  bool contains(Symbol a) const;

  friend bool operator==(const OrderedSet& a, const OrderedSet& b) {
    return a.field_ == b.field_ && a.elems_ == b.elems_;
  }

 private:
  FieldSpec field_;
  std::vector<Symbol> elems_;
};

bool disjoint(const OrderedSet& a, const OrderedSet& b);
// Set union in order: a's elements, then b's. Throws unless disjoint.
OrderedSet concat(const OrderedSet& a, const OrderedSet& b);

// Entry (i, j) = 1 / (x_i - y_j). Throws unless x and y are disjoint.
Matrix cauchy(const OrderedSet& x, const OrderedSet& y);
// r x |a|, entry (i, j) = a_j^i.
Matrix vandermonde(const OrderedSet& a, std::size_t r);
// [V_{a,r} e^r], or [V_{a,3} e^2 e^3] when triply is set (r must be 3).
Matrix extended_vandermonde(const OrderedSet& a, std::size_t r, bool triply = false);

// Brute-force size caps for is_superregular.
inline constexpr std::size_t kSuperregularMaxOrder = 8;
inline constexpr std::size_t kSuperregularMaxEntries = 200;

// Every square submatrix nonsingular. Throws CapExceededError beyond the caps.
bool is_superregular(const Matrix& m);

// theta with u = theta * v, pivoting on the first nonzero entry of v.
// Throws PreconditionError for an all-zero v or mismatched lengths.
std::optional<Symbol> scalar_multiple_of(const FieldSpec& field, std::span<const Symbol> u,
                                         std::span<const Symbol> v);

}  // namespace convcode
