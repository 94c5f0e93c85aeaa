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

#include "convcode/linalg.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "convcode/combinatorics.hpp"

namespace convcode {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, "matrix entry count does not match its shape");
  for (auto v : data_) require(field_.contains(v), "matrix entry outside the field");
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Symbol> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(data));
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Symbol Matrix::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, "matrix index out of range");
  return (*this)(r, c);
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Symbol>> Matrix::to_rows() const {
  std::vector<std::vector<Symbol>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Symbol v) { return v == 0; });
}

namespace {
void same_field(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), "matrices over different fields");
}
}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  const FieldSpec& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().neg(a(i, j));
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

std::vector<Symbol> multiply(const Matrix& a, std::span<const Symbol> v) {
  require(v.size() == a.cols(), "vector length does not match matrix columns");
  const FieldSpec& f = a.field();
  std::vector<Symbol> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Symbol acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::vector<Symbol> left_multiply(std::span<const Symbol> v, const Matrix& a) {
  require(v.size() == a.rows(), "vector length does not match matrix rows");
  const FieldSpec& f = a.field();
  std::vector<Symbol> out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], a(i, j)));
  }
  return out;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.at(rows[i], cols[j]);
  return out;
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return submatrix(m, rows, cols);
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  std::vector<std::size_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return submatrix(m, rows, cols);
}

Matrix row_range(const Matrix& m, std::size_t begin, std::size_t end) {
  require(begin <= end && end <= m.rows(), "row range out of bounds");
  std::vector<std::size_t> rows(end - begin);
  std::iota(rows.begin(), rows.end(), begin);
  return select_rows(m, rows);
}

Matrix column_range(const Matrix& m, std::size_t begin, std::size_t end) {
  require(begin <= end && end <= m.cols(), "column range out of bounds");
  std::vector<std::size_t> cols(end - begin);
  std::iota(cols.begin(), cols.end(), begin);
  return select_columns(m, cols);
}

Matrix horizontal_concat(std::span<const Matrix> blocks) {
  require(!blocks.empty(), "horizontal_concat needs at least one block");
  const std::size_t rows = blocks[0].rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    same_field(blocks[0], b);
    require(b.rows() == rows, "horizontal_concat row mismatch");
    cols += b.cols();
  }
  Matrix out(blocks[0].field(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

Matrix horizontal_concat(std::initializer_list<Matrix> blocks) {
  return horizontal_concat(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix vertical_concat(std::span<const Matrix> blocks) {
  std::vector<Matrix> t;
  t.reserve(blocks.size());
  for (const auto& b : blocks) t.push_back(transpose(b));
  return transpose(horizontal_concat(t));
}

Matrix scale_columns(const Matrix& m, std::span<const Symbol> diag) {
  require(diag.size() == m.cols(), "scale_columns length mismatch");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.field().mul(m(i, j), diag[j]);
  return out;
}

Matrix diagonal(const FieldSpec& field, std::span<const Symbol> diag) {
  Matrix out(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

namespace {

// In-place row reduction of an n x c block stored row-major in `a`, pivoting
// over the first `pivot_cols` columns. Returns the rank and accumulates the
// determinant (meaningful when square and full rank).
struct Reduction {
  std::size_t rank = 0;
  Symbol det = 1;
  std::vector<std::size_t> pivot_columns;
};

Reduction reduce(const FieldSpec& f, std::vector<Symbol>& a, std::size_t n, std::size_t c, std::size_t pivot_cols,
                 bool full_jordan) {
  Reduction red;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv * c + col] == 0) ++piv;
    if (piv == n) {
      red.det = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a[piv * c + j], a[row * c + j]);
      red.det = f.neg(red.det);
    }
    const Symbol pv = a[row * c + col];
    red.det = f.mul(red.det, pv);
    const Symbol pinv = f.inv(pv);
    for (std::size_t j = col; j < c; ++j) a[row * c + j] = f.mul(a[row * c + j], pinv);
    for (std::size_t i = full_jordan ? 0 : row + 1; i < n; ++i) {
      if (i == row) continue;
      const Symbol factor = a[i * c + col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < c; ++j) a[i * c + j] = f.sub(a[i * c + j], f.mul(factor, a[row * c + j]));
    }
    red.pivot_columns.push_back(col);
    ++row;
  }
  red.rank = row;
  if (red.rank < n) red.det = 0;
  return red;
}

}  // namespace

Symbol determinant(const Matrix& m) {
  require(m.is_square(), "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Symbol> a = m.entries();
  return reduce(m.field(), a, m.rows(), m.cols(), m.cols(), false).det;
}

std::size_t rank(const Matrix& m) {
  std::vector<Symbol> a = m.entries();
  return reduce(m.field(), a, m.rows(), m.cols(), m.cols(), false).rank;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  require(a.is_square(), "solve needs a square coefficient matrix");
  require(a.rows() == b.rows(), "solve shape mismatch");
  same_field(a, b);
  const std::size_t n = a.rows(), c = a.cols() + b.cols();
  std::vector<Symbol> aug(n * c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug[i * c + j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug[i * c + a.cols() + j] = b(i, j);
  }
  const auto red = reduce(a.field(), aug, n, c, a.cols(), true);
  if (red.rank < n) throw SingularMatrixError("matrix is singular");
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug[i * c + a.cols() + j];
  return x;
}

std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b) {
  Matrix rhs(a.field(), b.size(), 1, std::vector<Symbol>(b.begin(), b.end()));
  return solve(a, rhs).column(0);
}

Matrix inverse(const Matrix& m) { return solve(m, Matrix::identity(m.field(), m.rows())); }

OrderedSet::OrderedSet(FieldSpec field, std::vector<Symbol> elements)
    : field_(std::move(field)), elems_(std::move(elements)) {
  std::unordered_set<Symbol> seen;
  for (auto v : elems_) {
    require(field_.contains(v), "set element outside the field");
    require(seen.insert(v).second, "duplicate element " + std::to_string(v) + " in ordered set");
  }
}

bool OrderedSet::contains(Symbol a) const { return std::find(elems_.begin(), elems_.end(), a) != elems_.end(); }

bool disjoint(const OrderedSet& a, const OrderedSet& b) {
  return std::none_of(a.begin(), a.end(), [&](Symbol v) { return b.contains(v); });
}

OrderedSet concat(const OrderedSet& a, const OrderedSet& b) {
  require(a.field() == b.field(), "sets over different fields");
  std::vector<Symbol> all = a.elements();
  all.insert(all.end(), b.begin(), b.end());
  return OrderedSet(a.field(), std::move(all));
}

Matrix cauchy(const OrderedSet& x, const OrderedSet& y) {
  require(x.field() == y.field(), "sets over different fields");
  require(disjoint(x, y), "Cauchy matrix needs disjoint evaluation sets");
  const FieldSpec& f = x.field();
  Matrix out(f, x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = f.inv(f.sub(x[i], y[j]));
  return out;
}

Matrix vandermonde(const OrderedSet& a, std::size_t r) {
  require(r >= 1, "Vandermonde needs r >= 1");
  const FieldSpec& f = a.field();
  Matrix out(f, r, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Symbol v = 1;
    for (std::size_t i = 0; i < r; ++i) {
      out(i, j) = v;
      v = f.mul(v, a[j]);
    }
  }
  return out;
}

Matrix extended_vandermonde(const OrderedSet& a, std::size_t r, bool triply) {
  const Matrix v = vandermonde(a, r);
  if (!triply) {
    Matrix e(a.field(), r, 1);
    e(r - 1, 0) = 1;
    return horizontal_concat({v, e});
  }
  require(r == 3, "triply-extended Vandermonde needs r = 3");
  Matrix e(a.field(), 3, 2);
  e(1, 0) = 1;
  e(2, 1) = 1;
  return horizontal_concat({v, e});
}

bool is_superregular(const Matrix& m) {
  const std::size_t order = std::min(m.rows(), m.cols());
  if (order > kSuperregularMaxOrder || m.rows() * m.cols() > kSuperregularMaxEntries)
    throw CapExceededError("superregularity check capped at min(rows, cols) <= 8 and rows * cols <= 200, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  for (auto v : m.entries())
    if (v == 0) return false;
  const FieldSpec& f = m.field();
  std::vector<Symbol> buf;
  for (std::size_t s = 2; s <= order; ++s) {
    buf.resize(s * s);
    bool ok = for_each_combination(m.rows(), s, [&](std::span<const std::size_t> rows) {
      return for_each_combination(m.cols(), s, [&](std::span<const std::size_t> cols) {
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) buf[i * s + j] = m(rows[i], cols[j]);
        return reduce(f, buf, s, s, s, false).rank == s;
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<Symbol> scalar_multiple_of(const FieldSpec& field, std::span<const Symbol> u,
                                         std::span<const Symbol> v) {
  require(u.size() == v.size(), "scalar_multiple_of needs equal lengths");
  const auto it = std::find_if(v.begin(), v.end(), [](Symbol x) { return x != 0; });
  require(it != v.end(), "scalar_multiple_of needs a nonzero reference vector");
  const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  const Symbol theta = field.div(u[pivot], v[pivot]);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != field.mul(theta, v[i])) return std::nullopt;
  return theta;
}

}  // namespace convcode
