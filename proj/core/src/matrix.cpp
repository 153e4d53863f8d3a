// Copyright 2026 The Authors.
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

#include "visco/matrix.hpp"

#include <algorithm>
#include <utility>

#include "visco/errors.hpp"

namespace visco {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw IndexError("ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<QVec>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw IndexError("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QVec RationalMatrix::row(std::size_t i) const {
  QVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

QVec RationalMatrix::col(std::size_t j) const {
  QVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

void RationalMatrix::push_row(const QVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw IndexError("row length mismatch");
  entries_.insert(entries_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

// Integer matrix with per-row denominators cleared; rank and determinant of
// the original are recovered from the row scales.
struct ClearedMatrix {
  std::vector<std::vector<Int>> a;
  Rat det_scale = 1;  // det(original) = det(a) * det_scale
};

ClearedMatrix clear_denominators(const RationalMatrix& m) {
  ClearedMatrix out;
  out.a.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int den_lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      den_lcm = lcm(den_lcm, denominator(m.at(i, j)));
    }
    out.a[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      out.a[i][j] = numerator(x) * (den_lcm / denominator(x));
    }
    out.det_scale /= den_lcm;
  }
  return out;
}

// Fraction-free Bareiss elimination. Returns the rank; when `det` is
// non-null and the matrix is square, also reports the exact determinant of
// the integer matrix.
std::size_t bareiss(std::vector<std::vector<Int>>& a, Int* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Int prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  std::size_t col = 0;
  while (rank < rows && col < cols) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) {
      ++col;  // zero column; determinant (if square) is zero
      continue;
    }
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
    ++col;
  }
  if (det != nullptr) {
    if (rank == rows && rows == cols && rows > 0) {
      *det = sign * a[rows - 1][cols - 1];
    } else {
      *det = (rows == 0) ? Int(1) : Int(0);
    }
  }
  return rank;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ClearedMatrix c = clear_denominators(m);
  return bareiss(c.a, nullptr);
}

Rat determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw IndexError("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  ClearedMatrix c = clear_denominators(m);
  Int d;
  bareiss(c.a, &d);
  return Rat(d) * c.det_scale;
}

Rat minor_det(const RationalMatrix& m, const Subset& rows, const Subset& cols) {
  if (rows.size() != cols.size()) throw IndexError("minor selection mismatch");
  RationalMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 0 || static_cast<std::size_t>(rows[i]) >= m.rows() ||
          cols[j] < 0 || static_cast<std::size_t>(cols[j]) >= m.cols()) {
        throw IndexError("minor index out of range");
      }
      sub.at(i, j) = m.at(rows[i], cols[j]);
    }
  }
  return determinant(sub);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<QVec> kernel_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<QVec> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -a[i][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RationalMatrix& m, const QVec& b, QVec& x) {
  if (b.size() != m.rows()) throw IndexError("rhs length mismatch");
  std::vector<QVec> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    a[i] = m.row(i);
    a[i].push_back(b[i]);
  }
  const std::vector<std::size_t> pivots = rref(a);
  const std::size_t cols = m.cols();
  if (!pivots.empty() && pivots.back() == cols) return false;  // 0 = 1 row
  x.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return true;
}

std::vector<QVec> row_space_basis(const RationalMatrix& m) {
  std::vector<QVec> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  const std::vector<std::size_t> pivots = rref(a);
  a.resize(pivots.size());
  return a;
}

}  // namespace visco
