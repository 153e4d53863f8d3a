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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "visco/rational.hpp"
#include "visco/subsets.hpp"

namespace visco {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<QVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  QVec row(std::size_t i) const;
  QVec col(std::size_t j) const;
  RationalMatrix transposed() const;

  /// Appends a row (must match the column count).
  void push_row(const QVec& r);

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Rank over the rationals. Rows are cleared to integers and eliminated with
/// the fraction-free Bareiss scheme, which keeps intermediate entries as
/// single determinants rather than products of pivots.
std::size_t rank(const RationalMatrix& m);

/// Exact determinant of the square submatrix selected by `rows` x `cols`
/// (0-based, equal sizes). Throws IndexError on out-of-range or mismatched
/// selections.
Rat minor_det(const RationalMatrix& m, const Subset& rows, const Subset& cols);

/// Determinant of a square matrix.
Rat determinant(const RationalMatrix& m);

/// Basis of the right kernel {x : m x = 0}, as rows.
std::vector<QVec> kernel_basis(const RationalMatrix& m);

/// Solves m x = b. Returns false when the system is inconsistent; when the
/// solution is not unique an arbitrary representative is produced.
bool solve(const RationalMatrix& m, const QVec& b, QVec& x);

/// Row space basis (a maximal independent subset of the rows, reduced).
std::vector<QVec> row_space_basis(const RationalMatrix& m);

}  // namespace visco
