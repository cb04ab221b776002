/*
 * Copyright 2026 The hypk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypk/kvalue.hpp"

namespace hypk {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix transposed() const;
  /// Columns [first, first + count).
  IntegerMatrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntegerMatrix row_block(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation; row counts must agree.
  IntegerMatrix hconcat(const IntegerMatrix& right) const;

  bool is_zero() const;
  bool is_diagonal() const;
  /// Fraction-free (Bareiss) determinant of a square matrix.
  BigInt determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// D = U * M * V with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;

  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Z^rows / image(m), as free rank plus cyclic torsion.
KValue cokernel(const IntegerMatrix& m);

/// Rank of the kernel of m viewed as a map Z^cols -> Z^rows.
std::size_t kernel_rank(const IntegerMatrix& m);

/// Basis of the kernel lattice of m, as the columns of the returned matrix.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

}  // namespace hypk
