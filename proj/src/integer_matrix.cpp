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
#include "hypk/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "hypk/error.hpp"

namespace hypk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::InvalidArgument, "matrix dimensions do not agree");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) fail(ErrorCode::InvalidArgument, "column block out of range");
  IntegerMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntegerMatrix IntegerMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) fail(ErrorCode::InvalidArgument, "row block out of range");
  IntegerMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

IntegerMatrix IntegerMatrix::hconcat(const IntegerMatrix& right) const {
  if (rows_ != right.rows_) fail(ErrorCode::InvalidArgument, "row counts differ");
  IntegerMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

BigInt IntegerMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (!x.is_zero()) ++r;
  return r;
}

namespace {

// Works on d in place while mirroring row operations on u and column
// operations on v, so that d = u * m * v holds throughout.
struct Reducer {
  IntegerMatrix& d;
  IntegerMatrix& u;
  IntegerMatrix& v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    BigInt best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j).is_zero()) continue;
        BigInt a = abs(d(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row t and column t; returns false if a smaller remainder appeared
  // and the pivot has to be chosen again.
  bool clear_cross(std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t).is_zero()) continue;
      const BigInt q = d(i, t) / d(t, t);
      add_row(i, t, -q);
      if (!d(i, t).is_zero()) return false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j).is_zero()) continue;
      const BigInt q = d(t, j) / d(t, t);
      add_col(j, t, -q);
      if (!d(t, j).is_zero()) return false;
    }
    return true;
  }

  // Finds an entry of the trailing block not divisible by the pivot and
  // folds its row into row t.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (!BigInt(d(i, j) % d(t, t)).is_zero()) {
          add_row(t, i, 1);
          return false;
        }
    return true;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition s{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
  Reducer r{s.d, s.u, s.v};
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      if (!r.place_pivot(t)) return s;  // trailing block is zero
      if (!r.clear_cross(t)) continue;
      if (!r.fix_divisibility(t)) continue;
      break;
    }
    if (s.d(t, t) < 0) {
      s.d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

KValue cokernel(const IntegerMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  KValue out;
  std::size_t rank = 0;
  for (const auto& x : s.diagonal()) {
    if (x.is_zero()) continue;
    ++rank;
    if (x > 1) out += KValue::cyclic(x.convert_to<std::uint64_t>());
  }
  out.free_rank = m.rows() - rank;
  return out;
}

std::size_t kernel_rank(const IntegerMatrix& m) { return m.cols() - smith_normal_form(m).rank(); }

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  const std::size_t rank = s.rank();
  return s.v.column_block(rank, m.cols() - rank);
}

}  // namespace hypk
