// Copyright 2026 The bcnobs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BCNOBS_STP_HPP
#define BCNOBS_STP_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

using index_t = std::uint32_t;

/// Dense integer matrix, row-major. Only used where the general
/// semi-tensor product is needed; logical content never needs reals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }
  }
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0 || data_.size() != rows * cols) {
      throw std::invalid_argument("DenseMatrix: data does not match dimensions");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

/// Semi-tensor product: (A (x) I_{a/n}) (B (x) I_{a/p}) with a = lcm(n, p),
/// where A is m x n and B is p x q. Reduces to the ordinary product when n = p.
inline DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  const std::size_t alpha = std::lcm(n, p);
  if (alpha == n && alpha == p) return a * b;
  const DenseMatrix lhs = alpha == n ? a : kron(a, DenseMatrix::identity(alpha / n));
  const DenseMatrix rhs = alpha == p ? b : kron(b, DenseMatrix::identity(alpha / p));
  return lhs * rhs;
}

/// A 0/1 matrix whose k-th column is the standard basis vector
/// delta_rows^{col_index[k]}; written delta_rows[i_1, ..., i_s].
/// Column indices are 1-based.
class LogicalMatrix {
 public:
  LogicalMatrix() = default;
  LogicalMatrix(index_t rows, std::vector<index_t> col_index)
      : rows_(rows), cols_(std::move(col_index)) {
    if (rows_ == 0 || cols_.empty()) {
      throw std::invalid_argument("LogicalMatrix: dimensions must be positive");
    }
    for (auto c : cols_) {
      if (c < 1 || c > rows_) {
        throw std::out_of_range("LogicalMatrix: column index " + std::to_string(c) +
                                " outside [1, " + std::to_string(rows_) + "]");
      }
    }
  }

  /// delta_n^i as an n x 1 logical matrix.
  static LogicalMatrix delta(index_t n, index_t i) { return LogicalMatrix(n, {i}); }

  static LogicalMatrix identity(index_t n) {
    std::vector<index_t> cols(n);
    std::iota(cols.begin(), cols.end(), index_t{1});
    return LogicalMatrix(n, std::move(cols));
  }

  index_t rows() const noexcept { return rows_; }
  index_t cols() const noexcept { return static_cast<index_t>(cols_.size()); }
  /// 1-based column access.
  index_t operator[](index_t k) const { return cols_.at(k - 1); }
  const std::vector<index_t>& col_index() const noexcept { return cols_; }

  bool is_delta_vector() const noexcept { return cols_.size() == 1; }

  DenseMatrix to_dense() const {
    DenseMatrix d(rows_, cols_.size());
    for (std::size_t k = 0; k < cols_.size(); ++k) d(cols_[k] - 1, k) = 1;
    return d;
  }

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  index_t rows_ = 0;
  std::vector<index_t> cols_;
};

/// Recovers the column-index form of a dense 0/1 matrix; throws if some
/// column is not a standard basis vector.
inline LogicalMatrix to_logical(const DenseMatrix& d) {
  std::vector<index_t> cols(d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c) {
    index_t hit = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (d(r, c) == 0) continue;
      if (d(r, c) != 1 || hit != 0) {
        throw std::invalid_argument("to_logical: column is not a basis vector");
      }
      hit = static_cast<index_t>(r + 1);
    }
    if (hit == 0) throw std::invalid_argument("to_logical: zero column");
    cols[c] = hit;
  }
  return LogicalMatrix(static_cast<index_t>(d.rows()), std::move(cols));
}

/// Semi-tensor product of logical matrices in column-index form. Supports
/// the two divisibility cases (B.rows | A.cols, A.cols | B.rows); anything
/// else should go through the dense stp.
inline LogicalMatrix logical_stp(const LogicalMatrix& a, const LogicalMatrix& b) {
  const index_t n = a.cols();
  const index_t p = b.rows();
  if (n % p == 0) {
    // A (B (x) I_t): column (j-1)t + k of B (x) I_t is delta^{(b_j - 1)t + k}.
    const index_t t = n / p;
    std::vector<index_t> cols;
    cols.reserve(static_cast<std::size_t>(b.cols()) * t);
    for (index_t j = 1; j <= b.cols(); ++j)
      for (index_t k = 1; k <= t; ++k) cols.push_back(a[(b[j] - 1) * t + k]);
    return LogicalMatrix(a.rows(), std::move(cols));
  }
  if (p % n == 0) {
    // (A (x) I_t) B: column (c-1)t + k of A (x) I_t is delta^{(a_c - 1)t + k}.
    const index_t t = p / n;
    std::vector<index_t> cols;
    cols.reserve(b.cols());
    for (index_t j = 1; j <= b.cols(); ++j) {
      const index_t c = (b[j] - 1) / t + 1;
      const index_t k = (b[j] - 1) % t + 1;
      cols.push_back((a[c] - 1) * t + k);
    }
    return LogicalMatrix(a.rows() * t, std::move(cols));
  }
  throw std::invalid_argument("logical_stp: " + std::to_string(n) + " and " + std::to_string(p) +
                              " are not divisible either way");
}

/// Swap matrix W_[m,n]: W (x |x u) = u |x x for x in Delta_m, u in Delta_n.
inline LogicalMatrix swap_matrix(index_t m, index_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("swap_matrix: dimensions must be positive");
  std::vector<index_t> cols(static_cast<std::size_t>(m) * n);
  for (index_t i = 1; i <= m; ++i)
    for (index_t j = 1; j <= n; ++j) cols[(i - 1) * n + (j - 1)] = (j - 1) * m + i;
  return LogicalMatrix(m * n, std::move(cols));
}

/// A Boolean valuation, most significant variable first.
using Valuation = std::vector<bool>;

/// Delta index of a valuation: all-true is 1, ordered lexicographically
/// with true before false (true -> delta_2^1, false -> delta_2^2).
inline index_t valuation_to_index(const Valuation& v) {
  index_t idx = 0;
  for (bool bit : v) idx = idx * 2 + (bit ? 0 : 1);
  return idx + 1;
}

inline Valuation index_to_valuation(index_t idx, std::size_t width) {
  if (width >= 32 || idx < 1 || idx > (index_t{1} << width)) {
    throw std::out_of_range("index_to_valuation: index out of range");
  }
  Valuation v(width);
  index_t rest = idx - 1;
  for (std::size_t k = width; k-- > 0;) {
    v[k] = (rest & 1u) == 0;
    rest >>= 1;
  }
  return v;
}

/// Compiles a total truth table into its structure matrix
/// F in L_{2^n_outputs x 2^n_inputs}.
inline LogicalMatrix from_truth_table(std::size_t n_inputs, std::size_t n_outputs,
                                      const std::map<Valuation, Valuation>& table) {
  if (n_inputs == 0 || n_outputs == 0 || n_inputs >= 31 || n_outputs >= 31) {
    throw std::invalid_argument("from_truth_table: unsupported arity");
  }
  const index_t in_size = index_t{1} << n_inputs;
  std::vector<index_t> cols(in_size, 0);
  for (const auto& [in, out] : table) {
    if (in.size() != n_inputs || out.size() != n_outputs) {
      throw std::out_of_range("from_truth_table: valuation has wrong width");
    }
    cols[valuation_to_index(in) - 1] = valuation_to_index(out);
  }
  for (index_t k = 0; k < in_size; ++k) {
    if (cols[k] == 0) {
      throw std::invalid_argument("from_truth_table: incomplete table, missing row " +
                                  std::to_string(k + 1));
    }
  }
  return LogicalMatrix(index_t{1} << n_outputs, std::move(cols));
}

enum class ColumnOrder { StateFirst, InputFirst };

/// Moves the column for (state i, input j) between position (i-1)M + j
/// (state-first) and (j-1)N + i (input-first).
inline LogicalMatrix reorder_columns(const LogicalMatrix& l, index_t n_states, index_t n_inputs,
                                     ColumnOrder from, ColumnOrder to) {
  if (static_cast<std::size_t>(l.cols()) != static_cast<std::size_t>(n_states) * n_inputs) {
    throw std::invalid_argument("reorder_columns: expected " +
                                std::to_string(n_states * n_inputs) + " columns, got " +
                                std::to_string(l.cols()));
  }
  if (from == to) return l;
  auto pos = [&](ColumnOrder order, index_t i, index_t j) {
    return order == ColumnOrder::StateFirst ? (i - 1) * n_inputs + j : (j - 1) * n_states + i;
  };
  std::vector<index_t> cols(l.cols());
  for (index_t i = 1; i <= n_states; ++i)
    for (index_t j = 1; j <= n_inputs; ++j) cols[pos(to, i, j) - 1] = l[pos(from, i, j)];
  return LogicalMatrix(l.rows(), std::move(cols));
}

}  // namespace bcnobs

#endif  // BCNOBS_STP_HPP
