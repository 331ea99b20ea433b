#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "simpmon/integer.hpp"

namespace simpmon {

struct SparseEntry {
  std::size_t col;
  Integer value;

  bool operator==(const SparseEntry&) const = default;
};

// A row is kept sorted by column with no stored zeros.
using SparseRow = std::vector<SparseEntry>;

// dst += factor * src. Both rows sorted; the result stays sorted and
// zero-free.
void row_axpy(SparseRow& dst, const Integer& factor, const SparseRow& src);

// (r0, r1) <- (a r0 + b r1, c r0 + d r1).
void row_combine(SparseRow& r0, SparseRow& r1, const Integer& a,
                 const Integer& b, const Integer& c, const Integer& d);

// Row-major sparse matrix over the integers.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  static SparseIntMatrix identity(std::size_t n);
  static SparseIntMatrix from_dense(
      const std::vector<std::vector<long>>& dense);
  // Entries given as (row, col, value) triples; repeated positions add.
  struct Triple {
    std::size_t row;
    std::size_t col;
    Integer value;
  };
  static SparseIntMatrix from_triples(std::size_t rows, std::size_t cols,
                                      std::vector<Triple> triples);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  const SparseRow& row(std::size_t i) const { return data_.at(i); }
  SparseRow& mutable_row(std::size_t i) { return data_.at(i); }
  std::span<const SparseRow> row_span() const { return data_; }
  std::vector<SparseRow>& mutable_rows() { return data_; }

  Integer at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& v);
  void add(std::size_t i, std::size_t j, const Integer& v);

  SparseIntMatrix transpose() const;
  // Rows [begin, end) as a new matrix.
  SparseIntMatrix row_slice(std::size_t begin, std::size_t end) const;
  // Columns [begin, end) as a new matrix.
  SparseIntMatrix col_slice(std::size_t begin, std::size_t end) const;

  // new row i = old row perm[i]
  SparseIntMatrix permute_rows(std::span<const std::size_t> perm) const;
  // new col perm_inv... column j of the result is column perm[j] of this.
  SparseIntMatrix permute_cols(std::span<const std::size_t> perm) const;

  std::vector<std::vector<Integer>> to_dense() const;

  bool operator==(const SparseIntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Sparse triples `i j c`, one per line, after a `rows cols` header.
std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m);

}  // namespace simpmon
