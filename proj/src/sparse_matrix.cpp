#include "simpmon/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace simpmon {

void row_axpy(SparseRow& dst, const Integer& factor, const SparseRow& src) {
  if (sgn(factor) == 0 || src.empty()) return;
  SparseRow out;
  out.reserve(dst.size() + src.size());
  auto d = dst.begin();
  auto s = src.begin();
  while (d != dst.end() || s != src.end()) {
    if (s == src.end() || (d != dst.end() && d->col < s->col)) {
      out.push_back(std::move(*d));
      ++d;
    } else if (d == dst.end() || s->col < d->col) {
      out.push_back({s->col, factor * s->value});
      ++s;
    } else {
      Integer v = d->value + factor * s->value;
      if (sgn(v) != 0) out.push_back({d->col, std::move(v)});
      ++d;
      ++s;
    }
  }
  dst = std::move(out);
}

void row_combine(SparseRow& r0, SparseRow& r1, const Integer& a,
                 const Integer& b, const Integer& c, const Integer& d) {
  SparseRow n0;
  SparseRow n1;
  auto p = r0.begin();
  auto q = r1.begin();
  static const Integer zero = 0;
  while (p != r0.end() || q != r1.end()) {
    std::size_t col;
    const Integer* x = &zero;
    const Integer* y = &zero;
    if (q == r1.end() || (p != r0.end() && p->col < q->col)) {
      col = p->col;
      x = &p->value;
      ++p;
    } else if (p == r0.end() || q->col < p->col) {
      col = q->col;
      y = &q->value;
      ++q;
    } else {
      col = p->col;
      x = &p->value;
      y = &q->value;
      ++p;
      ++q;
    }
    Integer v0 = a * *x + b * *y;
    Integer v1 = c * *x + d * *y;
    if (sgn(v0) != 0) n0.push_back({col, std::move(v0)});
    if (sgn(v1) != 0) n1.push_back({col, std::move(v1)});
  }
  r0 = std::move(n0);
  r1 = std::move(n1);
}

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Integer(1)});
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(
    const std::vector<std::vector<long>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (dense[i].size() != cols)
      throw std::invalid_argument("from_dense: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[i][j] != 0) m.data_[i].push_back({j, Integer(dense[i][j])});
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_triples(std::size_t rows,
                                              std::size_t cols,
                                              std::vector<Triple> triples) {
  std::stable_sort(triples.begin(), triples.end(),
                   [](const Triple& x, const Triple& y) {
                     return x.row != y.row ? x.row < y.row : x.col < y.col;
                   });
  SparseIntMatrix m(rows, cols);
  for (auto& t : triples) {
    if (t.row >= rows || t.col >= cols)
      throw std::out_of_range("from_triples: index out of range");
    auto& r = m.data_[t.row];
    if (!r.empty() && r.back().col == t.col) {
      r.back().value += t.value;
      if (sgn(r.back().value) == 0) r.pop_back();
    } else if (sgn(t.value) != 0) {
      r.push_back({t.col, std::move(t.value)});
    }
  }
  return m;
}

std::size_t SparseIntMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

namespace {

template <class Row>
auto find_col(Row& r, std::size_t j) {
  return std::lower_bound(
      r.begin(), r.end(), j,
      [](const SparseEntry& e, std::size_t c) { return e.col < c; });
}

}  // namespace

Integer SparseIntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseIntMatrix::at");
  const auto& r = data_[i];
  auto it = find_col(r, j);
  if (it != r.end() && it->col == j) return it->value;
  return 0;
}

void SparseIntMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseIntMatrix::set");
  auto& r = data_[i];
  auto it = find_col(r, j);
  const bool present = it != r.end() && it->col == j;
  if (sgn(v) == 0) {
    if (present) r.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    r.insert(it, {j, v});
  }
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Integer& v) {
  set(i, j, at(i, j) + v);
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  return t;
}

SparseIntMatrix SparseIntMatrix::row_slice(std::size_t begin,
                                           std::size_t end) const {
  if (begin > end || end > rows_)
    throw std::out_of_range("SparseIntMatrix::row_slice");
  SparseIntMatrix m(end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin),
            data_.begin() + static_cast<std::ptrdiff_t>(end), m.data_.begin());
  return m;
}

SparseIntMatrix SparseIntMatrix::col_slice(std::size_t begin,
                                           std::size_t end) const {
  if (begin > end || end > cols_)
    throw std::out_of_range("SparseIntMatrix::col_slice");
  SparseIntMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i])
      if (e.col >= begin && e.col < end)
        m.data_[i].push_back({e.col - begin, e.value});
  return m;
}

SparseIntMatrix SparseIntMatrix::permute_rows(
    std::span<const std::size_t> perm) const {
  if (perm.size() != rows_) throw std::invalid_argument("permute_rows");
  SparseIntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_.at(perm[i]);
  return m;
}

SparseIntMatrix SparseIntMatrix::permute_cols(
    std::span<const std::size_t> perm) const {
  if (perm.size() != cols_) throw std::invalid_argument("permute_cols");
  std::vector<std::size_t> inverse(cols_);
  for (std::size_t j = 0; j < cols_; ++j) inverse.at(perm[j]) = j;
  SparseIntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i])
      m.data_[i].push_back({inverse[e.col], e.value});
    std::sort(m.data_[i].begin(), m.data_[i].end(),
              [](const SparseEntry& x, const SparseEntry& y) {
                return x.col < y.col;
              });
  }
  return m;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d[i][e.col] = e.value;
  return d;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  SparseIntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& e : a.row(i)) row_axpy(acc, e.value, b.row(e.col));
    c.mutable_row(i) = std::move(acc);
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i))
      os << i << ' ' << e.col << ' ' << e.value << '\n';
  return os;
}

}  // namespace simpmon
