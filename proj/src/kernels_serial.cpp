#include <algorithm>

#include "simpmon/kernels.hpp"

namespace simpmon::kernels {

std::vector<std::pair<std::uint32_t, long>> boundary_column(
    const BoundaryInput& in, std::size_t basis_position) {
  const std::uint32_t s = in.source_basis[basis_position];
  std::vector<std::pair<std::uint32_t, long>> col;
  col.reserve(in.faces.size());
  for (std::size_t i = 0; i < in.faces.size(); ++i) {
    const std::int64_t t = in.target_index[in.faces[i][s]];
    if (t < 0) continue;
    col.emplace_back(static_cast<std::uint32_t>(t), (i % 2 == 0) ? 1L : -1L);
  }
  std::sort(col.begin(), col.end());
  std::size_t out = 0;
  for (std::size_t k = 0; k < col.size();) {
    std::size_t m = k;
    long sum = 0;
    while (m < col.size() && col[m].first == col[k].first) sum += col[m++].second;
    if (sum != 0) col[out++] = {col[k].first, sum};
    k = m;
  }
  col.resize(out);
  return col;
}

namespace serial {

std::optional<Triple> find_nonassociative_triple(
    std::span<const std::uint32_t> table, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          return Triple{static_cast<std::uint32_t>(a),
                        static_cast<std::uint32_t>(b),
                        static_cast<std::uint32_t>(c)};
    }
  return std::nullopt;
}

void rows_axpy(std::vector<SparseRow>& rows,
               std::span<const std::size_t> targets,
               std::span<const Integer> factors, const SparseRow& source) {
  for (std::size_t t = 0; t < targets.size(); ++t)
    row_axpy(rows[targets[t]], factors[t], source);
}

BoundaryColumns boundary_columns(const BoundaryInput& in) {
  BoundaryColumns cols(in.source_basis.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = boundary_column(in, j);
  return cols;
}

}  // namespace serial
}  // namespace simpmon::kernels
