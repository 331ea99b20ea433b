#include <omp.h>

#include <cstdint>
#include <limits>

#include "simpmon/kernels.hpp"

namespace simpmon::kernels::omp {

std::optional<Triple> find_nonassociative_triple(
    std::span<const std::uint32_t> table, std::size_t n) {
  // Smallest offending flat index a*n*n + b*n + c, so the witness matches the
  // serial scan.
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t a = 0; a < count; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (ua * n * n >= best) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[ua * n + b];
      bool found = false;
      for (std::size_t c = 0; c < n; ++c)
        if (table[ab * n + c] != table[ua * n + table[b * n + c]]) {
          best = std::min<std::uint64_t>(best, (ua * n + b) * n + c);
          found = true;
          break;
        }
      if (found) break;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return Triple{static_cast<std::uint32_t>(best / (n * n)),
                static_cast<std::uint32_t>((best / n) % n),
                static_cast<std::uint32_t>(best % n)};
}

void rows_axpy(std::vector<SparseRow>& rows,
               std::span<const std::size_t> targets,
               std::span<const Integer> factors, const SparseRow& source) {
  const auto count = static_cast<std::int64_t>(targets.size());
  // Small batches are not worth a parallel region.
  if (count < 32) {
    for (std::int64_t t = 0; t < count; ++t)
      row_axpy(rows[targets[t]], factors[t], source);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < count; ++t)
    row_axpy(rows[targets[t]], factors[t], source);
}

BoundaryColumns boundary_columns(const BoundaryInput& in) {
  BoundaryColumns cols(in.source_basis.size());
  const auto count = static_cast<std::int64_t>(cols.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < count; ++j)
    cols[static_cast<std::size_t>(j)] =
        boundary_column(in, static_cast<std::size_t>(j));
  return cols;
}

}  // namespace simpmon::kernels::omp
