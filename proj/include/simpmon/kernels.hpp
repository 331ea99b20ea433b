#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference with identical output; the dispatchers at the bottom pick one by
// Exec. Tests compare the two and bench/ times them.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "simpmon/exec.hpp"
#include "simpmon/sparse_matrix.hpp"

namespace simpmon::kernels {

using Triple = std::array<std::uint32_t, 3>;

// Columns of a boundary matrix: per source basis element, (row, coefficient)
// pairs sorted by row with zero sums removed.
using BoundaryColumns = std::vector<std::vector<std::pair<std::uint32_t, long>>>;

// Inputs for assembling a normalized boundary matrix in one degree.
struct BoundaryInput {
  // faces[i][s] = index of d_i of simplex s, for i = 0..n.
  std::span<const std::vector<std::uint32_t>> faces;
  // Source simplices forming the basis, in basis order.
  std::span<const std::uint32_t> source_basis;
  // target_index[t] = basis position of simplex t one degree down, or -1 when
  // t is degenerate.
  std::span<const std::int64_t> target_index;
};

namespace serial {

// First (a, b, c) in lexicographic order with (ab)c != a(bc). `table` is the
// row-major n x n multiplication table.
std::optional<Triple> find_nonassociative_triple(
    std::span<const std::uint32_t> table, std::size_t n);

// rows[targets[t]] += factors[t] * source for every t. Targets are distinct
// and never alias `source`.
void rows_axpy(std::vector<SparseRow>& rows,
               std::span<const std::size_t> targets,
               std::span<const Integer> factors, const SparseRow& source);

BoundaryColumns boundary_columns(const BoundaryInput& in);

}  // namespace serial

namespace omp {

std::optional<Triple> find_nonassociative_triple(
    std::span<const std::uint32_t> table, std::size_t n);

void rows_axpy(std::vector<SparseRow>& rows,
               std::span<const std::size_t> targets,
               std::span<const Integer> factors, const SparseRow& source);

BoundaryColumns boundary_columns(const BoundaryInput& in);

}  // namespace omp

inline std::optional<Triple> find_nonassociative_triple(
    std::span<const std::uint32_t> table, std::size_t n, Exec exec) {
  return exec == Exec::parallel ? omp::find_nonassociative_triple(table, n)
                                : serial::find_nonassociative_triple(table, n);
}

inline void rows_axpy(std::vector<SparseRow>& rows,
                      std::span<const std::size_t> targets,
                      std::span<const Integer> factors,
                      const SparseRow& source, Exec exec) {
  if (exec == Exec::parallel)
    omp::rows_axpy(rows, targets, factors, source);
  else
    serial::rows_axpy(rows, targets, factors, source);
}

inline BoundaryColumns boundary_columns(const BoundaryInput& in, Exec exec) {
  return exec == Exec::parallel ? omp::boundary_columns(in)
                                : serial::boundary_columns(in);
}

// Shared by both column kernels: the column of one source simplex.
std::vector<std::pair<std::uint32_t, long>> boundary_column(
    const BoundaryInput& in, std::size_t basis_position);

}  // namespace simpmon::kernels
