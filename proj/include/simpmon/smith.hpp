#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simpmon/exec.hpp"
#include "simpmon/integer.hpp"
#include "simpmon/sparse_matrix.hpp"

namespace simpmon {

struct SmithOptions {
  bool left = false;
  bool left_inverse = false;
  bool right = false;
  bool right_inverse = false;
  Exec exec = Exec::parallel;
};

// U * A * V = S with S diagonal. `invariants` are the nonzero diagonal
// entries, positive, each dividing the next; S[k][k] = invariants[k].
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> invariants;
  std::optional<SparseIntMatrix> left;           // U
  std::optional<SparseIntMatrix> left_inverse;   // U^-1
  std::optional<SparseIntMatrix> right;          // V
  std::optional<SparseIntMatrix> right_inverse;  // V^-1

  std::size_t rank() const noexcept { return invariants.size(); }
  SparseIntMatrix diagonal() const;
};

// Sparse elimination over the integers. Pivots are chosen as the nonzero
// entry of smallest magnitude, ties broken row-major; division remainders
// re-enter the pivot search, so the pivot magnitude strictly decreases until
// it divides its row and column.
SmithForm smith_normal_form(const SparseIntMatrix& a,
                            const SmithOptions& opts = {});

// As above, and also replaces `carried` (which must have a.cols() rows) by
// V^-1 * carried. When carried = B with A * B = 0, rows [0, rank) of the
// result vanish and the remaining rows express B in the kernel basis of A.
SmithForm smith_normal_form(const SparseIntMatrix& a, SparseIntMatrix& carried,
                            const SmithOptions& opts = {});

}  // namespace simpmon
