#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "simpmon/sparse_matrix.hpp"

namespace simpmon {

// Free abelian groups C_0..C_top with boundaries d_n : C_n -> C_{n-1} stored
// as ranks[n-1] x ranks[n] matrices. A truncated complex is missing C_{top+1},
// so its top-degree homology is not meaningful.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k] is d_{k+1}.
  ChainComplex(std::vector<std::size_t> ranks,
               std::vector<SparseIntMatrix> boundaries, bool truncated);

  std::size_t top_degree() const noexcept { return ranks_.size() - 1; }
  std::size_t rank(std::size_t n) const { return ranks_.at(n); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  bool truncated() const noexcept { return truncated_; }

  // d_n for 1 <= n <= top; d_0 is the zero map to the zero group and d_{top+1}
  // of a complete complex is the zero map from the zero group.
  SparseIntMatrix boundary(std::size_t n) const;

  // Highest degree whose homology is determined by the stored data.
  std::optional<std::size_t> last_reliable_degree() const;

 private:
  std::vector<std::size_t> ranks_{0};
  std::vector<SparseIntMatrix> boundaries_;
  bool truncated_ = false;
};

// Smallest n with d_{n-1} * d_n != 0, if any.
std::optional<std::size_t> find_nonzero_composite(const ChainComplex& c);

// `dim n: r` per degree followed by `n i j c` triples (d_n[i][j] = c).
void write_chain_complex(std::ostream& os, const ChainComplex& c);
// Reads the format above. The result is marked truncated unless `complete`.
ChainComplex read_chain_complex(std::istream& is, bool complete = false);

}  // namespace simpmon
