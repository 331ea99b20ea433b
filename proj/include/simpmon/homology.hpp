#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simpmon/chain_complex.hpp"
#include "simpmon/exec.hpp"
#include "simpmon/integer.hpp"

namespace simpmon {

// Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ... and every d_i > 1.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;

  static HomologyGroup free(std::size_t rank) { return {rank, {}}; }
};

std::string to_string(const HomologyGroup& h);

// Invariant factors > 1 of a Smith diagonal.
std::vector<Integer> torsion_of(const std::vector<Integer>& invariants);

// H_n = ker d_n / im d_{n+1}. Builds a kernel basis from the Smith form of
// d_n, rewrites d_{n+1} in it, and reads torsion off the second Smith form.
// Refuses degrees past last_reliable_degree().
HomologyGroup homology_of_complex(const ChainComplex& c, std::size_t n,
                                  Exec exec = Exec::parallel);

// H_0 .. H_last for every reliable degree.
std::vector<HomologyGroup> homology_of_complex(const ChainComplex& c,
                                               Exec exec = Exec::parallel);

// Reduced homology: H_0 loses one free summand. Requires H_0 nonzero.
std::vector<HomologyGroup> reduced(std::vector<HomologyGroup> h);

// Both sides of  sum_{n<N} (-1)^n rank C_n
//              = sum_{n<N} (-1)^n rank H_n + (-1)^(N-1) rank d_N
// over the reliable range n < N (N = top degree of a truncated complex, or
// top + 1 for a complete one, where d_N = 0).
struct EulerCheck {
  long chain_side = 0;
  long homology_side = 0;
  bool consistent() const noexcept { return chain_side == homology_side; }
};

EulerCheck euler_characteristic(const ChainComplex& c,
                                Exec exec = Exec::parallel);

}  // namespace simpmon
