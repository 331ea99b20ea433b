#pragma once

#include <cstddef>
#include <vector>

namespace simpmon {

// How the middle faces fold adjacent free/wedge summands. `adjacent` is the
// working convention: d_i (0 < i < k) folds summands i and i+1 into i.
// `shifted` folds i+1 and i+2 instead (clamped at the end) and exists only as
// a negative control; it breaks the simplicial identities.
enum class Codiagonal { adjacent, shifted };

// Summand maps for the simplicial structure whose level k has summands
// 1..k. Entry t-1 is the image summand of t, with 0 meaning "collapsed".
//   d_0 collapses summand 1, d_k collapses summand k, middle faces fold.
std::vector<std::size_t> face_summand_map(std::size_t k, std::size_t i,
                                          Codiagonal c = Codiagonal::adjacent);
//   s_i : k -> k+1 misses summand i+1.
std::vector<std::size_t> degeneracy_summand_map(std::size_t k, std::size_t i);

}  // namespace simpmon
