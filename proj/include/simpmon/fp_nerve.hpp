#pragma once

#include <cstddef>

#include "simpmon/simplicial_set.hpp"

namespace simpmon {

// Sub-simplicial set of the nerve of the k-fold free product of P on tuples
// (w_1, ..., w_n) of normal-form words with total length <= max_length.
// Closed under faces because multiplication never lengthens words, and under
// degeneracies because they insert the empty word. Simplex ids are assigned in
// lexicographic order of word ids, words ordered by length then letters.
SimplicialSetTrunc truncated_fp_nerve(std::size_t copies, std::size_t max_length,
                                      std::size_t n_max,
                                      std::size_t budget = 2'000'000);

}  // namespace simpmon
