#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/simplicial_set.hpp"
#include "simpmon/summand_maps.hpp"

namespace simpmon {

// Levels X_0..X_kmax (vertical simplicial sets, all truncated at the same
// degree) with horizontal faces X_k -> X_{k-1} and degeneracies
// X_k -> X_{k+1} given as simplicial maps.
class BisimplicialTrunc {
 public:
  using Map = SimplicialMap;

  BisimplicialTrunc(std::vector<SimplicialSetTrunc> levels,
                    std::vector<std::vector<SimplicialMap>> faces,
                    std::vector<std::vector<SimplicialMap>> degeneracies);

  std::size_t max_level() const noexcept { return levels_.size() - 1; }
  std::size_t vertical_degree() const noexcept { return levels_.front().max_degree(); }
  const SimplicialSetTrunc& level(std::size_t k) const { return levels_.at(k); }
  const SimplicialMap& face(std::size_t k, std::size_t i) const;
  const SimplicialMap& degeneracy(std::size_t k, std::size_t i) const;

  // Interface for check_simplicial_identities (horizontal direction).
  SimplicialMap identity(std::size_t k) const;
  SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) const;
  std::optional<std::string> difference(std::size_t k, const SimplicialMap& a,
                                        const SimplicialMap& b) const;

 private:
  std::vector<SimplicialSetTrunc> levels_;
  std::vector<std::vector<SimplicialMap>> faces_;
  std::vector<std::vector<SimplicialMap>> degeneracies_;
};

// Every horizontal map is simplicial and the horizontal identities hold.
std::optional<std::string> validate(const BisimplicialTrunc& b);

// Level k is the wedge of k copies of the pointed X (level 0 the point). The
// horizontal maps act on wedge summands by face_summand_map and
// degeneracy_summand_map: d_0 and d_k collapse the first and last summand,
// middle faces fold, s_i includes by missing summand i+1.
BisimplicialTrunc wedge_levels(const SimplicialSetTrunc& x, std::size_t k_max,
                               Codiagonal codiagonal = Codiagonal::adjacent);

// wedge_levels of nerve(P, n_max).
BisimplicialTrunc build_S(std::size_t k_max, std::size_t n_max);

// Degree n holds the vertical n-simplices of level n; d_i and s_i apply the
// horizontal and vertical d_i (or s_i) together. Truncated at
// min(max_level, vertical_degree).
SimplicialSetTrunc diagonal(const BisimplicialTrunc& b);
// Same, truncated at `degree`; throws input_error naming the missing level
// and degree when the data does not reach that far.
SimplicialSetTrunc diagonal(const BisimplicialTrunc& b, std::size_t degree);

}  // namespace simpmon
