#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simpmon/chain_complex.hpp"
#include "simpmon/exec.hpp"
#include "simpmon/finite_monoid.hpp"
#include "simpmon/simplicial_identities.hpp"

namespace simpmon {

using SimplexId = std::uint32_t;

// Default cap on simplices in a single degree.
inline constexpr std::size_t kSimplexBudget = 20'000'000;

// A simplicial set known in degrees 0..max_degree(). Simplices are interned
// as dense ids per degree; faces and degeneracies are index arrays. The
// degeneracies out of the top degree are absent.
class SimplicialSetTrunc {
 public:
  using Map = std::vector<SimplexId>;

  SimplicialSetTrunc() = default;
  // counts[n] = number of n-simplices; all maps start unset.
  explicit SimplicialSetTrunc(std::vector<std::size_t> counts);

  std::size_t max_degree() const noexcept { return counts_.size() - 1; }
  std::size_t count(std::size_t n) const { return counts_.at(n); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  // d_i : X_n -> X_{n-1}, 1 <= n <= max_degree, 0 <= i <= n.
  const Map& face(std::size_t n, std::size_t i) const;
  void set_face(std::size_t n, std::size_t i, Map m);
  // s_i : X_n -> X_{n+1}, n < max_degree, 0 <= i <= n.
  const Map& degeneracy(std::size_t n, std::size_t i) const;
  void set_degeneracy(std::size_t n, std::size_t i, Map m);

  const std::optional<SimplexId>& basepoint() const noexcept { return basepoint_; }
  void set_basepoint(SimplexId vertex);
  // Iterated s_0 of the basepoint vertex.
  SimplexId basepoint_simplex(std::size_t n) const;

  // Marks every simplex in the image of some degeneracy.
  std::vector<bool> degenerate(std::size_t n) const;
  std::vector<SimplexId> nondegenerate(std::size_t n) const;

  // Interface for check_simplicial_identities.
  std::size_t max_level() const noexcept { return max_degree(); }
  Map identity(std::size_t n) const;
  static Map compose(const Map& outer, const Map& inner);
  std::optional<std::string> difference(std::size_t n, const Map& a, const Map& b) const;

 private:
  std::vector<std::size_t> counts_{1};
  std::vector<std::vector<Map>> faces_;
  std::vector<std::vector<Map>> degeneracies_;
  std::optional<SimplexId> basepoint_;
};

// Every face and degeneracy array is present with the right length and range.
std::optional<std::string> find_structure_error(const SimplicialSetTrunc& x);

// Structure, simplicial identities and injective degeneracies; returns the
// first problem found.
std::optional<std::string> validate(const SimplicialSetTrunc& x);

// A simplicial map between truncated simplicial sets: one index array per
// degree.
struct SimplicialMap {
  std::vector<std::vector<SimplexId>> components;

  bool operator==(const SimplicialMap&) const = default;
};

// First degree/face/degeneracy where f fails to commute.
std::optional<std::string> check_simplicial_map(const SimplicialSetTrunc& source,
                                                const SimplicialSetTrunc& target,
                                                const SimplicialMap& f);

// Nerve of a finite monoid: n-simplices are n-tuples (m_1, ..., m_n), id in
// base |M| with m_1 most significant. d_0 drops m_1, d_n drops m_n, d_i
// multiplies m_i m_{i+1}; s_i inserts the unit after position i. Throws
// resource_error when a degree exceeds `budget` simplices.
SimplicialSetTrunc nerve(const FiniteMonoid& m, std::size_t n_max,
                         std::size_t budget = kSimplexBudget);

// Entries of the nerve simplex `id` in degree n.
std::vector<Element> nerve_tuple(const FiniteMonoid& m, std::size_t n, SimplexId id);

// One simplex per degree.
SimplicialSetTrunc point(std::size_t n_max);
// `points` vertices and only their degeneracies.
SimplicialSetTrunc discrete(std::size_t points, std::size_t n_max);
// Delta^1 / boundary with the collapsed vertex as basepoint. In degree n, id 0
// is the basepoint simplex and id a (1 <= a <= n) is the sequence of a zeros
// followed by n + 1 - a ones.
SimplicialSetTrunc simplicial_circle(std::size_t n_max);

// Wedge of pointed inputs (all with the same max degree), basepoints
// identified. Simplex 0 of every degree is the basepoint simplex; summand t
// contributes its non-basepoint simplices in id order. An empty list gives
// the point truncated at n_max.
SimplicialSetTrunc wedge(std::span<const SimplicialSetTrunc> xs, std::size_t n_max);

// Free abelian groups on nondegenerate simplices, d = sum (-1)^i d_i with
// degenerate faces dropped. Truncated at the top degree.
ChainComplex normalized_chains(const SimplicialSetTrunc& x, Exec exec = Exec::parallel);

}  // namespace simpmon
