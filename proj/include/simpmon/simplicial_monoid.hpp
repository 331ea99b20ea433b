#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/free_product.hpp"
#include "simpmon/simplicial_identities.hpp"
#include "simpmon/summand_maps.hpp"

namespace simpmon {

// Levels M_0..M_top, each a free product of finite monoids, with face and
// degeneracy homomorphisms stored on generators.
class SimplicialMonoid {
 public:
  using Map = FreeProductHom;

  SimplicialMonoid(std::vector<FreeProduct> levels,
                   std::vector<std::vector<FreeProductHom>> faces,
                   std::vector<std::vector<FreeProductHom>> degeneracies);

  std::size_t max_level() const noexcept { return levels_.size() - 1; }
  const FreeProduct& level(std::size_t k) const { return levels_.at(k); }
  // d_i : M_k -> M_{k-1}, 0 <= i <= k.
  const FreeProductHom& face(std::size_t k, std::size_t i) const;
  // s_i : M_k -> M_{k+1}, 0 <= i <= k, k < max_level().
  const FreeProductHom& degeneracy(std::size_t k, std::size_t i) const;

  FreeProductHom identity(std::size_t k) const {
    return FreeProductHom::identity(level(k));
  }
  FreeProductHom compose(const FreeProductHom& outer,
                         const FreeProductHom& inner) const {
    return outer.after(inner);
  }
  // First generator of M_level where the two homomorphisms disagree.
  std::optional<std::string> difference(std::size_t level,
                                        const FreeProductHom& a,
                                        const FreeProductHom& b) const;

 private:
  std::vector<FreeProduct> levels_;
  std::vector<std::vector<FreeProductHom>> faces_;
  std::vector<std::vector<FreeProductHom>> degeneracies_;
};

// Homomorphism M_k -> M_k' sending x^(t) to x^(f(t)), or to the unit when
// f(t) = 0.
FreeProductHom summand_hom(const FreeProduct& source, const FreeProduct& target,
                           const std::vector<std::size_t>& summand_map);

// M_k = k-fold free product of P for 0 <= k <= k_max (M_0 trivial), with
// faces and degeneracies from face_summand_map / degeneracy_summand_map.
SimplicialMonoid build_M(std::size_t k_max,
                         Codiagonal codiagonal = Codiagonal::adjacent);

// M_k = factor for every k, all faces and degeneracies the identity.
SimplicialMonoid constant_simplicial_monoid(
    std::shared_ptr<const FiniteMonoid> factor, std::size_t k_max);

std::optional<IdentityViolation> verify_simplicial_identities(
    const SimplicialMonoid& m);

// pi_0 as the coequalizer of d_0, d_1 : M_1 => M_0, computed as a quotient of
// the finite monoid M_0 by the congruence generated by d_0(g) ~ d_1(g) over
// generators g of M_1.
struct ComponentMonoid {
  FiniteMonoid quotient;
  std::vector<Element> class_of;  // element of M_0 -> quotient element
  bool is_group = false;
  // An element of the quotient with no two-sided inverse, when not a group.
  std::optional<Element> witness;
};

// Requires M_0 to have at most one free factor (so that it is finite).
ComponentMonoid pi0(const SimplicialMonoid& m);
bool pi0_is_group(const SimplicialMonoid& m);

}  // namespace simpmon
