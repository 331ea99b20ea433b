#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "simpmon/finite_monoid.hpp"

namespace simpmon {

// factor is 1-based: the first free summand is factor 1.
struct Letter {
  std::size_t factor;
  Element element;

  auto operator<=>(const Letter&) const = default;
};

// Alternating word: adjacent letters lie in distinct factors and no letter
// is a unit. The empty word is the unit.
using FreeProductElement = std::vector<Letter>;

// Free product (coproduct of monoids) of finitely many finite monoids.
class FreeProduct {
 public:
  FreeProduct() = default;
  explicit FreeProduct(std::vector<std::shared_ptr<const FiniteMonoid>> factors);
  // k copies of the same factor.
  FreeProduct(std::size_t copies, std::shared_ptr<const FiniteMonoid> factor);

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const FiniteMonoid& factor(std::size_t t) const { return *factors_.at(t - 1); }
  const std::vector<std::shared_ptr<const FiniteMonoid>>& factors() const noexcept {
    return factors_;
  }

  // Single-letter words x^(t) for every factor t and non-unit x, ordered by
  // factor then element.
  std::vector<FreeProductElement> generators() const;

  bool is_normal(const FreeProductElement& w) const;
  // Throws input_error unless w is a normal-form word over this product.
  void validate(const FreeProductElement& w) const;

  FreeProductElement multiply(const FreeProductElement& a,
                              const FreeProductElement& b) const;

  // x11^(1) x22^(2) style rendering; "1" for the empty word.
  std::string to_string(const FreeProductElement& w) const;

 private:
  std::vector<std::shared_ptr<const FiniteMonoid>> factors_;
};

// Concatenate, then merge across the seam: equal-factor neighbours multiply
// in their factor, units vanish, and the new seam is re-examined.
FreeProductElement fp_multiply(std::size_t k,
                               const std::vector<std::shared_ptr<const FiniteMonoid>>& factors,
                               const FreeProductElement& a,
                               const FreeProductElement& b);

// A monoid homomorphism between free products, stored on generators.
class FreeProductHom {
 public:
  FreeProductHom(FreeProduct source, FreeProduct target);

  const FreeProduct& source() const noexcept { return source_; }
  const FreeProduct& target() const noexcept { return target_; }

  void set_image(Letter generator, FreeProductElement image);
  const FreeProductElement& image(Letter generator) const;
  bool defined_on(Letter generator) const;

  // Maps each letter and renormalizes; throws input_error on a letter whose
  // image was never set.
  FreeProductElement apply(const FreeProductElement& w) const;

  // this after other.
  FreeProductHom after(const FreeProductHom& other) const;

  static FreeProductHom identity(const FreeProduct& m);

 private:
  std::size_t slot(Letter g) const;

  FreeProduct source_;
  FreeProduct target_;
  std::vector<std::size_t> offsets_;
  std::vector<FreeProductElement> images_;
  std::vector<bool> defined_;
};

FreeProductElement apply_hom_fp(const FreeProductHom& h,
                                const FreeProductElement& w);

}  // namespace simpmon
