#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/finite_monoid.hpp"
#include "simpmon/sparse_matrix.hpp"

namespace simpmon {

// A right Z[M]-module free on a finite basis on which M acts by functions:
// b . m is again a basis element. Covers Z[M], Z[S] for right ideals S, and
// the trivial module Z.
class MonoidRingModule {
 public:
  MonoidRingModule(std::string name, std::shared_ptr<const FiniteMonoid> monoid,
                   std::vector<std::string> basis,
                   std::vector<std::vector<std::size_t>> action);

  const std::string& name() const noexcept { return name_; }
  const FiniteMonoid& monoid() const noexcept { return *monoid_; }
  const std::shared_ptr<const FiniteMonoid>& monoid_ptr() const noexcept { return monoid_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::string& basis_name(std::size_t b) const { return basis_.at(b); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  std::size_t act(std::size_t b, Element m) const { return action_.at(b).at(m); }

  // Matrix of v |-> v . m on the basis (columns are images of basis vectors).
  SparseIntMatrix action_matrix(Element m) const;

  // First failure of b . 1 = b or (b . m) . n = b . (mn).
  std::optional<std::string> action_violation() const;

 private:
  std::string name_;
  std::shared_ptr<const FiniteMonoid> monoid_;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::size_t>> action_;
};

MonoidRingModule regular_module(std::shared_ptr<const FiniteMonoid> m);
// Z[S] for a subset S of M closed under right multiplication. Basis order is
// the order of `elements`.
MonoidRingModule right_ideal_module(std::string name,
                                    std::shared_ptr<const FiniteMonoid> m,
                                    const std::vector<Element>& elements);
MonoidRingModule trivial_module(std::shared_ptr<const FiniteMonoid> m);
MonoidRingModule direct_sum(std::string name, const MonoidRingModule& a,
                            const MonoidRingModule& b);

// Z-linear map between modules; matrix is target.rank() x source.rank().
struct ModuleMap {
  std::string name;
  MonoidRingModule source;
  MonoidRingModule target;
  SparseIntMatrix matrix;

  // Image of basis vector b, as a column.
  std::vector<Integer> image(std::size_t b) const;
  // First (basis element, monoid element) where f(b . m) != f(b) . m.
  std::optional<std::string> equivariance_violation() const;
};

// The quotient M / span{b . m - b}, i.e. M tensored with the trivial module.
// Only torsion-free quotients are supported (always the case for the
// function-valued actions here).
struct Coinvariants {
  std::size_t rank = 0;
  SparseIntMatrix projection;  // rank x M.rank()
  SparseIntMatrix section;     // M.rank() x rank, projection * section = id
};

Coinvariants coinvariants(const MonoidRingModule& m);

}  // namespace simpmon
