#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/finite_monoid.hpp"
#include "simpmon/integer.hpp"

namespace simpmon {

struct GroupLetter {
  std::size_t generator;
  bool inverse = false;

  bool operator==(const GroupLetter&) const = default;
  auto operator<=>(const GroupLetter&) const = default;
};

using GroupWord = std::vector<GroupLetter>;

GroupWord free_reduce(GroupWord w);
GroupWord inverse_word(const GroupWord& w);

// Generators plus relators (words equal to the identity). Relators are kept
// freely reduced; empty relators are dropped on construction.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> generators,
                    std::vector<GroupWord> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }
  std::optional<std::size_t> find(const std::string& generator) const;

  std::string word_to_string(const GroupWord& w) const;
  // Tokens `g` / `g^-1` separated by spaces.
  GroupWord parse_word(const std::string& text) const;

  bool operator==(const GroupPresentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<GroupWord> relators_;
};

// `gens: g1 g2 ...` then one `rel: w` per relator.
void write_presentation(std::ostream& os, const GroupPresentation& p);
GroupPresentation parse_presentation(std::istream& is);

// Generators [m] for non-unit m, relators [m][n][mn]^-1 over all pairs of
// non-units with [unit] read as the empty word.
GroupPresentation universal_group_of_table(const FiniteMonoid& m);

// One generator family [m]_t per summand t = 1..k with the table relators in
// each. U preserves coproducts, so this presents U of the k-fold free product.
GroupPresentation universal_group_of_free_product(std::size_t k,
                                                  const FiniteMonoid& factor);

// Free product of presentations; generators get "<prefix>." prepended.
GroupPresentation disjoint_union(const GroupPresentation& a, const std::string& prefix_a,
                                 const GroupPresentation& b, const std::string& prefix_b);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool operator==(const Abelianization&) const = default;
};

std::string to_string(const Abelianization& a);

// Smith form of the relators x generators exponent-sum matrix.
Abelianization abelianization(const GroupPresentation& p);

enum class RewriteRule {
  idempotent_collapse,  // relator is a single positive letter g: g = 1
  unit_elimination,     // relator is a conjugate u g^+-1 u^-1: g = 1
  tietze_substitution,  // a cyclic form of the relator is g w^-1: g := w
  cleanup,              // relator duplicates an earlier one
};

std::string to_string(RewriteRule r);

// One simplification step, referring to the presentation it was applied to.
struct RewriteStep {
  RewriteRule rule;
  std::size_t relator;                   // index of the justifying relator
  std::string generator;                 // eliminated generator, if any
  std::vector<std::string> replacement;  // g := these tokens (Tietze only)

  std::string describe() const;
};

enum class Triviality { trivial_certified, nontrivial_certified, unknown };

std::string to_string(Triviality t);

struct TrivialityVerdict {
  Triviality status = Triviality::unknown;
  // Rewrite log; for trivial_certified it eliminates every generator.
  std::vector<RewriteStep> log;
  // Abelian invariants of the simplified presentation; nontrivial for
  // nontrivial_certified.
  Abelianization abelian;
};

struct Simplification {
  GroupPresentation presentation;
  TrivialityVerdict verdict;
};

// Applies the first applicable rule in the fixed order idempotent collapse,
// unit elimination, Tietze substitution, cleanup, until none applies or
// step_limit steps have been taken (then the verdict is unknown).
Simplification simplify(const GroupPresentation& p, std::size_t step_limit = 10000);

// Applies one logged step after checking its justification; throws
// input_error when the cited relator does not support the step.
GroupPresentation apply_step(const GroupPresentation& p, const RewriteStep& step);

// Re-derives the verdict from `original`: replays the log for a triviality
// certificate, recomputes abelian invariants for a nontriviality certificate.
// Returns a description of the first failure.
std::optional<std::string> replay_failure(const GroupPresentation& original,
                                          const TrivialityVerdict& verdict);

}  // namespace simpmon
