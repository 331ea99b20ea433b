#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/exec.hpp"

namespace simpmon {

using Element = std::uint32_t;

// A finite set with a multiplication table and a designated unit. The
// constructor checks only the shape of the table; whether it is actually a
// monoid is answered by find_law_violation().
class FiniteMonoid {
 public:
  FiniteMonoid(std::string name, std::vector<std::string> element_names,
               Element unit, std::vector<std::vector<Element>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }
  Element unit() const noexcept { return unit_; }
  const std::vector<std::string>& element_names() const noexcept {
    return names_;
  }
  const std::string& element_name(Element e) const { return names_.at(e); }
  std::optional<Element> find(const std::string& name) const;

  Element product(Element a, Element b) const {
    return table_[a * names_.size() + b];
  }
  // Row-major n x n table.
  const std::vector<Element>& flat_table() const noexcept { return table_; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::string name_;
  std::vector<std::string> names_;
  Element unit_;
  std::vector<Element> table_;
};

struct LawViolation {
  enum class Kind { left_unit, right_unit, associativity };
  Kind kind;
  Element a = 0;
  Element b = 0;
  Element c = 0;

  std::string describe(const FiniteMonoid& m) const;
};

// First unit-law failure, else the lexicographically first non-associating
// triple.
std::optional<LawViolation> find_law_violation(const FiniteMonoid& m,
                                               Exec exec = Exec::parallel);

bool check_associativity(const FiniteMonoid& m, Exec exec = Exec::parallel);

// Raw-table variant for unvalidated input; throws input_error when the table
// is not square or has entries out of range.
bool check_associativity(const std::vector<std::vector<Element>>& table,
                         Element unit, Exec exec = Exec::parallel);

std::vector<Element> idempotents(const FiniteMonoid& m);

// Two-sided inverse of e, if one exists.
std::optional<Element> inverse(const FiniteMonoid& m, Element e);

// {1} together with x_ij (1 <= i <= rows, 1 <= j <= cols) multiplying by
// x_ij x_kl = x_il.
FiniteMonoid rectangular_band_with_unit(std::size_t rows, std::size_t cols);

// The 5-element monoid {1, x11, x12, x21, x22}.
FiniteMonoid make_monoid_P();

FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(std::size_t order);
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

// Line-oriented table format:
//   monoid <name>
//   elements: e1 ... en
//   unit: <token>
//   row <token>: <token1> ... <tokenn>
// `#` starts a comment. Throws parse_error with line and column.
FiniteMonoid parse_monoid(std::istream& is);
FiniteMonoid load_monoid(const std::string& path);
void write_monoid(std::ostream& os, const FiniteMonoid& m);

}  // namespace simpmon
