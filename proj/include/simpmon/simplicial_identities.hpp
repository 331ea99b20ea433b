#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace simpmon {

struct IdentityViolation {
  std::string identity;  // e.g. "d_1 d_2 = d_1 d_1"
  std::size_t level;     // source level of both composites
  std::string witness;   // where the two sides differ

  std::string describe() const {
    return identity + " fails on level " + std::to_string(level) + ": " + witness;
  }
};

namespace detail {
inline std::string d(std::size_t i) { return "d_" + std::to_string(i); }
inline std::string s(std::size_t i) { return "s_" + std::to_string(i); }
}  // namespace detail

// Checks the five families of simplicial identities on every level where both
// sides are defined. `Object` supplies
//   max_level(), face(k, i), degeneracy(k, i), identity(k),
//   compose(outer, inner), difference(level, lhs, rhs) -> optional<string>.
// Composites are written left-to-right as in d_i d_j = d_i o d_j.
template <class Object>
std::optional<IdentityViolation> check_simplicial_identities(const Object& x) {
  using detail::d;
  using detail::s;
  const std::size_t top = x.max_level();
  auto check = [&](std::size_t level, const auto& lhs, const auto& rhs,
                   std::string name) -> std::optional<IdentityViolation> {
    if (auto w = x.difference(level, lhs, rhs))
      return IdentityViolation{std::move(name), level, *w};
    return std::nullopt;
  };

  for (std::size_t k = 0; k <= top; ++k) {
    // d_i d_j = d_{j-1} d_i  (i < j)
    if (k >= 2)
      for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (auto v = check(k, x.compose(x.face(k - 1, i), x.face(k, j)),
                             x.compose(x.face(k - 1, j - 1), x.face(k, i)),
                             d(i) + " " + d(j) + " = " + d(j - 1) + " " + d(i)))
            return v;
    // s_i s_j = s_{j+1} s_i  (i <= j)
    if (k + 2 <= top)
      for (std::size_t j = 0; j <= k; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (auto v = check(k, x.compose(x.degeneracy(k + 1, i), x.degeneracy(k, j)),
                             x.compose(x.degeneracy(k + 1, j + 1), x.degeneracy(k, i)),
                             s(i) + " " + s(j) + " = " + s(j + 1) + " " + s(i)))
            return v;
    if (k + 1 > top) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      const auto sj = x.degeneracy(k, j);
      // d_j s_j = id = d_{j+1} s_j
      if (auto v = check(k, x.compose(x.face(k + 1, j), sj), x.identity(k),
                         d(j) + " " + s(j) + " = id"))
        return v;
      if (auto v = check(k, x.compose(x.face(k + 1, j + 1), sj), x.identity(k),
                         d(j + 1) + " " + s(j) + " = id"))
        return v;
      for (std::size_t i = 0; i <= k + 1; ++i) {
        // d_i s_j = s_{j-1} d_i  (i < j)
        if (i < j) {
          if (auto v = check(k, x.compose(x.face(k + 1, i), sj),
                             x.compose(x.degeneracy(k - 1, j - 1), x.face(k, i)),
                             d(i) + " " + s(j) + " = " + s(j - 1) + " " + d(i)))
            return v;
        } else if (i > j + 1) {
          // d_i s_j = s_j d_{i-1}  (i > j + 1)
          if (auto v = check(k, x.compose(x.face(k + 1, i), sj),
                             x.compose(x.degeneracy(k - 1, j), x.face(k, i - 1)),
                             d(i) + " " + s(j) + " = " + s(j) + " " + d(i - 1)))
            return v;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace simpmon
