#pragma once

// Independent oracles and generators shared by the unit tests and the
// acceptance binary. Nothing here calls the library's Smith form or chain
// complex code.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "simpmon/finite_monoid.hpp"
#include "simpmon/homology.hpp"
#include "simpmon/integer.hpp"
#include "simpmon/smith.hpp"
#include "simpmon/sparse_matrix.hpp"

namespace oracle {

using simpmon::Integer;
using Dense = std::vector<std::vector<Integer>>;

inline Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Determinant by cofactor expansion along the first row.
inline Integer determinant(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
// Exponential; meant for matrices up to about 6 x 6.
inline std::vector<Integer> determinantal_invariants(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[r[i]][c[j]];
        g = gcd_of(g, determinant(minor));
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// Textbook dense Smith reduction: move a smallest entry to the corner, reduce
// its row and column by division, repeat until the corner divides everything.
inline std::vector<Integer> dense_invariants(Dense a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 &&
              (!best || mpz_cmpabs(a[i][j].get_mpz_t(), a[best->first][best->second].get_mpz_t()) < 0))
            best = std::make_pair(i, j);
      if (!best) return diag;
      std::swap(a[t], a[best->first]);
      for (auto& row : a) std::swap(row[t], row[best->second]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and go again.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad][j];
    }
    diag.push_back(abs_of(a[t][t]));
  }
  return diag;
}

inline Dense to_dense(const simpmon::SparseIntMatrix& m) { return m.to_dense(); }

// H_n from dense boundaries: free rank = c_n - rank d_n - rank d_{n+1},
// torsion = invariant factors > 1 of d_{n+1}. bounds[n] is d_n (rows C_{n-1});
// bounds[0] is ignored.
inline std::vector<simpmon::HomologyGroup> dense_homology(const std::vector<std::size_t>& ranks,
                                                          const std::vector<Dense>& bounds,
                                                          std::size_t degrees) {
  auto invariants = [&](std::size_t n) -> std::vector<Integer> {
    if (n == 0 || n >= bounds.size()) return {};
    return dense_invariants(bounds[n]);
  };
  std::vector<simpmon::HomologyGroup> out;
  for (std::size_t n = 0; n < degrees; ++n) {
    const auto in = invariants(n), up = invariants(n + 1);
    simpmon::HomologyGroup h;
    h.free_rank = ranks[n] - in.size() - up.size();
    for (const auto& d : up)
      if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

// Normalized chains of the nerve of m straight from the definition: basis in
// degree n is the tuples of non-units, faces drop the ends or multiply
// neighbours, and a face containing the unit is degenerate.
struct NerveChains {
  std::vector<std::size_t> ranks;
  std::vector<Dense> bounds;  // bounds[n] = d_n
};

inline NerveChains nerve_chains(const simpmon::FiniteMonoid& m, std::size_t n_max) {
  using simpmon::Element;
  std::vector<Element> nonunits;
  for (Element e = 0; e < m.size(); ++e)
    if (e != m.unit()) nonunits.push_back(e);
  std::vector<std::vector<std::vector<Element>>> basis(n_max + 1);
  basis[0].push_back({});
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const auto& t : basis[n - 1])
      for (Element e : nonunits) {
        auto u = t;
        u.push_back(e);
        basis[n].push_back(std::move(u));
      }
  NerveChains out;
  for (std::size_t n = 0; n <= n_max; ++n) out.ranks.push_back(basis[n].size());
  out.bounds.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Dense d(basis[n - 1].size(), std::vector<Integer>(basis[n].size()));
    for (std::size_t s = 0; s < basis[n].size(); ++s) {
      const auto& t = basis[n][s];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Element> f;
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.begin() + (i - 1));
          f.push_back(m.product(t[i - 1], t[i]));
          f.insert(f.end(), t.begin() + (i + 1), t.end());
        }
        if (std::find(f.begin(), f.end(), m.unit()) != f.end()) continue;
        const auto row = std::find(basis[n - 1].begin(), basis[n - 1].end(), f) - basis[n - 1].begin();
        d[row][s] += (i % 2 == 0) ? 1 : -1;
      }
    }
    out.bounds[n] = std::move(d);
  }
  return out;
}

inline simpmon::SparseIntMatrix random_sparse(std::mt19937_64& rng, std::size_t rows,
                                              std::size_t cols, double density, long bound) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> value(-bound, bound);
  simpmon::SparseIntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) a.set(i, j, value(rng));
  return a;
}

// Checks U A V = S, U U^-1 = 1, V V^-1 = 1, positivity and the divisibility
// chain; returns the first problem.
inline std::optional<std::string> smith_problem(const simpmon::SparseIntMatrix& a,
                                                const simpmon::SmithForm& s) {
  using simpmon::SparseIntMatrix;
  if (!s.left || !s.right || !s.left_inverse || !s.right_inverse) return "transforms missing";
  if (*s.left * a * *s.right != s.diagonal()) return "U A V != S";
  if (*s.left * *s.left_inverse != SparseIntMatrix::identity(a.rows())) return "U U^-1 != 1";
  if (*s.right * *s.right_inverse != SparseIntMatrix::identity(a.cols())) return "V V^-1 != 1";
  for (std::size_t k = 0; k < s.invariants.size(); ++k) {
    if (s.invariants[k] <= 0) return "non-positive invariant";
    if (k + 1 < s.invariants.size() && s.invariants[k + 1] % s.invariants[k] != 0)
      return "divisibility chain broken at " + std::to_string(k);
  }
  return std::nullopt;
}

inline simpmon::SmithOptions all_transforms(simpmon::Exec exec = simpmon::Exec::parallel) {
  simpmon::SmithOptions o;
  o.left = o.left_inverse = o.right = o.right_inverse = true;
  o.exec = exec;
  return o;
}

// Direct sum in invariant-factor form.
inline simpmon::HomologyGroup direct_sum(const simpmon::HomologyGroup& a,
                                         const simpmon::HomologyGroup& b) {
  std::vector<Integer> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  Dense d(t.size(), std::vector<Integer>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) d[i][i] = t[i];
  simpmon::HomologyGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  for (const auto& x : dense_invariants(d))
    if (x > 1) out.torsion.push_back(x);
  return out;
}

inline std::vector<simpmon::HomologyGroup> sphere(std::size_t dim, std::size_t degrees) {
  std::vector<simpmon::HomologyGroup> h(degrees);
  h[0] = simpmon::HomologyGroup::free(1);
  if (dim < degrees) h[dim].free_rank += 1;
  return h;
}

}  // namespace oracle
