#include "simpmon/simplicial_set.hpp"

#include <numeric>

#include "simpmon/error.hpp"
#include "simpmon/kernels.hpp"

namespace simpmon {

SimplicialSetTrunc::SimplicialSetTrunc(std::vector<std::size_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw input_error("simplicial set needs degree 0");
  faces_.resize(counts_.size());
  degeneracies_.resize(counts_.size());
  for (std::size_t n = 0; n < counts_.size(); ++n) {
    if (n > 0) faces_[n].resize(n + 1);
    if (n + 1 < counts_.size()) degeneracies_[n].resize(n + 1);
  }
}

const SimplicialSetTrunc::Map& SimplicialSetTrunc::face(std::size_t n,
                                                        std::size_t i) const {
  if (n == 0 || n > max_degree() || i > n)
    throw input_error("no face d_" + std::to_string(i) + " in degree " + std::to_string(n));
  return faces_[n][i];
}

void SimplicialSetTrunc::set_face(std::size_t n, std::size_t i, Map m) {
  if (n == 0 || n > max_degree() || i > n)
    throw input_error("no face d_" + std::to_string(i) + " in degree " + std::to_string(n));
  faces_[n][i] = std::move(m);
}

const SimplicialSetTrunc::Map& SimplicialSetTrunc::degeneracy(std::size_t n,
                                                              std::size_t i) const {
  if (n >= max_degree() || i > n)
    throw input_error("no degeneracy s_" + std::to_string(i) + " in degree " +
                      std::to_string(n));
  return degeneracies_[n][i];
}

void SimplicialSetTrunc::set_degeneracy(std::size_t n, std::size_t i, Map m) {
  if (n >= max_degree() || i > n)
    throw input_error("no degeneracy s_" + std::to_string(i) + " in degree " +
                      std::to_string(n));
  degeneracies_[n][i] = std::move(m);
}

void SimplicialSetTrunc::set_basepoint(SimplexId vertex) {
  if (vertex >= counts_[0]) throw input_error("basepoint is not a vertex");
  basepoint_ = vertex;
}

SimplexId SimplicialSetTrunc::basepoint_simplex(std::size_t n) const {
  if (!basepoint_) throw input_error("simplicial set is not pointed");
  SimplexId s = *basepoint_;
  for (std::size_t k = 0; k < n; ++k) s = degeneracy(k, 0).at(s);
  return s;
}

std::vector<bool> SimplicialSetTrunc::degenerate(std::size_t n) const {
  std::vector<bool> marked(count(n), false);
  if (n == 0) return marked;
  for (std::size_t i = 0; i < n; ++i)
    for (SimplexId t : degeneracy(n - 1, i)) marked.at(t) = true;
  return marked;
}

std::vector<SimplexId> SimplicialSetTrunc::nondegenerate(std::size_t n) const {
  const auto marked = degenerate(n);
  std::vector<SimplexId> out;
  for (std::size_t s = 0; s < marked.size(); ++s)
    if (!marked[s]) out.push_back(static_cast<SimplexId>(s));
  return out;
}

SimplicialSetTrunc::Map SimplicialSetTrunc::identity(std::size_t n) const {
  Map m(count(n));
  std::iota(m.begin(), m.end(), SimplexId{0});
  return m;
}

SimplicialSetTrunc::Map SimplicialSetTrunc::compose(const Map& outer, const Map& inner) {
  Map m(inner.size());
  for (std::size_t s = 0; s < inner.size(); ++s) m[s] = outer.at(inner[s]);
  return m;
}

std::optional<std::string> SimplicialSetTrunc::difference(std::size_t n, const Map& a,
                                                          const Map& b) const {
  for (std::size_t s = 0; s < count(n); ++s)
    if (a.at(s) != b.at(s))
      return "simplex " + std::to_string(s) + " of degree " + std::to_string(n) +
             " maps to " + std::to_string(a[s]) + " vs " + std::to_string(b[s]);
  return std::nullopt;
}

std::optional<std::string> find_structure_error(const SimplicialSetTrunc& x) {
  for (std::size_t n = 1; n <= x.max_degree(); ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& f = x.face(n, i);
      if (f.size() != x.count(n))
        return "d_" + std::to_string(i) + " in degree " + std::to_string(n) + " is incomplete";
      for (SimplexId t : f)
        if (t >= x.count(n - 1))
          return "d_" + std::to_string(i) + " in degree " + std::to_string(n) +
                 " leaves the simplicial set";
    }
  for (std::size_t n = 0; n < x.max_degree(); ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& s = x.degeneracy(n, i);
      if (s.size() != x.count(n))
        return "s_" + std::to_string(i) + " in degree " + std::to_string(n) + " is incomplete";
      for (SimplexId t : s)
        if (t >= x.count(n + 1))
          return "s_" + std::to_string(i) + " in degree " + std::to_string(n) +
                 " leaves the simplicial set";
    }
  return std::nullopt;
}

std::optional<std::string> validate(const SimplicialSetTrunc& x) {
  if (auto e = find_structure_error(x)) return e;
  if (auto v = check_simplicial_identities(x)) return v->describe();
  for (std::size_t n = 0; n < x.max_degree(); ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<bool> hit(x.count(n + 1), false);
      for (SimplexId t : x.degeneracy(n, i)) {
        if (hit[t])
          return "s_" + std::to_string(i) + " in degree " + std::to_string(n) +
                 " is not injective";
        hit[t] = true;
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_simplicial_map(const SimplicialSetTrunc& source,
                                                const SimplicialSetTrunc& target,
                                                const SimplicialMap& f) {
  if (f.components.size() != source.max_degree() + 1 ||
      target.max_degree() < source.max_degree())
    return "map has the wrong number of components";
  for (std::size_t n = 0; n <= source.max_degree(); ++n) {
    const auto& c = f.components[n];
    if (c.size() != source.count(n)) return "component " + std::to_string(n) + " is incomplete";
    for (SimplexId t : c)
      if (t >= target.count(n)) return "component " + std::to_string(n) + " leaves the target";
  }
  for (std::size_t n = 1; n <= source.max_degree(); ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t s = 0; s < source.count(n); ++s)
        if (f.components[n - 1][source.face(n, i)[s]] !=
            target.face(n, i)[f.components[n][s]])
          return "does not commute with d_" + std::to_string(i) + " on simplex " +
                 std::to_string(s) + " of degree " + std::to_string(n);
  for (std::size_t n = 0; n < source.max_degree(); ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t s = 0; s < source.count(n); ++s)
        if (f.components[n + 1][source.degeneracy(n, i)[s]] !=
            target.degeneracy(n, i)[f.components[n][s]])
          return "does not commute with s_" + std::to_string(i) + " on simplex " +
                 std::to_string(s) + " of degree " + std::to_string(n);
  return std::nullopt;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget,
                          std::size_t degree) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (r > budget / std::max<std::size_t>(base, 1))
      throw resource_error("degree " + std::to_string(degree) +
                           " exceeds the budget of " + std::to_string(budget) +
                           " simplices");
    r *= base;
  }
  return r;
}

}  // namespace

SimplicialSetTrunc nerve(const FiniteMonoid& m, std::size_t n_max, std::size_t budget) {
  const std::size_t q = m.size();
  std::vector<std::size_t> counts;
  std::vector<std::size_t> power;  // q^n
  for (std::size_t n = 0; n <= n_max; ++n) {
    power.push_back(checked_power(q, n, budget, n));
    counts.push_back(power.back());
  }
  SimplicialSetTrunc x(counts);
  x.set_basepoint(0);

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t count = counts[n];
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map f(count);
      for (std::size_t s = 0; s < count; ++s) {
        if (i == 0) {
          f[s] = static_cast<SimplexId>(s % power[n - 1]);
        } else if (i == n) {
          f[s] = static_cast<SimplexId>(s / q);
        } else {
          // Positions i and i+1 (1-based) are digits with weights
          // q^(n-i) and q^(n-i-1).
          const std::size_t hi = power[n - i];
          const std::size_t lo = power[n - i - 1];
          const std::size_t prefix = s / (hi * q);
          const auto a = static_cast<Element>((s / hi) % q);
          const auto b = static_cast<Element>((s / lo) % q);
          const std::size_t suffix = s % lo;
          f[s] = static_cast<SimplexId>((prefix * q + m.product(a, b)) * lo + suffix);
        }
      }
      x.set_face(n, i, std::move(f));
    }
  }
  for (std::size_t n = 0; n < n_max; ++n) {
    const std::size_t count = counts[n];
    for (std::size_t i = 0; i <= n; ++i) {
      // Insert the unit after position i: the low n - i digits shift up.
      SimplicialSetTrunc::Map d(count);
      const std::size_t lo = power[n - i];
      for (std::size_t s = 0; s < count; ++s) {
        const std::size_t prefix = s / lo;
        const std::size_t suffix = s % lo;
        d[s] = static_cast<SimplexId>((prefix * q + m.unit()) * lo + suffix);
      }
      x.set_degeneracy(n, i, std::move(d));
    }
  }
  return x;
}

std::vector<Element> nerve_tuple(const FiniteMonoid& m, std::size_t n, SimplexId id) {
  std::vector<Element> t(n);
  std::size_t s = id;
  for (std::size_t k = n; k-- > 0;) {
    t[k] = static_cast<Element>(s % m.size());
    s /= m.size();
  }
  return t;
}

SimplicialSetTrunc point(std::size_t n_max) { return discrete(1, n_max); }

SimplicialSetTrunc discrete(std::size_t points, std::size_t n_max) {
  SimplicialSetTrunc x(std::vector<std::size_t>(n_max + 1, points));
  SimplicialSetTrunc::Map id(points);
  std::iota(id.begin(), id.end(), SimplexId{0});
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) x.set_face(n, i, id);
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) x.set_degeneracy(n, i, id);
  if (points > 0) x.set_basepoint(0);
  return x;
}

SimplicialSetTrunc simplicial_circle(std::size_t n_max) {
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n <= n_max; ++n) counts.push_back(n + 1);
  SimplicialSetTrunc x(counts);
  x.set_basepoint(0);
  // a zeros in a sequence of length n + 1; a = 0 or a = n + 1 is the basepoint.
  auto id_of = [](std::size_t a, std::size_t n) -> SimplexId {
    return (a == 0 || a == n + 1) ? 0 : static_cast<SimplexId>(a);
  };
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map f(n + 1);
      f[0] = 0;
      for (std::size_t a = 1; a <= n; ++a) f[a] = id_of(i < a ? a - 1 : a, n - 1);
      x.set_face(n, i, std::move(f));
    }
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map d(n + 1);
      d[0] = 0;
      for (std::size_t a = 1; a <= n; ++a) d[a] = id_of(i < a ? a + 1 : a, n + 1);
      x.set_degeneracy(n, i, std::move(d));
    }
  return x;
}

SimplicialSetTrunc wedge(std::span<const SimplicialSetTrunc> xs, std::size_t n_max) {
  for (const auto& x : xs) {
    if (x.max_degree() != n_max) throw input_error("wedge: mismatched truncation degrees");
    if (!x.basepoint()) throw input_error("wedge: every input must be pointed");
  }
  // new_id[t][n][s] for summand t.
  std::vector<std::vector<std::vector<SimplexId>>> new_id(xs.size());
  std::vector<std::size_t> counts(n_max + 1, 1);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    new_id[t].resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const SimplexId base = xs[t].basepoint_simplex(n);
      auto& ids = new_id[t][n];
      ids.resize(xs[t].count(n));
      for (std::size_t s = 0; s < ids.size(); ++s)
        ids[s] = s == base ? 0 : static_cast<SimplexId>(counts[n]++);
    }
  }
  SimplicialSetTrunc w(counts);
  w.set_basepoint(0);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map f(counts[n], 0);
      for (std::size_t t = 0; t < xs.size(); ++t) {
        const auto& src = xs[t].face(n, i);
        for (std::size_t s = 0; s < src.size(); ++s)
          f[new_id[t][n][s]] = new_id[t][n - 1][src[s]];
      }
      w.set_face(n, i, std::move(f));
    }
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map d(counts[n], 0);
      for (std::size_t t = 0; t < xs.size(); ++t) {
        const auto& src = xs[t].degeneracy(n, i);
        for (std::size_t s = 0; s < src.size(); ++s)
          d[new_id[t][n][s]] = new_id[t][n + 1][src[s]];
      }
      d[0] = 0;
      w.set_degeneracy(n, i, std::move(d));
    }
  return w;
}

ChainComplex normalized_chains(const SimplicialSetTrunc& x, Exec exec) {
  const std::size_t top = x.max_degree();
  std::vector<std::vector<SimplexId>> basis(top + 1);
  std::vector<std::vector<std::int64_t>> index(top + 1);
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= top; ++n) {
    basis[n] = x.nondegenerate(n);
    index[n].assign(x.count(n), -1);
    for (std::size_t k = 0; k < basis[n].size(); ++k)
      index[n][basis[n][k]] = static_cast<std::int64_t>(k);
    ranks.push_back(basis[n].size());
  }
  std::vector<SparseIntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<std::vector<SimplexId>> faces;
    for (std::size_t i = 0; i <= n; ++i) faces.push_back(x.face(n, i));
    const kernels::BoundaryInput in{faces, basis[n], index[n - 1]};
    const auto cols = kernels::boundary_columns(in, exec);
    SparseIntMatrix d(ranks[n - 1], ranks[n]);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [row, c] : cols[j]) d.mutable_row(row).push_back({j, Integer(c)});
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries), true);
}

}  // namespace simpmon
