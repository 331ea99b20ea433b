#include "simpmon/bisimplicial.hpp"

#include <algorithm>

#include "simpmon/error.hpp"

namespace simpmon {

BisimplicialTrunc::BisimplicialTrunc(std::vector<SimplicialSetTrunc> levels,
                                     std::vector<std::vector<SimplicialMap>> faces,
                                     std::vector<std::vector<SimplicialMap>> degeneracies)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (levels_.empty()) throw input_error("bisimplicial set needs level 0");
  for (const auto& l : levels_)
    if (l.max_degree() != levels_.front().max_degree())
      throw input_error("bisimplicial levels must share a vertical truncation");
  if (faces_.size() != levels_.size() || degeneracies_.size() != levels_.size())
    throw input_error("bisimplicial set: one face/degeneracy family per level");
}

const SimplicialMap& BisimplicialTrunc::face(std::size_t k, std::size_t i) const {
  if (k == 0 || k > max_level() || i > k)
    throw input_error("no horizontal face d_" + std::to_string(i) + " on level " +
                      std::to_string(k));
  return faces_[k].at(i);
}

const SimplicialMap& BisimplicialTrunc::degeneracy(std::size_t k, std::size_t i) const {
  if (k >= max_level() || i > k)
    throw input_error("no horizontal degeneracy s_" + std::to_string(i) + " on level " +
                      std::to_string(k));
  return degeneracies_[k].at(i);
}

SimplicialMap BisimplicialTrunc::identity(std::size_t k) const {
  SimplicialMap m;
  for (std::size_t n = 0; n <= vertical_degree(); ++n)
    m.components.push_back(level(k).identity(n));
  return m;
}

SimplicialMap BisimplicialTrunc::compose(const SimplicialMap& outer,
                                         const SimplicialMap& inner) const {
  SimplicialMap m;
  for (std::size_t n = 0; n < inner.components.size(); ++n)
    m.components.push_back(
        SimplicialSetTrunc::compose(outer.components.at(n), inner.components[n]));
  return m;
}

std::optional<std::string> BisimplicialTrunc::difference(std::size_t k,
                                                         const SimplicialMap& a,
                                                         const SimplicialMap& b) const {
  for (std::size_t n = 0; n < a.components.size(); ++n)
    if (auto d = level(k).difference(n, a.components[n], b.components.at(n)))
      return "vertical " + *d;
  return std::nullopt;
}

std::optional<std::string> validate(const BisimplicialTrunc& b) {
  for (std::size_t k = 0; k <= b.max_level(); ++k) {
    if (auto e = validate(b.level(k))) return "level " + std::to_string(k) + ": " + *e;
    if (k >= 1)
      for (std::size_t i = 0; i <= k; ++i)
        if (auto e = check_simplicial_map(b.level(k), b.level(k - 1), b.face(k, i)))
          return "horizontal d_" + std::to_string(i) + " on level " + std::to_string(k) +
                 " " + *e;
    if (k < b.max_level())
      for (std::size_t i = 0; i <= k; ++i)
        if (auto e = check_simplicial_map(b.level(k), b.level(k + 1), b.degeneracy(k, i)))
          return "horizontal s_" + std::to_string(i) + " on level " + std::to_string(k) +
                 " " + *e;
  }
  if (auto v = check_simplicial_identities(b)) return "horizontal " + v->describe();
  return std::nullopt;
}

namespace {

// Simplex ids of a wedge of k copies of x: 0 is the basepoint simplex and
// summand t (1-based) holds the non-basepoint simplices of x in order.
struct WedgeIds {
  const SimplicialSetTrunc* x;
  std::vector<SimplexId> base;                 // basepoint simplex per degree
  std::vector<std::vector<SimplexId>> rank;    // rank among non-base, per degree

  explicit WedgeIds(const SimplicialSetTrunc& space) : x(&space) {
    for (std::size_t n = 0; n <= space.max_degree(); ++n) {
      base.push_back(space.basepoint_simplex(n));
      std::vector<SimplexId> r(space.count(n), 0);
      SimplexId next = 0;
      for (std::size_t s = 0; s < r.size(); ++s)
        if (s != base[n]) r[s] = next++;
      rank.push_back(std::move(r));
    }
  }
  std::size_t width(std::size_t n) const { return x->count(n) - 1; }
  // Summand (1-based, 0 for basepoint) and underlying simplex of an id.
  std::pair<std::size_t, SimplexId> decode(std::size_t n, SimplexId id) const {
    if (id == 0) return {0, base[n]};
    const std::size_t w = width(n);
    const std::size_t t = (id - 1) / w + 1;
    SimplexId r = static_cast<SimplexId>((id - 1) % w);
    // rank -> simplex
    SimplexId s = r >= base[n] ? r + 1 : r;
    return {t, s};
  }
  SimplexId encode(std::size_t n, std::size_t summand, SimplexId s) const {
    if (summand == 0 || s == base[n]) return 0;
    return static_cast<SimplexId>(1 + (summand - 1) * width(n) + rank[n][s]);
  }
};

SimplicialMap summand_map(const WedgeIds& ids, std::size_t k,
                          const std::vector<std::size_t>& f) {
  SimplicialMap m;
  for (std::size_t n = 0; n <= ids.x->max_degree(); ++n) {
    const std::size_t count = 1 + k * ids.width(n);
    std::vector<SimplexId> c(count);
    for (std::size_t id = 0; id < count; ++id) {
      auto [t, s] = ids.decode(n, static_cast<SimplexId>(id));
      c[id] = t == 0 ? 0 : ids.encode(n, f[t - 1], s);
    }
    m.components.push_back(std::move(c));
  }
  return m;
}

}  // namespace

BisimplicialTrunc wedge_levels(const SimplicialSetTrunc& x, std::size_t k_max,
                               Codiagonal codiagonal) {
  if (k_max == 0) throw input_error("wedge_levels needs k_max >= 1");
  if (!x.basepoint()) throw input_error("wedge_levels needs a pointed simplicial set");
  const std::size_t n_max = x.max_degree();
  std::vector<SimplicialSetTrunc> levels;
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::vector<SimplicialSetTrunc> copies(k, x);
    levels.push_back(wedge(copies, n_max));
  }
  const WedgeIds ids(x);
  std::vector<std::vector<SimplicialMap>> faces(k_max + 1);
  std::vector<std::vector<SimplicialMap>> degeneracies(k_max + 1);
  for (std::size_t k = 1; k <= k_max; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      faces[k].push_back(summand_map(ids, k, face_summand_map(k, i, codiagonal)));
  for (std::size_t k = 0; k < k_max; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      degeneracies[k].push_back(summand_map(ids, k, degeneracy_summand_map(k, i)));
  return BisimplicialTrunc(std::move(levels), std::move(faces), std::move(degeneracies));
}

BisimplicialTrunc build_S(std::size_t k_max, std::size_t n_max) {
  return wedge_levels(nerve(make_monoid_P(), n_max), k_max);
}

SimplicialSetTrunc diagonal(const BisimplicialTrunc& b) {
  return diagonal(b, std::min(b.max_level(), b.vertical_degree()));
}

SimplicialSetTrunc diagonal(const BisimplicialTrunc& b, std::size_t degree) {
  if (degree > b.max_level())
    throw input_error("diagonal degree " + std::to_string(degree) + " needs level (" +
                      std::to_string(degree) + ", " + std::to_string(degree) +
                      ") but only levels up to " + std::to_string(b.max_level()) +
                      " exist");
  if (degree > b.vertical_degree())
    throw input_error("diagonal degree " + std::to_string(degree) + " needs level (" +
                      std::to_string(degree) + ", " + std::to_string(degree) +
                      ") but vertical degrees stop at " +
                      std::to_string(b.vertical_degree()));
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n <= degree; ++n) counts.push_back(b.level(n).count(n));
  SimplicialSetTrunc d(counts);
  if (const auto& bp = b.level(0).basepoint()) d.set_basepoint(*bp);
  for (std::size_t n = 1; n <= degree; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& vertical = b.level(n).face(n, i);
      const auto& horizontal = b.face(n, i).components[n - 1];
      d.set_face(n, i, SimplicialSetTrunc::compose(horizontal, vertical));
    }
  for (std::size_t n = 0; n < degree; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& vertical = b.level(n).degeneracy(n, i);
      const auto& horizontal = b.degeneracy(n, i).components[n + 1];
      d.set_degeneracy(n, i, SimplicialSetTrunc::compose(horizontal, vertical));
    }
  return d;
}

}  // namespace simpmon
