#include "simpmon/simplicial_monoid.hpp"

#include <numeric>

#include "simpmon/error.hpp"

namespace simpmon {

SimplicialMonoid::SimplicialMonoid(
    std::vector<FreeProduct> levels,
    std::vector<std::vector<FreeProductHom>> faces,
    std::vector<std::vector<FreeProductHom>> degeneracies)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (levels_.empty()) throw input_error("simplicial monoid needs level 0");
  if (faces_.size() != levels_.size() || degeneracies_.size() != levels_.size())
    throw input_error("simplicial monoid: one face/degeneracy family per level");
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (faces_[k].size() != (k == 0 ? 0 : k + 1))
      throw input_error("level " + std::to_string(k) + " needs k+1 faces");
    const std::size_t expect = k + 1 < levels_.size() ? k + 1 : 0;
    if (degeneracies_[k].size() != expect)
      throw input_error("level " + std::to_string(k) + " has the wrong number of degeneracies");
  }
}

const FreeProductHom& SimplicialMonoid::face(std::size_t k, std::size_t i) const {
  if (k == 0 || k > max_level() || i > k)
    throw input_error("no face d_" + std::to_string(i) + " on level " + std::to_string(k));
  return faces_[k][i];
}

const FreeProductHom& SimplicialMonoid::degeneracy(std::size_t k, std::size_t i) const {
  if (k >= max_level() || i > k)
    throw input_error("no degeneracy s_" + std::to_string(i) + " on level " +
                      std::to_string(k));
  return degeneracies_[k][i];
}

std::optional<std::string> SimplicialMonoid::difference(
    std::size_t level, const FreeProductHom& a, const FreeProductHom& b) const {
  const FreeProduct& src = this->level(level);
  for (const auto& g : src.generators()) {
    const auto& x = a.image(g.front());
    const auto& y = b.image(g.front());
    if (x != y)
      return "generator " + src.to_string(g) + " maps to " + a.target().to_string(x) +
             " vs " + b.target().to_string(y);
  }
  return std::nullopt;
}

FreeProductHom summand_hom(const FreeProduct& source, const FreeProduct& target,
                           const std::vector<std::size_t>& summand_map) {
  if (summand_map.size() != source.factor_count())
    throw input_error("summand map does not match the source");
  FreeProductHom h(source, target);
  for (const auto& g : source.generators()) {
    const Letter l = g.front();
    const std::size_t dest = summand_map[l.factor - 1];
    if (dest == 0)
      h.set_image(l, {});
    else
      h.set_image(l, {Letter{dest, l.element}});
  }
  return h;
}

SimplicialMonoid build_M(std::size_t k_max, Codiagonal codiagonal) {
  if (k_max == 0) throw input_error("build_M needs k_max >= 1");
  auto p = std::make_shared<const FiniteMonoid>(make_monoid_P());
  std::vector<FreeProduct> levels;
  for (std::size_t k = 0; k <= k_max; ++k) levels.emplace_back(k, p);
  std::vector<std::vector<FreeProductHom>> faces(k_max + 1);
  std::vector<std::vector<FreeProductHom>> degeneracies(k_max + 1);
  for (std::size_t k = 1; k <= k_max; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      faces[k].push_back(summand_hom(levels[k], levels[k - 1],
                                     face_summand_map(k, i, codiagonal)));
  for (std::size_t k = 0; k < k_max; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      degeneracies[k].push_back(
          summand_hom(levels[k], levels[k + 1], degeneracy_summand_map(k, i)));
  return SimplicialMonoid(std::move(levels), std::move(faces), std::move(degeneracies));
}

SimplicialMonoid constant_simplicial_monoid(std::shared_ptr<const FiniteMonoid> factor,
                                            std::size_t k_max) {
  FreeProduct m(1, std::move(factor));
  std::vector<FreeProduct> levels(k_max + 1, m);
  std::vector<std::vector<FreeProductHom>> faces(k_max + 1);
  std::vector<std::vector<FreeProductHom>> degeneracies(k_max + 1);
  const auto id = FreeProductHom::identity(m);
  for (std::size_t k = 1; k <= k_max; ++k) faces[k].assign(k + 1, id);
  for (std::size_t k = 0; k < k_max; ++k) degeneracies[k].assign(k + 1, id);
  return SimplicialMonoid(std::move(levels), std::move(faces), std::move(degeneracies));
}

std::optional<IdentityViolation> verify_simplicial_identities(const SimplicialMonoid& m) {
  return check_simplicial_identities(m);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller representative; true when two classes merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ComponentMonoid pi0(const SimplicialMonoid& m) {
  const FreeProduct& m0 = m.level(0);
  if (m0.factor_count() > 1)
    throw input_error("pi0 needs a finite level 0 (at most one free factor)");
  const FiniteMonoid base = m0.factor_count() == 0 ? trivial_monoid() : m0.factor(1);
  auto as_element = [&](const FreeProductElement& w) -> Element {
    return w.empty() ? base.unit() : w.front().element;
  };

  const std::size_t n = base.size();
  UnionFind classes(n);
  if (m.max_level() >= 1) {
    for (const auto& g : m.level(1).generators())
      classes.unite(as_element(m.face(1, 0).image(g.front())),
                    as_element(m.face(1, 1).image(g.front())));
  }
  // Close under left and right multiplication.
  for (bool changed = true; changed;) {
    changed = false;
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (classes.find(a) != classes.find(b)) continue;
        for (Element c = 0; c < n; ++c) {
          changed |= classes.unite(base.product(a, c), base.product(b, c));
          changed |= classes.unite(base.product(c, a), base.product(c, b));
        }
      }
  }

  std::vector<Element> rep_to_class(n, 0);
  std::vector<Element> reps;
  std::vector<std::string> names;
  for (Element a = 0; a < n; ++a)
    if (classes.find(a) == a) {
      rep_to_class[a] = static_cast<Element>(reps.size());
      reps.push_back(a);
      names.push_back("[" + base.element_name(a) + "]");
    }
  std::vector<Element> class_of(n);
  for (Element a = 0; a < n; ++a) class_of[a] = rep_to_class[classes.find(a)];
  std::vector<std::vector<Element>> table(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = 0; y < reps.size(); ++y)
      table[x][y] = class_of[base.product(reps[x], reps[y])];

  ComponentMonoid out{
      FiniteMonoid("pi0", std::move(names), class_of[base.unit()], std::move(table)),
      std::move(class_of), false, std::nullopt};
  out.is_group = true;
  for (Element e = 0; e < out.quotient.size(); ++e)
    if (!inverse(out.quotient, e)) {
      out.is_group = false;
      out.witness = e;
      break;
    }
  return out;
}

bool pi0_is_group(const SimplicialMonoid& m) { return pi0(m).is_group; }

}  // namespace simpmon
