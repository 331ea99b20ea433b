#include "simpmon/monoid_ring.hpp"

#include "simpmon/error.hpp"
#include "simpmon/smith.hpp"

namespace simpmon {

MonoidRingModule::MonoidRingModule(std::string name,
                                   std::shared_ptr<const FiniteMonoid> monoid,
                                   std::vector<std::string> basis,
                                   std::vector<std::vector<std::size_t>> action)
    : name_(std::move(name)),
      monoid_(std::move(monoid)),
      basis_(std::move(basis)),
      action_(std::move(action)) {
  if (!monoid_) throw input_error("module needs a monoid");
  if (action_.size() != basis_.size())
    throw input_error("module " + name_ + ": one action row per basis element");
  for (const auto& row : action_) {
    if (row.size() != monoid_->size())
      throw input_error("module " + name_ + ": action row has the wrong length");
    for (std::size_t t : row)
      if (t >= basis_.size()) throw input_error("module " + name_ + ": action leaves the basis");
  }
}

SparseIntMatrix MonoidRingModule::action_matrix(Element m) const {
  SparseIntMatrix a(rank(), rank());
  for (std::size_t b = 0; b < rank(); ++b) a.add(act(b, m), b, 1);
  return a;
}

std::optional<std::string> MonoidRingModule::action_violation() const {
  const FiniteMonoid& m = monoid();
  for (std::size_t b = 0; b < rank(); ++b) {
    if (act(b, m.unit()) != b) return basis_[b] + " . 1 != " + basis_[b];
    for (Element x = 0; x < m.size(); ++x)
      for (Element y = 0; y < m.size(); ++y)
        if (act(act(b, x), y) != act(b, m.product(x, y)))
          return "(" + basis_[b] + " . " + m.element_name(x) + ") . " + m.element_name(y) +
                 " != " + basis_[b] + " . " + m.element_name(m.product(x, y));
  }
  return std::nullopt;
}

MonoidRingModule regular_module(std::shared_ptr<const FiniteMonoid> m) {
  std::vector<Element> all;
  for (Element e = 0; e < m->size(); ++e) all.push_back(e);
  std::string name = "Z[" + m->name() + "]";
  return right_ideal_module(std::move(name), std::move(m), all);
}

MonoidRingModule right_ideal_module(std::string name, std::shared_ptr<const FiniteMonoid> m,
                                    const std::vector<Element>& elements) {
  std::vector<std::string> basis;
  std::vector<std::optional<std::size_t>> position(m->size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    basis.push_back(m->element_name(elements[k]));
    position.at(elements[k]) = k;
  }
  std::vector<std::vector<std::size_t>> action(elements.size(),
                                               std::vector<std::size_t>(m->size()));
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (Element x = 0; x < m->size(); ++x) {
      const auto p = position[m->product(elements[k], x)];
      if (!p) throw input_error(name + " is not closed under right multiplication");
      action[k][x] = *p;
    }
  return MonoidRingModule(std::move(name), std::move(m), std::move(basis), std::move(action));
}

MonoidRingModule trivial_module(std::shared_ptr<const FiniteMonoid> m) {
  const std::size_t n = m->size();
  return MonoidRingModule("Z", std::move(m), {"1"}, {std::vector<std::size_t>(n, 0)});
}

MonoidRingModule direct_sum(std::string name, const MonoidRingModule& a,
                            const MonoidRingModule& b) {
  if (&a.monoid() != &b.monoid() && !(a.monoid() == b.monoid()))
    throw input_error("direct sum of modules over different monoids");
  std::vector<std::string> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  std::vector<std::vector<std::size_t>> action;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    std::vector<std::size_t> row;
    for (Element x = 0; x < a.monoid().size(); ++x) row.push_back(a.act(k, x));
    action.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < b.rank(); ++k) {
    std::vector<std::size_t> row;
    for (Element x = 0; x < b.monoid().size(); ++x) row.push_back(a.rank() + b.act(k, x));
    action.push_back(std::move(row));
  }
  return MonoidRingModule(std::move(name), a.monoid_ptr(), std::move(basis), std::move(action));
}

std::vector<Integer> ModuleMap::image(std::size_t b) const {
  std::vector<Integer> col(target.rank());
  for (std::size_t i = 0; i < target.rank(); ++i) col[i] = matrix.at(i, b);
  return col;
}

std::optional<std::string> ModuleMap::equivariance_violation() const {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    return name + ": matrix shape does not match the modules";
  const FiniteMonoid& m = source.monoid();
  for (Element x = 0; x < m.size(); ++x) {
    const SparseIntMatrix lhs = matrix * source.action_matrix(x);
    const SparseIntMatrix rhs = target.action_matrix(x) * matrix;
    if (lhs == rhs) continue;
    for (std::size_t b = 0; b < source.rank(); ++b)
      for (std::size_t i = 0; i < target.rank(); ++i)
        if (lhs.at(i, b) != rhs.at(i, b))
          return name + "(" + source.basis_name(b) + " . " + m.element_name(x) +
                 ") != " + name + "(" + source.basis_name(b) + ") . " + m.element_name(x);
  }
  return std::nullopt;
}

Coinvariants coinvariants(const MonoidRingModule& m) {
  std::vector<SparseIntMatrix::Triple> rel;
  std::size_t col = 0;
  for (std::size_t b = 0; b < m.rank(); ++b)
    for (Element x = 0; x < m.monoid().size(); ++x) {
      const std::size_t t = m.act(b, x);
      if (t == b) continue;
      rel.push_back({t, col, 1});
      rel.push_back({b, col, -1});
      ++col;
    }
  const SparseIntMatrix relations = SparseIntMatrix::from_triples(m.rank(), col, rel);
  SmithOptions opts;
  opts.left = true;
  opts.left_inverse = true;
  const SmithForm s = smith_normal_form(relations, opts);
  for (const auto& d : s.invariants)
    if (d != 1) throw input_error("coinvariants of " + m.name() + " have torsion");
  const std::size_t r = s.rank();
  Coinvariants out;
  out.rank = m.rank() - r;
  out.projection = s.left->row_slice(r, m.rank());
  out.section = s.left_inverse->col_slice(r, m.rank());
  return out;
}

}  // namespace simpmon
