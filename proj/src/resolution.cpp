#include "simpmon/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "simpmon/chain_complex.hpp"
#include "simpmon/error.hpp"
#include "simpmon/smith.hpp"

namespace simpmon {

namespace {

Element element(const FiniteMonoid& m, const std::string& name) {
  const auto e = m.find(name);
  if (!e) throw std::logic_error("monoid has no element " + name);
  return *e;
}

std::size_t matrix_rank(const SparseIntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return smith_normal_form(a, SmithOptions{.exec = Exec::serial}).rank();
}

}  // namespace

LemmaResolution build_lemma_resolution() {
  auto p = std::make_shared<const FiniteMonoid>(make_monoid_P());
  const Element x11 = element(*p, "x11"), x12 = element(*p, "x12");
  const Element x21 = element(*p, "x21"), x22 = element(*p, "x22");

  const MonoidRingModule zp = regular_module(p);
  const MonoidRingModule zp1 = right_ideal_module("Z[P1]", p, {x11, x12});
  const MonoidRingModule zp2 = right_ideal_module("Z[P2]", p, {x21, x22});
  const MonoidRingModule f2 = direct_sum("Z[P1]+Z[P2]", zp1, zp2);
  const MonoidRingModule z = trivial_module(p);

  SparseIntMatrix alpha(zp.rank(), f2.rank());
  const Element f2_elements[] = {x11, x12, x21, x22};
  for (std::size_t b = 0; b < f2.rank(); ++b) alpha.set(f2_elements[b], b, 1);

  // Z[P1] has basis (x11, x12) at positions 0, 1.
  SparseIntMatrix beta(zp1.rank(), zp.rank());
  for (Element m = 0; m < p->size(); ++m) {
    beta.add(p->product(x11, m) == x11 ? 0 : 1, m, 1);
    beta.add(p->product(x12, m) == x11 ? 0 : 1, m, -1);
  }

  SparseIntMatrix gamma(1, zp1.rank());
  for (std::size_t b = 0; b < zp1.rank(); ++b) gamma.set(0, b, 1);

  LemmaResolution r{p,
                    {"alpha", f2, zp, std::move(alpha)},
                    {"beta", zp, zp1, std::move(beta)},
                    {"gamma", zp1, z, std::move(gamma)}};
  for (const ModuleMap* f : {&r.alpha, &r.beta, &r.gamma})
    if (auto v = f->equivariance_violation()) throw std::logic_error(*v);
  return r;
}

bool ExactnessReport::exact() const {
  return !nonzero_composite && equivariance_failures.empty() && first_failure() == nullptr;
}

const PositionReport* ExactnessReport::first_failure() const {
  for (const auto& p : positions)
    if (!p.exact()) return &p;
  return nullptr;
}

ExactnessReport check_exactness(std::span<const ModuleMap> maps) {
  if (maps.empty()) throw input_error("exactness of an empty sequence");
  for (const auto& f : maps)
    if (f.matrix.rows() != f.target.rank() || f.matrix.cols() != f.source.rank())
      throw input_error(f.name + ": matrix shape does not match the modules");
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (maps[k].target.rank() != maps[k + 1].source.rank())
      throw input_error(maps[k].name + " and " + maps[k + 1].name + " do not compose");

  ExactnessReport report;
  for (const auto& f : maps)
    if (auto v = f.equivariance_violation()) report.equivariance_failures.push_back(*v);

  // A_{n-d} sits in degree d, so maps[k] is d_{n-k}.
  const std::size_t n = maps.size();
  std::vector<std::size_t> ranks(n + 1);
  std::vector<SparseIntMatrix> boundaries(n);
  for (std::size_t d = 0; d <= n; ++d)
    ranks[d] = d == n ? maps[0].source.rank() : maps[n - 1 - d].target.rank();
  for (std::size_t d = 1; d <= n; ++d) boundaries[d - 1] = maps[n - d].matrix;
  const ChainComplex c(ranks, boundaries, false);
  if (auto bad = find_nonzero_composite(c)) report.nonzero_composite = n - *bad;

  // Every product check is done; homology needs d d = 0.
  std::vector<std::size_t> map_rank(n);
  for (std::size_t k = 0; k < n; ++k) map_rank[k] = matrix_rank(maps[k].matrix);
  for (std::size_t j = 0; j <= n; ++j) {
    PositionReport pos;
    pos.module = j == n ? maps[n - 1].target.name() : maps[j].source.name();
    pos.rank = j == n ? maps[n - 1].target.rank() : maps[j].source.rank();
    pos.kernel_rank = pos.rank - (j == n ? 0 : map_rank[j]);
    pos.image_rank = j == 0 ? 0 : map_rank[j - 1];
    if (!report.nonzero_composite)
      pos.defect = homology_of_complex(c, n - j, Exec::serial);
    else
      pos.defect = HomologyGroup::free(pos.kernel_rank - std::min(pos.kernel_rank, pos.image_rank));
    report.positions.push_back(std::move(pos));
  }
  return report;
}

namespace {

std::vector<Element> left_ideal_of(const FiniteMonoid& m, Element e) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x) out.push_back(m.product(e, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool complement_splits(const FiniteMonoid& m, Element e) {
  // Columns: e x for x in eM, then x - e x for every x. They span Z^|M|
  // with the two blocks of complementary rank exactly when Z[M] splits.
  const std::vector<Element> ideal = left_ideal_of(m, e);
  const std::size_t n = m.size();
  SparseIntMatrix first(n, ideal.size()), second(n, n), joint(n, ideal.size() + n);
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    first.set(ideal[k], k, 1);
    joint.set(ideal[k], k, 1);
  }
  for (Element x = 0; x < n; ++x) {
    const Element ex = m.product(e, x);
    second.add(x, x, 1);
    second.add(ex, x, -1);
    joint.add(x, ideal.size() + x, 1);
    joint.add(ex, ideal.size() + x, -1);
  }
  if (matrix_rank(first) + matrix_rank(second) != n) return false;
  const SmithForm s = smith_normal_form(joint, SmithOptions{.exec = Exec::serial});
  return s.rank() == n &&
         std::all_of(s.invariants.begin(), s.invariants.end(),
                     [](const Integer& d) { return d == 1; });
}

}  // namespace

bool verify_certificate(const MonoidRingModule& mod, const ProjectivityCertificate& c) {
  const FiniteMonoid& m = mod.monoid();
  if (c.idempotent >= m.size() || m.product(c.idempotent, c.idempotent) != c.idempotent)
    return false;
  const std::vector<Element> ideal = left_ideal_of(m, c.idempotent);
  if (c.match.size() != mod.rank() || ideal.size() != mod.rank()) return false;
  std::vector<Element> sorted = c.match;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ideal) return false;
  for (std::size_t b = 0; b < mod.rank(); ++b)
    for (Element x = 0; x < m.size(); ++x)
      if (c.match[mod.act(b, x)] != m.product(c.match[b], x)) return false;
  return c.complement_ok && complement_splits(m, c.idempotent);
}

std::optional<ProjectivityCertificate> find_projectivity_certificate(
    const MonoidRingModule& mod) {
  const FiniteMonoid& m = mod.monoid();
  // Idempotents whose ideal is spelled by the module's own basis go first.
  std::vector<Element> candidates = idempotents(m);
  auto literal = [&](Element e) {
    std::vector<std::string> names;
    for (Element x : left_ideal_of(m, e)) names.push_back(m.element_name(x));
    std::vector<std::string> basis = mod.basis();
    std::sort(names.begin(), names.end());
    std::sort(basis.begin(), basis.end());
    return names == basis;
  };
  std::stable_partition(candidates.begin(), candidates.end(), literal);
  for (Element e : candidates) {
    std::vector<Element> ideal = left_ideal_of(m, e);
    if (ideal.size() != mod.rank()) continue;
    do {
      bool ok = true;
      for (std::size_t b = 0; b < mod.rank() && ok; ++b)
        for (Element x = 0; x < m.size() && ok; ++x)
          ok = ideal[mod.act(b, x)] == m.product(ideal[b], x);
      if (!ok) continue;
      ProjectivityCertificate c{mod.name(), e, ideal, complement_splits(m, e)};
      if (c.complement_ok) return c;
    } while (std::next_permutation(ideal.begin(), ideal.end()));
  }
  return std::nullopt;
}

bool ProjectivityReport::all_projective() const {
  return std::all_of(modules.begin(), modules.end(),
                     [](const auto& m) { return m.second.has_value(); });
}

ProjectivityReport check_projectivity() {
  const LemmaResolution r = build_lemma_resolution();
  auto p = r.monoid;
  const MonoidRingModule zp2 = right_ideal_module(
      "Z[P2]", p, {element(*p, "x21"), element(*p, "x22")});
  ProjectivityReport report;
  for (const MonoidRingModule* m : {&r.beta.source, &r.beta.target, &zp2})
    report.modules.emplace_back(m->name(), find_projectivity_certificate(*m));
  return report;
}

TorResult tor_via_resolution(const LemmaResolution& r) {
  const Coinvariants q0 = coinvariants(r.beta.target);
  const Coinvariants q1 = coinvariants(r.beta.source);
  const Coinvariants q2 = coinvariants(r.alpha.source);
  TorResult out;
  out.coinvariant_ranks = {q0.rank, q1.rank, q2.rank};
  SparseIntMatrix beta_bar = q0.projection * r.beta.matrix * q1.section;
  SparseIntMatrix alpha_bar = q1.projection * r.alpha.matrix * q2.section;
  out.transported = {beta_bar, alpha_bar};
  const ChainComplex c({q0.rank, q1.rank, q2.rank}, {std::move(beta_bar), std::move(alpha_bar)},
                       false);
  if (find_nonzero_composite(c)) throw std::logic_error("transported maps do not compose to 0");
  out.tor = homology_of_complex(c, Exec::serial);
  return out;
}

TorResult tor_via_resolution() { return tor_via_resolution(build_lemma_resolution()); }

}  // namespace simpmon
