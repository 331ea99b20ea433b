#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "simpmon/error.hpp"
#include "simpmon/resolution.hpp"
#include "simpmon/simplicial_set.hpp"
#include "support.hpp"

using namespace simpmon;

namespace {

MonoidRingModule permuted(const MonoidRingModule& m, const std::vector<std::size_t>& perm) {
  // New basis position k holds old basis element perm[k].
  std::vector<std::size_t> where(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) where[perm[k]] = k;
  std::vector<std::string> basis;
  std::vector<std::vector<std::size_t>> action;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    basis.push_back(m.basis_name(perm[k]));
    std::vector<std::size_t> row;
    for (Element x = 0; x < m.monoid().size(); ++x) row.push_back(where[m.act(perm[k], x)]);
    action.push_back(std::move(row));
  }
  return MonoidRingModule(m.name(), m.monoid_ptr(), basis, action);
}

SparseIntMatrix permutation(const std::vector<std::size_t>& perm) {
  // Old coordinates to new: row k picks old coordinate perm[k].
  SparseIntMatrix p(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) p.set(k, perm[k], 1);
  return p;
}

}  // namespace

TEST_CASE("modules") {
  const LemmaResolution r = build_lemma_resolution();
  for (const ModuleMap* f : {&r.alpha, &r.beta, &r.gamma}) {
    CHECK_FALSE(f->source.action_violation());
    CHECK_FALSE(f->target.action_violation());
    CHECK_FALSE(f->equivariance_violation());
  }
  CHECK(r.alpha.source.rank() == 4);
  CHECK(r.beta.source.rank() == 5);
  CHECK(r.beta.target.rank() == 2);
  CHECK(r.gamma.target.rank() == 1);

  const FiniteMonoid& p = *r.monoid;
  CHECK_THROWS_AS(right_ideal_module("bad", r.monoid, {*p.find("x11")}), input_error);
}

TEST_CASE("the three maps") {
  const LemmaResolution r = build_lemma_resolution();
  const FiniteMonoid& p = *r.monoid;
  // beta(1) = x11 - x12
  CHECK(r.beta.image(p.unit()) == std::vector<Integer>{1, -1});
  for (Element m = 0; m < p.size(); ++m)
    if (m != p.unit()) CHECK(r.beta.image(m) == std::vector<Integer>{0, 0});
  CHECK(r.gamma.image(0) == std::vector<Integer>{1});
  CHECK(r.gamma.image(1) == std::vector<Integer>{1});
  // alpha includes x21 at position 3... of Z[P]
  CHECK(r.alpha.image(2)[*p.find("x21")] == 1);
}

TEST_CASE("exactness") {
  const LemmaResolution r = build_lemma_resolution();
  const auto maps = r.maps();
  const ExactnessReport e = check_exactness(maps);
  CHECK(e.exact());
  CHECK_FALSE(e.nonzero_composite);
  CHECK(e.injective_first());
  CHECK(e.surjective_last());
  REQUIRE(e.positions.size() == 4);
  CHECK(e.positions[1].kernel_rank == 4);
  CHECK(e.positions[1].image_rank == 4);

  auto broken = maps;
  broken[1].matrix = SparseIntMatrix(2, 5);
  const ExactnessReport b = check_exactness(broken);
  CHECK_FALSE(b.exact());
  REQUIRE(b.first_failure());
  CHECK(b.first_failure()->module == "Z[P]");
  CHECK(b.first_failure()->kernel_rank == 5);
  CHECK(b.first_failure()->image_rank == 4);
  CHECK(b.first_failure()->defect == HomologyGroup::free(1));

  auto wrong_sign = maps;
  wrong_sign[2].matrix.set(0, 1, -1);  // gamma(x12) = -1 is not equivariant
  const ExactnessReport w = check_exactness(wrong_sign);
  CHECK_FALSE(w.exact());
  CHECK(w.nonzero_composite == 1);
  CHECK_FALSE(w.equivariance_failures.empty());

  auto swapped = maps;
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_AS(check_exactness(swapped), input_error);
}

TEST_CASE("the identity on Z is exact") {
  const LemmaResolution r = build_lemma_resolution();
  const MonoidRingModule z = trivial_module(r.monoid);
  const ModuleMap id{"id", z, z, SparseIntMatrix::identity(1)};
  const ModuleMap one[] = {id};
  CHECK(check_exactness(one).exact());
  const ModuleMap twice{"2", z, z, SparseIntMatrix::from_dense({{2}})};
  const ModuleMap two[] = {twice};
  const ExactnessReport e = check_exactness(two);
  CHECK_FALSE(e.exact());
  CHECK(e.positions.back().defect == HomologyGroup{0, {2}});
}

TEST_CASE("exactness is stable under basis permutations") {
  const LemmaResolution r = build_lemma_resolution();
  const std::vector<std::size_t> p2{3, 1, 0, 2}, p1{4, 2, 0, 1, 3}, p0{1, 0};
  const MonoidRingModule f2 = permuted(r.alpha.source, p2), f1 = permuted(r.beta.source, p1),
                         f0 = permuted(r.beta.target, p0);
  auto inverse = [](const std::vector<std::size_t>& p) { return permutation(p).transpose(); };
  const ModuleMap maps[] = {
      {"alpha", f2, f1, permutation(p1) * r.alpha.matrix * inverse(p2)},
      {"beta", f1, f0, permutation(p0) * r.beta.matrix * inverse(p1)},
      {"gamma", f0, r.gamma.target, r.gamma.matrix * inverse(p0)}};
  const ExactnessReport e = check_exactness(maps);
  CHECK(e.equivariance_failures.empty());
  CHECK(e.exact());
}

TEST_CASE("projectivity certificates") {
  const ProjectivityReport report = check_projectivity();
  CHECK(report.all_projective());
  const LemmaResolution r = build_lemma_resolution();
  const FiniteMonoid& p = *r.monoid;

  const auto zp = find_projectivity_certificate(r.beta.source);
  REQUIRE(zp);
  CHECK(zp->idempotent == p.unit());
  CHECK(verify_certificate(r.beta.source, *zp));

  const auto zp1 = find_projectivity_certificate(r.beta.target);
  REQUIRE(zp1);
  CHECK(zp1->idempotent == *p.find("x11"));
  CHECK(zp1->match == std::vector<Element>{*p.find("x11"), *p.find("x12")});
  CHECK(verify_certificate(r.beta.target, *zp1));

  CHECK_FALSE(find_projectivity_certificate(trivial_module(r.monoid)));

  ProjectivityCertificate forged = *zp1;
  forged.idempotent = *p.find("x21");
  CHECK_FALSE(verify_certificate(r.beta.target, forged));
}

TEST_CASE("Tor from the resolution") {
  const TorResult t = tor_via_resolution();
  CHECK(t.tor == oracle::sphere(2, 3));
  CHECK(t.coinvariant_ranks == std::vector<std::size_t>{1, 1, 2});
  CHECK(t.transported[0].is_zero());
  CHECK(coinvariants(build_lemma_resolution().beta.target).rank == 1);

  const auto nerve_h = homology_of_complex(normalized_chains(nerve(make_monoid_P(), 5)));
  for (std::size_t k = 0; k < 3; ++k) CHECK(t.tor[k] == nerve_h[k]);
}
