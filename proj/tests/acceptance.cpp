// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "simpmon/bisimplicial.hpp"
#include "simpmon/commands.hpp"
#include "simpmon/fp_nerve.hpp"
#include "simpmon/free_product.hpp"
#include "simpmon/presentation.hpp"
#include "simpmon/resolution.hpp"
#include "simpmon/simplicial_monoid.hpp"
#include "simpmon/simplicial_set.hpp"
#include "support.hpp"

using namespace simpmon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string join(const std::vector<HomologyGroup>& h, std::size_t count) {
  std::string s;
  for (std::size_t k = 0; k < count && k < h.size(); ++k) s += (k ? ", " : "") + to_string(h[k]);
  return "(" + s + ")";
}

std::vector<HomologyGroup> reduced_homology(const SimplicialSetTrunc& x) {
  return reduced(homology_of_complex(normalized_chains(x)));
}

bool triviality_certified(const GroupPresentation& p) {
  const Simplification s = simplify(p);
  return s.verdict.status == Triviality::trivial_certified && !replay_failure(p, s.verdict);
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out;
  const int code = cmd_verify_paper({}, Format::text, false, out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(code == 0, "exit code " + std::to_string(code) + "\n" + out.str());
  o.require(secs < 600, "took " + std::to_string(secs) + "s");
  if (o.ok) o.detail = "exit 0 at degree 5, levels 4";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const ChainComplex c = normalized_chains(nerve(make_monoid_P(), 5));
  const auto h = homology_of_complex(c);
  o.require(h.size() >= 4, "too few degrees");
  o.require(std::vector<HomologyGroup>(h.begin(), h.begin() + 4) == oracle::sphere(2, 4),
            "got " + join(h, 4));
  const SparseIntMatrix d5 = c.boundary(5);
  if (o.ok)
    o.detail = join(h, 4) + ", d_5 is " + std::to_string(d5.cols()) + " -> " +
               std::to_string(d5.rows());
  return o;
}

Outcome criterion3() {
  Outcome o;
  const LemmaResolution r = build_lemma_resolution();
  const auto maps = r.maps();
  const ExactnessReport e = check_exactness(maps);
  o.require(!e.nonzero_composite, "nonzero composite");
  o.require(e.positions.size() == 4, "expected four positions");
  o.require(e.exact(), "not exact");
  const ProjectivityReport p = check_projectivity();
  o.require(p.modules.size() == 3 && p.all_projective(), "missing projectivity certificate");
  const auto tor = tor_via_resolution(r).tor;
  o.require(tor == oracle::sphere(2, 3), "Tor = " + join(tor, 3));
  const auto bp = homology_of_complex(normalized_chains(nerve(make_monoid_P(), 5)));
  for (std::size_t k = 0; k < 3; ++k) o.require(tor[k] == bp[k], "Tor differs from nerve in degree " + std::to_string(k));
  if (o.ok) o.detail = "exact at 4 positions, 3 certificates, Tor = " + join(tor, 3);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const FiniteMonoid p = make_monoid_P();
  o.require(triviality_certified(universal_group_of_table(p)), "UP not certified trivial");
  for (std::size_t k = 1; k <= 4; ++k)
    o.require(triviality_certified(universal_group_of_free_product(k, p)),
              "UM_" + std::to_string(k) + " not certified trivial");
  if (o.ok) o.detail = "UP and UM_1..UM_4 trivial, certificates replayed";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto v = verify_simplicial_identities(build_M(5));
  o.require(!v, v ? v->describe() : "");
  if (o.ok) o.detail = "levels 0..5, all five families";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const ComponentMonoid c = pi0(build_M(4));
  o.require(c.is_group, "not a group");
  o.require(c.quotient.size() == 1, "pi_0 has " + std::to_string(c.quotient.size()) + " elements");
  if (o.ok) o.detail = "trivial group";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SimplicialSetTrunc d = diagonal(build_S(5, 5));
  const ChainComplex c = normalized_chains(d);
  const auto h = homology_of_complex(c);
  o.require(std::vector<HomologyGroup>(h.begin(), h.begin() + 4) == oracle::sphere(3, 4),
            "got " + join(h, 4));
  if (o.ok)
    o.detail = join(h, 4) + ", " + std::to_string(d.count(5)) + " simplices in degree 5, d_5 is " +
               std::to_string(c.boundary(5).cols()) + " -> " + std::to_string(c.boundary(5).rows());
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::size_t n = 5;
  const FiniteMonoid p = make_monoid_P();
  const SimplicialSetTrunc bp = nerve(p, n), s1 = simplicial_circle(n);
  const SimplicialSetTrunc pair[] = {bp, s1};

  // dd = 0
  std::size_t complexes = 0;
  for (const SimplicialSetTrunc& x :
       {bp, s1, nerve(cyclic_group(2), n), point(n), wedge(pair, n), diagonal(build_S(n, n)),
        diagonal(wedge_levels(s1, n)), truncated_fp_nerve(2, 3, 4)}) {
    o.require(!find_nonzero_composite(normalized_chains(x)), "dd != 0");
    ++complexes;
  }

  // Smith identities
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_sparse(rng, 1 + rng() % 50, 1 + rng() % 50, 0.1, 9);
    const auto problem = oracle::smith_problem(a, smith_normal_form(a, oracle::all_transforms()));
    o.require(!problem, "random matrix " + std::to_string(t) + ": " + problem.value_or(""));
  }

  // suspension shift
  for (const SimplicialSetTrunc* x : {&bp, &s1}) {
    const auto hx = reduced_homology(*x);
    const auto hs = reduced_homology(diagonal(wedge_levels(*x, n)));
    for (std::size_t k = 1; k < n; ++k) o.require(hs[k] == hx[k - 1], "suspension shift");
  }

  // wedge additivity
  {
    const auto hw = reduced_homology(wedge(pair, n));
    const auto ha = reduced_homology(bp), hb = reduced_homology(s1);
    for (std::size_t k = 0; k < hw.size(); ++k)
      o.require(hw[k] == oracle::direct_sum(ha[k], hb[k]), "wedge additivity");
  }

  // free product associativity
  {
    auto factor = std::make_shared<const FiniteMonoid>(p);
    const std::vector<std::shared_ptr<const FiniteMonoid>> f(3, factor);
    auto word = [&] {
      FreeProductElement w;
      for (std::size_t k = rng() % 7; k > 0; --k)
        w = fp_multiply(3, f, w, {{1 + rng() % 3, static_cast<Element>(1 + rng() % 4)}});
      return w;
    };
    for (int t = 0; t < 1000; ++t) {
      const auto a = word(), b = word(), c = word();
      o.require(fp_multiply(3, f, fp_multiply(3, f, a, b), c) ==
                    fp_multiply(3, f, a, fp_multiply(3, f, b, c)),
                "fp_multiply not associative");
    }
  }

  // determinism
  for (Format fmt : {Format::text, Format::json}) {
    std::ostringstream a, b;
    cmd_verify_paper({}, fmt, false, a);
    cmd_verify_paper({}, fmt, false, b);
    o.require(a.str() == b.str(), "verify-paper output differs between runs");
  }
  if (o.ok)
    o.detail = "dd = 0 on " + std::to_string(complexes) +
               " complexes, 100 Smith forms, suspension, wedge, 1000 triples, determinism";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto v = verify_simplicial_identities(build_M(5, Codiagonal::shifted));
  o.require(v.has_value(), "shifted codiagonal passed the identity check");
  o.require(v && !v->witness.empty(), "no witness");

  auto maps = build_lemma_resolution().maps();
  maps[1].matrix = SparseIntMatrix(maps[1].matrix.rows(), maps[1].matrix.cols());
  const ExactnessReport e = check_exactness(maps);
  const PositionReport* f = e.first_failure();
  o.require(f != nullptr, "zero beta passed exactness");
  o.require(f && f->module == "Z[P]", "wrong failing position");
  o.require(f && f->defect == HomologyGroup::free(1), "wrong defect");
  if (o.ok)
    o.detail = "identities: " + v->describe() + "; exactness: " + f->module + " defect " +
               to_string(f->defect);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"verify-paper end to end", criterion1},
      {"homology of BP is (Z, 0, Z, 0)", criterion2},
      {"resolution, projectivity and Tor", criterion3},
      {"UP and UM_k are trivial", criterion4},
      {"simplicial identities of M up to level 5", criterion5},
      {"pi_0 of M is the trivial group", criterion6},
      {"diagonal of S has homology (Z, 0, 0, Z)", criterion7},
      {"property suites", criterion8},
      {"negative controls", criterion9},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  "
              << criteria[k].first << " [" << o.detail << "] (" << secs << "s)\n";
  }
  return all ? 0 : 1;
}
