#include <doctest.h>

#include <sstream>

#include "simpmon/chain_complex.hpp"
#include "simpmon/error.hpp"
#include "simpmon/homology.hpp"
#include "simpmon/simplicial_set.hpp"
#include "support.hpp"

using namespace simpmon;

namespace {

// RP^2 as a cell complex: one cell per degree, d_2 = 2.
ChainComplex rp2() {
  return ChainComplex({1, 1, 1}, {SparseIntMatrix(1, 1), SparseIntMatrix::from_dense({{2}})}, false);
}

ChainComplex from_oracle(const oracle::NerveChains& n) {
  std::vector<SparseIntMatrix> b;
  for (std::size_t k = 1; k < n.bounds.size(); ++k) {
    std::vector<std::vector<long>> d;
    for (const auto& row : n.bounds[k]) {
      std::vector<long> r;
      for (const auto& x : row) r.push_back(x.get_si());
      d.push_back(std::move(r));
    }
    b.push_back(d.empty() ? SparseIntMatrix(0, n.ranks[k]) : SparseIntMatrix::from_dense(d));
  }
  return ChainComplex(n.ranks, std::move(b), true);
}

}  // namespace

TEST_CASE("group rendering") {
  CHECK(to_string(HomologyGroup{}) == "0");
  CHECK(to_string(HomologyGroup::free(1)) == "Z");
  CHECK(to_string(HomologyGroup{2, {2}}) == "Z^2 + Z/2");
  CHECK(to_string(HomologyGroup{0, {2, 4}}) == "Z/2 + Z/4");
}

TEST_CASE("cell complexes") {
  const auto h = homology_of_complex(rp2());
  REQUIRE(h.size() == 3);
  CHECK(h[0] == HomologyGroup::free(1));
  CHECK(h[1] == HomologyGroup{0, {2}});
  CHECK(h[2].is_zero());
  CHECK(euler_characteristic(rp2()).consistent());
  CHECK(euler_characteristic(rp2()).chain_side == 1);

  const ChainComplex empty({0}, {}, false);
  CHECK(homology_of_complex(empty, 0).is_zero());
}

TEST_CASE("truncated complexes withhold the top degree") {
  const ChainComplex c({1, 1, 1}, {SparseIntMatrix(1, 1), SparseIntMatrix::from_dense({{2}})}, true);
  CHECK(c.last_reliable_degree() == 1);
  CHECK(homology_of_complex(c).size() == 2);
  CHECK_THROWS(homology_of_complex(c, 2));
  CHECK_FALSE(ChainComplex({3}, {}, true).last_reliable_degree());
}

TEST_CASE("nonzero composites are reported") {
  const ChainComplex c({1, 1, 1}, {SparseIntMatrix::from_dense({{1}}), SparseIntMatrix::from_dense({{1}})},
                       false);
  CHECK(find_nonzero_composite(c) == 2);
  CHECK_FALSE(find_nonzero_composite(rp2()));
}

TEST_CASE("chain complex text round trip") {
  std::stringstream ss;
  write_chain_complex(ss, rp2());
  const ChainComplex back = read_chain_complex(ss, true);
  CHECK(back.ranks() == rp2().ranks());
  CHECK(back.boundary(2) == rp2().boundary(2));
  CHECK_FALSE(back.truncated());

  std::istringstream bad("dim 0: 1\ndim 1: 1\n1 0 3 1\n");
  CHECK_THROWS_AS(read_chain_complex(bad), input_error);
  std::istringstream junk("dim zero\n");
  CHECK_THROWS_AS(read_chain_complex(junk), parse_error);
}

TEST_CASE("nerve homology matches the dense oracle") {
  struct Case {
    FiniteMonoid m;
    std::size_t n;
  };
  for (const auto& [m, n] : {Case{make_monoid_P(), 4}, Case{cyclic_group(2), 5},
                             Case{cyclic_group(3), 4}, Case{trivial_monoid(), 4},
                             Case{direct_product(cyclic_group(2), cyclic_group(2)), 4}}) {
    CAPTURE(m.name());
    const auto o = oracle::nerve_chains(m, n);
    const ChainComplex c = normalized_chains(nerve(m, n));
    REQUIRE(c.ranks() == o.ranks);
    CHECK_FALSE(find_nonzero_composite(c));
    const auto h = homology_of_complex(c);
    CHECK(h == oracle::dense_homology(o.ranks, o.bounds, n));
    CHECK(h == homology_of_complex(from_oracle(o)));
    CHECK(h == homology_of_complex(c, Exec::serial));
    CHECK(euler_characteristic(c).consistent());
  }
}

TEST_CASE("known nerve homology") {
  const auto z2 = homology_of_complex(normalized_chains(nerve(cyclic_group(2), 5)));
  CHECK(z2 == std::vector<HomologyGroup>{HomologyGroup::free(1), {0, {2}}, {}, {0, {2}}, {}});
  const auto z3 = homology_of_complex(normalized_chains(nerve(cyclic_group(3), 4)));
  CHECK(z3 == std::vector<HomologyGroup>{HomologyGroup::free(1), {0, {3}}, {}, {0, {3}}});
  const auto klein = homology_of_complex(
      normalized_chains(nerve(direct_product(cyclic_group(2), cyclic_group(2)), 3)));
  CHECK(klein == std::vector<HomologyGroup>{HomologyGroup::free(1), {0, {2, 2}}, {0, {2}}});
  const auto p = homology_of_complex(normalized_chains(nerve(make_monoid_P(), 5)));
  CHECK(p == oracle::sphere(2, 5));
}

TEST_CASE("reduced homology") {
  const auto r = reduced(oracle::sphere(2, 3));
  CHECK(r[0].is_zero());
  CHECK(r[2] == HomologyGroup::free(1));
  CHECK_THROWS(reduced({HomologyGroup{}}));
}
