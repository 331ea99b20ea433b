#include <doctest.h>

#include <sstream>

#include "simpmon/error.hpp"
#include "simpmon/presentation.hpp"

using namespace simpmon;

namespace {

GroupPresentation parse(const std::string& text) {
  std::istringstream is(text);
  return parse_presentation(is);
}

}  // namespace

TEST_CASE("free reduction") {
  const GroupWord w{{0, false}, {1, false}, {1, true}, {0, true}, {2, false}};
  CHECK(free_reduce(w) == GroupWord{{2, false}});
  CHECK(inverse_word({{0, false}, {1, true}}) == GroupWord{{1, false}, {0, true}});
}

TEST_CASE("presentation text format") {
  const GroupPresentation p = parse("gens: a b\nrel: a a\nrel: a b a^-1 b^-1\nrel: b b^-1\n");
  CHECK(p.generators().size() == 2);
  CHECK(p.relators().size() == 2);  // b b^-1 reduces to nothing
  std::stringstream ss;
  write_presentation(ss, p);
  CHECK(parse_presentation(ss) == p);
  CHECK_THROWS_AS(parse("rel: a\n"), parse_error);
  CHECK_THROWS_AS(parse("gens: a\nrel: c\n"), input_error);
  CHECK_THROWS_AS(GroupPresentation({"a", "a"}, {}), input_error);
}

TEST_CASE("abelianization of finite groups") {
  CHECK(to_string(abelianization(universal_group_of_table(cyclic_group(2)))) == "Z/2");
  CHECK(to_string(abelianization(universal_group_of_table(cyclic_group(3)))) == "Z/3");
  CHECK(to_string(abelianization(
            universal_group_of_table(direct_product(cyclic_group(2), cyclic_group(2))))) ==
        "Z/2 + Z/2");
  CHECK(abelianization(universal_group_of_table(make_monoid_P())).is_trivial());
  CHECK(to_string(abelianization(parse("gens: a b\n"))) == "Z^2");
}

TEST_CASE("universal group of the five element monoid is trivial") {
  const GroupPresentation up = universal_group_of_table(make_monoid_P());
  CHECK(up.generators().size() == 4);
  const Simplification s = simplify(up);
  CHECK(s.verdict.status == Triviality::trivial_certified);
  CHECK(s.presentation.generators().empty());
  CHECK_FALSE(replay_failure(up, s.verdict));
  CHECK(s.verdict.log.front().rule == RewriteRule::idempotent_collapse);
}

TEST_CASE("free products of copies stay trivial") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const GroupPresentation um = universal_group_of_free_product(k, make_monoid_P());
    CHECK(um.generators().size() == 4 * k);
    const Simplification s = simplify(um);
    CHECK(s.verdict.status == Triviality::trivial_certified);
    CHECK_FALSE(replay_failure(um, s.verdict));
  }
}

TEST_CASE("nontrivial groups are certified nontrivial") {
  const GroupPresentation z2 = universal_group_of_table(cyclic_group(2));
  const Simplification s = simplify(z2);
  CHECK(s.verdict.status == Triviality::nontrivial_certified);
  CHECK(to_string(s.verdict.abelian) == "Z/2");
  CHECK_FALSE(replay_failure(z2, s.verdict));

  CHECK(simplify(universal_group_of_table(trivial_monoid())).verdict.status ==
        Triviality::trivial_certified);
}

TEST_CASE("rewrite rules") {
  // Conjugate of a single letter kills it.
  auto s = simplify(parse("gens: a b\nrel: b a b^-1\n"));
  REQUIRE(!s.verdict.log.empty());
  CHECK(s.verdict.log[0].rule == RewriteRule::unit_elimination);
  CHECK(s.presentation.generators() == std::vector<std::string>{"b"});

  // a = b^2, then b^5 = 1 remains.
  s = simplify(parse("gens: a b\nrel: a b^-1 b^-1\nrel: a a b\n"));
  CHECK(s.verdict.log[0].rule == RewriteRule::tietze_substitution);
  CHECK(s.presentation.generators() == std::vector<std::string>{"b"});
  CHECK(to_string(s.verdict.abelian) == "Z/5");

  s = simplify(parse("gens: a b\nrel: a b a b\nrel: a b a b\n"));
  CHECK(s.verdict.status == Triviality::nontrivial_certified);
}

TEST_CASE("certificates are checked on replay") {
  const GroupPresentation p = parse("gens: a b\nrel: a\nrel: a b a b\n");
  RewriteStep forged{RewriteRule::idempotent_collapse, 1, "b", {}};
  CHECK_THROWS_AS(apply_step(p, forged), input_error);
  TrivialityVerdict fake;
  fake.status = Triviality::trivial_certified;
  fake.log = {RewriteStep{RewriteRule::idempotent_collapse, 0, "a", {}}};
  CHECK(replay_failure(p, fake));
  fake.log.push_back(forged);
  CHECK(replay_failure(p, fake));
}

TEST_CASE("disjoint union") {
  const auto u = disjoint_union(universal_group_of_table(cyclic_group(2)), "x",
                                universal_group_of_table(cyclic_group(3)), "y");
  CHECK(u.generators().size() == 3);
  CHECK(to_string(abelianization(u)) == "Z/6");
}
