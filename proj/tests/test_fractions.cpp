#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::boolean_brouwerian;
using nagata::corpus::chain_brouwerian;

TEST_CASE("the derived addition specializes to join and meet at the bounds") {
  // Point at the bottom: addition is join.
  const BrouwerianAlgebra lo = chain_brouwerian(2, 0);
  const Bimonoid bLo = brouwerian_bimonoid(lo);
  REQUIRE(bLo.add == lo.join);
  REQUIRE(bLo.addUnit == 0);
  REQUIRE(bLo.mul == lo.meet);
  REQUIRE(bLo.mulUnit == lo.top);

  // Point at the top: addition is meet.
  const BrouwerianAlgebra hi = chain_brouwerian(2, 1);
  const Bimonoid bHi = brouwerian_bimonoid(hi);
  REQUIRE(bHi.add == hi.meet);
  REQUIRE(bHi.addUnit == 1);

  // The same collapses on any powerset pointed at a bound.
  const BrouwerianAlgebra b4 = boolean_brouwerian(2, 0);
  REQUIRE(brouwerian_bimonoid(b4).add == b4.join);
}

TEST_CASE("frozen addition on the three element chain pointed in the middle") {
  const Bimonoid b = brouwerian_bimonoid(chain_brouwerian(3, 1));
  REQUIRE(b.addUnit == 1);
  REQUIRE(b.add[1][2] == 2);
  REQUIRE(b.add[0][0] == 0);
  REQUIRE(b.add[0][2] == 0);
  REQUIRE(b.add[2][0] == 0);
  REQUIRE_PASSES(check_bimonoid(b));
}

TEST_CASE("the lemma suite covers every corpus algebra") {
  for (const auto& [name, b] : corpus::brouwerian_corpus()) {
    INFO(name);
    REQUIRE_PASSES(brouwerian_lemma_suite(b));
  }
  REQUIRE_PASSES(brouwerian_lemma_suite(boolean_brouwerian(3, 0)));
}

TEST_CASE("complements in a powerset bimonoid are boolean complements") {
  const Bimonoid b = brouwerian_bimonoid(boolean_brouwerian(2, 0));
  REQUIRE(complement_of(b, 0) == std::optional<int>(3));
  REQUIRE(complement_of(b, 1) == std::optional<int>(2));
  REQUIRE(complement_of(b, 2) == std::optional<int>(1));
  REQUIRE(complement_of(b, 3) == std::optional<int>(0));
  REQUIRE_PASSES(check_complemented(b));
  REQUIRE_PASSES(check_term_equivalence(b));
}

TEST_CASE("a chain pointed off the bounds is not complemented") {
  const Bimonoid b = brouwerian_bimonoid(chain_brouwerian(3, 1));
  REQUIRE_FALSE(complement_of(b, 0).has_value());
  REQUIRE_FALSE(check_complemented(b).passed);
}

TEST_CASE("frozen fractions of the two element chain") {
  const FractionsResult f = bimonoid_of_fractions(chain_brouwerian(2, 0));

  REQUIRE(f.fractions.size() == 2);
  // The base embeds elementwise: 0 to (0,1), 1 to (1,0).
  const int p01 = f.positionOf(f.twist.ctx.indexOf(0, 1));
  const int p10 = f.positionOf(f.twist.ctx.indexOf(1, 0));
  REQUIRE(p01 != kAbsent);
  REQUIRE(p10 != kAbsent);
  REQUIRE(f.iota == std::vector<int>{p01, p10});
  REQUIRE(f.complement[p01] == p10);
  REQUIRE(f.complement[p10] == p01);

  REQUIRE_PASSES(check_bimonoid(f.fractions));
  REQUIRE_PASSES(check_complemented(f.fractions));
  REQUIRE_PASSES(check_term_equivalence(f.fractions));
  REQUIRE_PASSES(verify_fraction_representation(f));
  REQUIRE_PASSES(verify_fraction_embedding(f));
}

TEST_CASE("the fractions pipeline accepts every boolean-pointed corpus algebra") {
  for (const auto& [name, b] : corpus::brouwerian_corpus()) {
    if (!b.point || !check_boolean_pointed(b).passed) continue;
    INFO(name);
    REQUIRE_PASSES(check_fractions_pipeline(bimonoid_of_fractions(b)));
  }
  REQUIRE_PASSES(check_fractions_pipeline(bimonoid_of_fractions(chain_brouwerian(2, 1))));
  REQUIRE_PASSES(check_fractions_pipeline(bimonoid_of_fractions(chain_brouwerian(3, 1))));
}

TEST_CASE("fractions refuse a point that is not boolean") {
  bool threw = false;
  try {
    bimonoid_of_fractions(chain_brouwerian(3, 0));
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::NotBooleanPointed);
  }
  REQUIRE(threw);
}

TEST_CASE("a linking failure is caught after both monoid suites") {
  Bimonoid b;
  b.poset = Poset::chain(2);
  b.mul = {{0, 0}, {0, 1}};
  b.mulUnit = 1;
  b.add = {{0, 1}, {1, 1}};
  b.addUnit = 0;
  REQUIRE_PASSES(check_bimonoid(b));

  // Swap the roles: mul = join with unit at the bottom breaks linking.
  Bimonoid bad;
  bad.poset = Poset::chain(2);
  bad.mul = {{0, 1}, {1, 1}};
  bad.mulUnit = 0;
  bad.add = {{0, 0}, {0, 1}};
  bad.addUnit = 1;
  REQUIRE_FAILS_WITH(check_bimonoid(bad), "bimonoid.linking");
}
