#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::chain_brouwerian;
using nagata::corpus::collapsing_pair;
using nagata::corpus::godel3;

namespace {

TwistablePair c2_pair() {
  return identity_pair(residuated_of_brouwerian(chain_brouwerian(2, 0)));
}

}  // namespace

TEST_CASE("the corpus pairs satisfy the twistable axioms") {
  for (const auto& [name, t] : corpus::pair_corpus()) {
    INFO(name);
    REQUIRE_PASSES(check_twistable_pair(t, TwistLevel::ResiduatedLattice));
  }
}

TEST_CASE("twist level parsing round trips") {
  REQUIRE(twist_level_from("posemigroup") ==
          std::optional<TwistLevel>(TwistLevel::Posemigroup));
  REQUIRE(twist_level_from("residuated-lattice") ==
          std::optional<TwistLevel>(TwistLevel::ResiduatedLattice));
  REQUIRE_FALSE(twist_level_from("lattice").has_value());
}

TEST_CASE("a broken retraction is caught") {
  TwistablePair t = c2_pair();
  t.lam = {0, 0};
  t.rho = {1, 1};
  // Both maps stay isotone homomorphisms, so the retraction fires first.
  REQUIRE_FAILS_WITH(check_twistable_pair(t, TwistLevel::Posemigroup), "twist.retraction");
}

TEST_CASE("frozen negation tables on small twist products") {
  const auto p = restricted_twist_product(c2_pair());
  using P = std::vector<std::pair<int, int>>;
  REQUIRE(p.ctx.pairs == P{{0, 0}, {0, 1}, {1, 0}});
  REQUIRE(p.algebra.negation.has_value());
  REQUIRE(p.algebra.negation->table == std::vector<int>{0, 2, 1});
  REQUIRE(negation_is_involutive(p.algebra));

  const auto q = restricted_twist_product(collapsing_pair());
  REQUIRE(q.ctx.pairs == P{{0, 0}, {0, 1}, {1, 0}, {2, 0}});
  REQUIRE(q.algebra.negation->table == std::vector<int>{0, 3, 1, 1});
  REQUIRE_FALSE(negation_is_involutive(q.algebra));
}

TEST_CASE("strong negation holds on every corpus twist product") {
  for (const auto& [name, t] : corpus::pair_corpus()) {
    INFO(name);
    const auto p = restricted_twist_product(t);
    REQUIRE_PASSES(check_strong_negation(p.algebra));
    if (p.algebra.lres && p.algebra.rres)
      REQUIRE_PASSES(check_strong_negation_residuated(p.algebra));
    REQUIRE_PASSES(verify_negation_unit_map(p.algebra, true));
  }
}

TEST_CASE("involutivity of the product matches the pair collapse") {
  for (const auto& [name, t] : corpus::pair_corpus()) {
    INFO(name);
    REQUIRE_PASSES(check_involutive_collapse(t));
  }
}

TEST_CASE("untwisting a twist product recovers the pair") {
  for (const auto& [name, t] : corpus::pair_corpus()) {
    INFO(name);
    const auto p = restricted_twist_product(t);
    const TwistablePair u = untwist(p.algebra);
    REQUIRE_PASSES(check_twistable_pair(u, TwistLevel::Posemigroup));
    REQUIRE(isomorphic(view_of(u), view_of(t)));
  }
}

TEST_CASE("the counit laws hold for every corpus pair") {
  for (const auto& [name, t] : corpus::pair_corpus()) {
    INFO(name);
    REQUIRE_PASSES(verify_twist_counit(t));
  }
}

TEST_CASE("the collapsing pair genuinely collapses information") {
  const TwistablePair t = collapsing_pair();
  // lam identifies the two upper elements; rho picks the top back.
  REQUIRE(t.lam == std::vector<int>{0, 1, 1});
  REQUIRE(t.rho == std::vector<int>{0, 2});
  REQUIRE(t.lam[t.rho[1]] == 1);
  // rho(lam(m)) lands on the top, so the pair is not involutive.
  REQUIRE(t.rho[t.lam[1]] == 2);
}

TEST_CASE("the induced bimodule of an identity pair is the division bimodule") {
  const ResiduatedStructure g = godel3();
  const Bimodule viaPair = induced_bimodule(identity_pair(g));
  const Bimodule direct = division_bimodule(g, g.point);
  REQUIRE(viaPair.lact == direct.lact);
  REQUIRE(viaPair.ract == direct.ract);
  REQUIRE(viaPair.module.leq == direct.module.leq);
  REQUIRE(viaPair.moduleJoin == direct.moduleJoin);
  REQUIRE(viaPair.point == direct.point);
}
