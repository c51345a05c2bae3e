#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::boolean_brouwerian;
using nagata::corpus::chain_brouwerian;
using nagata::corpus::godel3;
using nagata::corpus::lukasiewicz3;

TEST_CASE("associativity failures are caught with a witness") {
  Posemigroup s;
  s.poset = Poset::antichain(2);
  s.mul = {{1, 0}, {0, 0}};
  REQUIRE_FAILS_WITH(check_posemigroup(s), "posemigroup.associativity");
}

TEST_CASE("residual tables are recomputed from the order alone") {
  for (const auto& [name, r] : corpus::residuated_corpus()) {
    INFO(name);
    const auto computed = compute_residuals(r.base);
    REQUIRE(computed.has_value());
    REQUIRE(computed->lres == r.lres);
    REQUIRE(computed->rres == r.rres);
  }
}

TEST_CASE("frozen residual values on the three element chains") {
  const ResiduatedStructure g = godel3();
  // Implication truncates to the consequent below the antecedent.
  REQUIRE(g.lres[2][1] == 1);
  REQUIRE(g.lres[1][0] == 0);
  REQUIRE(g.lres[0][1] == 2);

  const ResiduatedStructure l = lukasiewicz3();
  // Dividing the middle element into bottom gives the middle element back.
  REQUIRE(l.lres[1][0] == 1);
  REQUIRE(l.lres[2][0] == 0);
  REQUIRE(l.lres[2][1] == 1);
  REQUIRE(l.lres[0][2] == 2);

  const auto computed = compute_residuals(l.base);
  REQUIRE(computed.has_value());
  REQUIRE(computed->lres == l.lres);
}

TEST_CASE("the corpus residuated structures pass the lattice suite") {
  for (const auto& [name, r] : corpus::residuated_corpus()) {
    INFO(name);
    REQUIRE_PASSES(check_residuated_lattice(r));
  }
}

TEST_CASE("a tampered residual fails the residuation law") {
  ResiduatedStructure r = godel3();
  r.lres[1][0] = 1;
  REQUIRE_FAILS_WITH(check_residuated_ell_semigroup(r), "residuated.residuation");
}

TEST_CASE("a posemigroup without a unit fails the lattice level only") {
  ResiduatedStructure r = godel3();
  r.base.unit.reset();
  REQUIRE_PASSES(check_residuated_ell_semigroup(r));
  REQUIRE_THROWS_AS(check_residuated_lattice(r), Error);
}

TEST_CASE("brouwerian suites accept chains and powersets") {
  REQUIRE_PASSES(check_brouwerian(chain_brouwerian(1, 0)));
  REQUIRE_PASSES(check_brouwerian(chain_brouwerian(4, 0)));
  REQUIRE_PASSES(check_brouwerian(boolean_brouwerian(2, 0)));
  REQUIRE_PASSES(check_brouwerian(boolean_brouwerian(3, 0)));

  // In a powerset, implication is complement-or.
  const BrouwerianAlgebra b = boolean_brouwerian(2, 0);
  REQUIRE(b.imp[1][2] == 2);
  REQUIRE(b.imp[3][1] == 1);
  REQUIRE(b.imp[1][1] == 3);
}

TEST_CASE("boolean points are recognized elementwise") {
  // On the three element chain the middle element and the top qualify, the
  // bottom does not.
  REQUIRE_PASSES(check_boolean_pointed(chain_brouwerian(3, 1)));
  REQUIRE_PASSES(check_boolean_pointed(chain_brouwerian(3, 2)));
  REQUIRE_FAILS_WITH(check_boolean_pointed(chain_brouwerian(3, 0)),
                     "brouwerian.boolean-point");

  REQUIRE_PASSES(check_boolean_pointed(chain_brouwerian(2, 0)));
  REQUIRE_PASSES(check_boolean_pointed(chain_brouwerian(2, 1)));
  REQUIRE_PASSES(check_boolean_pointed(boolean_brouwerian(2, 0)));
}

TEST_CASE("the brouwerian and residuated views invert each other") {
  const BrouwerianAlgebra b = chain_brouwerian(3, 0, {"0", "m", "1"});
  const ResiduatedStructure r = residuated_of_brouwerian(b);
  REQUIRE(r.base.mul == b.meet);
  REQUIRE(r.base.unit == std::optional<int>(b.top));
  REQUIRE(brouwerian_of_residuated(r) == b);

  const BrouwerianAlgebra p = boolean_brouwerian(2, 0);
  REQUIRE(brouwerian_of_residuated(residuated_of_brouwerian(p)) == p);

  // The view refuses structures whose product is not the meet.
  REQUIRE_THROWS_AS(brouwerian_of_residuated(lukasiewicz3()), Error);
}
