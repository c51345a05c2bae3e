#include <algorithm>

#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::chain_brouwerian;
using nagata::corpus::godel3;
using nagata::corpus::lukasiewicz3;

namespace {

Bimodule c2_bimodule() {
  return division_bimodule(residuated_of_brouwerian(chain_brouwerian(2, 0)), 0);
}

}  // namespace

TEST_CASE("the full product carrier covers every pair") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const NagataProduct p = nagata_product(m);
    REQUIRE(p.ctx.size() == m.scalarCount() * m.moduleCount());
    REQUIRE(p.lres.has_value());
    REQUIRE(p.rres.has_value());
    REQUIRE_PASSES(check_residuated_ell_semigroup(
        ResiduatedStructure{p.carrier, *p.lres, *p.rres, std::nullopt}));
  }
}

TEST_CASE("the full product keeps its monoid unit and recovery constant apart") {
  const StructuredProduct p = full_nagata_structure(division_bimodule(godel3(), 0));
  const NagataStructure& n = p.algebra;

  // Module bottom (base top) is an action zero, so the monoid unit exists.
  REQUIRE(n.carrier.unit.has_value());
  REQUIRE(*n.carrier.unit == p.ctx.indexOf(2, 2));

  // The lattice axioms use the sigma-fixed element (1, 1*0) instead.
  REQUIRE(n.one.has_value());
  REQUIRE(*n.one == p.ctx.indexOf(2, 0));
  REQUIRE(*n.one != *n.carrier.unit);
  REQUIRE(n.sigma(*n.one) == *n.one);
  REQUIRE(n.sigma(*n.carrier.unit) == *n.one);

  // The residual interchange law sigma(x \ gamma y) = sigma(gamma x \ gamma y)
  // holds on every restricted universe but not on the full square: at
  // x = (m, m), y = (0, m) the left side is (0, 1) and the right side (1, 0).
  const CheckReport interchange = check_nagata_posemigroup(n, false);
  REQUIRE_FALSE(interchange.passed);
  REQUIRE(interchange.axiom == "nagata.posemigroup.sigma-gres-l");

  REQUIRE_PASSES(check_nagata_lattice(n, false));
  REQUIRE(n.oplus.has_value());
  REQUIRE(n.otimes.has_value());
  REQUIRE_PASSES(check_bilattice_sesquilattice(n, TruthOrderVariant::Bilattice));
}

TEST_CASE("frozen restricted universes") {
  using P = std::vector<std::pair<int, int>>;

  const auto c2 = restricted_nagata_product(c2_bimodule());
  REQUIRE(c2.ctx.pairs == P{{0, 0}, {0, 1}, {1, 0}});

  const auto g = restricted_nagata_product(division_bimodule(godel3(), 0));
  REQUIRE(g.ctx.pairs == P{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});

  const auto l = restricted_nagata_product(division_bimodule(lukasiewicz3(), 0));
  REQUIRE(l.ctx.pairs == P{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("frozen recovery maps over the godel chain") {
  const auto p = restricted_nagata_product(division_bimodule(godel3(), 0));
  const NagataStructure& n = p.algebra;

  REQUIRE(n.sigma.table == std::vector<int>{2, 2, 2, 3, 4});
  REQUIRE(n.gamma.table == std::vector<int>{4, 1, 2, 4, 4});
  REQUIRE(n.point == 4);
  REQUIRE(n.carrier.unit == std::optional<int>(4));

  // Multiplication mixes scalar meet with residual joins.
  REQUIRE(n.carrier.mul[1][3] == 2);
  REQUIRE(n.carrier.mul[3][1] == 2);
  REQUIRE(n.carrier.mul[3][3] == 3);

  REQUIRE(classify_operator(n.carrier.poset, n.sigma) == OperatorKind::Interior);
  REQUIRE(classify_operator(n.carrier.poset, n.gamma) == OperatorKind::Closure);
}

TEST_CASE("the two element chain product multiplies as frozen") {
  const auto p = restricted_nagata_product(c2_bimodule());
  REQUIRE(p.algebra.carrier.unit == std::optional<int>(2));
  REQUIRE(p.algebra.carrier.mul[2][1] == 1);
  REQUIRE(p.algebra.carrier.mul[1][2] == 1);
}

TEST_CASE("restricted products satisfy both nagata suites") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const auto p = restricted_nagata_product(m);
    REQUIRE_PASSES(check_nagata_posemigroup(p.algebra, true));
    REQUIRE_PASSES(check_nagata_lattice(p.algebra, true));
    REQUIRE_PASSES(check_bilattice_sesquilattice(p.algebra, TruthOrderVariant::Sesquilattice));
  }
}

TEST_CASE("the restricted universe is the double division image") {
  const Bimodule m = division_bimodule(godel3(), 0);
  const NagataProduct full = nagata_product(m);
  const auto restricted = restricted_nagata_product(m);

  const ResiduatedStructure rs{full.carrier, *full.lres, *full.rres, std::nullopt};
  const int p = full.ctx.indexOf(*m.scalars.unit, *m.point);
  const std::vector<int> image = double_division_image(rs, p);
  REQUIRE(image == std::vector<int>{0, 1, 2, 3, 6});

  std::vector<int> members;
  for (const auto& [a, x] : restricted.ctx.pairs) members.push_back(full.ctx.indexOf(a, x));
  std::sort(members.begin(), members.end());
  REQUIRE(image == members);
}

TEST_CASE("double division requires a positive element") {
  const Bimodule m = division_bimodule(godel3(), 0);
  const NagataProduct full = nagata_product(m);
  const ResiduatedStructure rs{full.carrier, *full.lres, *full.rres, std::nullopt};
  // (0, bottom-of-module) sits below the unit.
  REQUIRE_THROWS_AS(double_division_image(rs, full.ctx.indexOf(0, 2)), Error);
}

TEST_CASE("every element splits as sigma join gamma in the truth order") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const auto p = restricted_nagata_product(m);
    const NagataStructure& n = p.algebra;
    REQUIRE(n.oplus.has_value());
    for (int i = 0; i < n.size(); ++i)
      REQUIRE((*n.oplus)[n.sigma(i)][n.gamma(i)] == i);
    REQUIRE_PASSES(check_unit_surjectivity(n, true));
  }
}

TEST_CASE("the unit map embeds the product into the comparison target") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const auto p = restricted_nagata_product(m);
    const UnitMapResult u = unit_map(p.algebra, true);
    REQUIRE(static_cast<int>(u.map.size()) == p.algebra.size());
    REQUIRE_PASSES(u.report);
  }
}

TEST_CASE("counit and action recovery reconstruct the bimodule") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    REQUIRE_PASSES(verify_counit(m));
    REQUIRE_PASSES(verify_action_recovery(m, true));
    REQUIRE_PASSES(verify_triangle_product(m));
  }
}

TEST_CASE("triangle identities hold on the product side") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const auto p = restricted_nagata_product(m);
    REQUIRE_PASSES(verify_triangle_bimodule(p.algebra, true));
  }
}

TEST_CASE("the structural bimodule of a product is the original bimodule") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    const auto p = restricted_nagata_product(m);
    const StructuralBimodule f = structural_bimodule(p.algebra);
    REQUIRE(isomorphic(view_of(f.bimodule), view_of(m)));
  }
}

TEST_CASE("a damaged sigma fails idempotence with a witness") {
  auto p = restricted_nagata_product(division_bimodule(lukasiewicz3(), 0));
  NagataStructure n = p.algebra;
  // Redirect a non-fixed element onto another non-fixed element.
  n.sigma.table[0] = 1;
  REQUIRE_FAILS_WITH(check_nagata_posemigroup(n, true), "nagata.sigma.idempotent");
}
