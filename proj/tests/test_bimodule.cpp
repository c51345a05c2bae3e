#include "helpers.hpp"

using namespace nagata;
using nagata::corpus::godel3;
using nagata::corpus::lukasiewicz3;

TEST_CASE("division turns a residuated lattice into a cyclic bimodule") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    REQUIRE_PASSES(check_bimodule(m, BimoduleLevel::Cyclic));
    REQUIRE(bimodule_is_cyclic(m));
  }
}

TEST_CASE("frozen division actions over the godel chain") {
  const Bimodule m = division_bimodule(godel3(), 0);

  // The module carries the reversed order.
  REQUIRE(m.module.le(2, 0));
  REQUIRE_FALSE(m.module.le(0, 2));
  REQUIRE(m.moduleJoin == *godel3().base.meet);

  // Left action is division on the right: a * x = x / a.
  REQUIRE(m.lact[2][1] == 1);
  REQUIRE(m.lact[1][0] == 0);
  REQUIRE(m.lact[0][0] == 2);
  // Commutative algebra: the two actions agree, ract[x][a] = lact[a][x].
  for (int a = 0; a < 3; ++a)
    for (int x = 0; x < 3; ++x) REQUIRE(m.ract[x][a] == m.lact[a][x]);
}

TEST_CASE("action residuals are recomputed from the actions alone") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    REQUIRE(m.residuals.has_value());
    const auto computed = compute_action_residuals(m);
    REQUIRE(computed.has_value());
    REQUIRE(*computed == *m.residuals);
  }
}

TEST_CASE("a tampered module join is caught at the lub axiom") {
  Bimodule m = division_bimodule(godel3(), 0);
  m.moduleJoin[0][1] = (m.moduleJoin[0][1] + 1) % m.moduleCount();
  REQUIRE_FAILS_WITH(check_bimodule(m, BimoduleLevel::Cyclic), "bimodule.module-join");
}

TEST_CASE("a tampered action is caught by associativity or isotonicity") {
  Bimodule m = division_bimodule(lukasiewicz3(), 0);
  m.lact[1][0] = 0;  // was 1; breaks (h.h)*0 = h*(h*0)
  const CheckReport r = check_bimodule(m, BimoduleLevel::Bimodule);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.axiom.rfind("bimodule.", 0) == 0);
  REQUIRE_FALSE(r.witness.empty());
}

TEST_CASE("module bounds act as zeros and recover the scalar top") {
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    INFO(name);
    REQUIRE_PASSES(check_top_bottom_consequences(m));
  }
}

TEST_CASE("level parsing round trips") {
  REQUIRE(bimodule_level_from("cyclic") == std::optional<BimoduleLevel>(BimoduleLevel::Cyclic));
  REQUIRE(bimodule_level_from("biaction") ==
          std::optional<BimoduleLevel>(BimoduleLevel::Biaction));
  REQUIRE_FALSE(bimodule_level_from("nonsense").has_value());
  for (BimoduleLevel l : {BimoduleLevel::Biaction, BimoduleLevel::Bimodule,
                          BimoduleLevel::Residuated, BimoduleLevel::Unital,
                          BimoduleLevel::Cyclic})
    REQUIRE(bimodule_level_from(bimodule_level_name(l)) == std::optional<BimoduleLevel>(l));
}
