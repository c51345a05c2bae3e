#include <cstdlib>

#include "helpers.hpp"

using namespace nagata;

TEST_CASE("poset counts match the published census") {
  const std::vector<int> upToIso{1, 2, 5, 16};
  for (int n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    const auto ps = enumerate_posets(n);
    REQUIRE(static_cast<int>(ps.size()) == upToIso[n - 1]);
    for (const auto& p : ps) REQUIRE_PASSES(check_poset(p));
    // The pairwise-search census is an independent recount.
    REQUIRE(count_posets_by_search(n) == upToIso[n - 1]);
  }

  const std::vector<int> labeled{1, 3, 19, 219};
  for (int n = 1; n <= 4; ++n)
    REQUIRE(static_cast<int>(enumerate_posets(n, false).size()) == labeled[n - 1]);
}

TEST_CASE("enumerated posemigroups are valid and pairwise distinct") {
  const auto ss = enumerate_posemigroups(2);
  REQUIRE_FALSE(ss.empty());
  for (const auto& s : ss) REQUIRE_PASSES(check_posemigroup(s));
  for (size_t i = 0; i < ss.size(); ++i)
    for (size_t j = i + 1; j < ss.size(); ++j)
      REQUIRE_FALSE(isomorphic(view_of(ss[i]), view_of(ss[j])));
  REQUIRE(enumerate_posemigroups(2, false).size() >= ss.size());
}

TEST_CASE("brouwerian algebras per size follow the distributive lattice census") {
  const std::vector<int> counts{1, 1, 1, 2, 3};
  for (int n = 1; n <= 5; ++n) {
    INFO("n = " << n);
    const auto bs = enumerate_brouwerian(n);
    REQUIRE(static_cast<int>(bs.size()) == counts[n - 1]);
    for (const auto& b : bs) REQUIRE_PASSES(check_brouwerian(b));
  }
}

TEST_CASE("boolean-pointed counts for small sizes") {
  // Counts derived by hand: the singleton; both points of the 2-chain; the
  // 3-chain pointed at the middle or the top; five on four elements.
  const std::vector<int> counts{1, 2, 2, 5};
  for (int n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    const auto bs = enumerate_boolean_pointed_brouwerian(n);
    REQUIRE(static_cast<int>(bs.size()) == counts[n - 1]);
    for (const auto& b : bs) {
      REQUIRE(b.point.has_value());
      REQUIRE_PASSES(check_boolean_pointed(b));
    }
  }
  for (const auto& b : enumerate_boolean_pointed_brouwerian(5))
    REQUIRE_PASSES(check_boolean_pointed(b));
}

TEST_CASE("residuated chain counts are stable") {
  const std::vector<int> counts{1, 1, 2, 6};
  for (int n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    const auto cs = enumerate_residuated_chains(n);
    REQUIRE(static_cast<int>(cs.size()) == counts[n - 1]);
    for (const auto& c : cs) REQUIRE_PASSES(check_residuated_lattice(c));
  }
}

TEST_CASE("random structures are deterministic in the seed") {
  const Structure a = random_structure(Kind::Posemigroup, 3, 1);
  const Structure b = random_structure(Kind::Posemigroup, 3, 1);
  REQUIRE(structure_to_json(a).dump() == structure_to_json(b).dump());
  REQUIRE_PASSES(check_structure(a));
}

TEST_CASE("random structures pass their base suites") {
  REQUIRE_PASSES(check_structure(random_structure(Kind::Brouwerian, 4, 7)));
  REQUIRE_PASSES(check_structure(random_structure(Kind::Poset, 5, 11)));
  REQUIRE_PASSES(check_structure(random_structure(Kind::ResiduatedLattice, 4, 2)));
  const Structure m = random_structure(Kind::Bimodule, 2, 3);
  REQUIRE_PASSES(check_structure(m));
}

TEST_CASE("the size bound is enforced and configurable") {
  REQUIRE(max_size_limit() >= 1);
  bool threw = false;
  try {
    enumerate_posets(max_size_limit() + 1);
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::BoundExceeded);
  }
  REQUIRE(threw);

  setenv("NAGATA_MAX_SIZE", "3", 1);
  REQUIRE(max_size_limit() == 3);
  REQUIRE_THROWS_AS(enumerate_posets(4), Error);
  unsetenv("NAGATA_MAX_SIZE");
  REQUIRE(max_size_limit() == 5);
}
