#include <set>

#include "helpers.hpp"

using namespace nagata;

TEST_CASE("every builtin corpus structure passes its strongest suite") {
  const auto entries = corpus::builtin_corpus();
  REQUIRE_FALSE(entries.empty());
  for (const auto& e : entries) {
    INFO(e.name);
    REQUIRE_PASSES(check_structure(e.structure));
  }
}

TEST_CASE("corpus names are unique") {
  std::set<std::string> names;
  for (const auto& e : corpus::builtin_corpus()) REQUIRE(names.insert(e.name).second);
  for (const auto& e : corpus::negative_corpus()) REQUIRE(names.insert(e.name).second);
}

TEST_CASE("each negative fixture fails on exactly the intended axiom") {
  const auto entries = corpus::negative_corpus();
  REQUIRE(entries.size() == 9);
  for (const auto& e : entries) {
    INFO(e.name << " expecting " << e.axiom);
    const CheckReport r = check_structure(e.structure);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.axiom == e.axiom);
    REQUIRE_FALSE(r.witness.empty());
  }
}

TEST_CASE("negative fixtures cover every structure family") {
  std::set<Kind> kinds;
  for (const auto& e : corpus::negative_corpus()) kinds.insert(e.structure.kind);
  REQUIRE(kinds == std::set<Kind>{Kind::Poset, Kind::Posemigroup, Kind::ResiduatedLattice,
                                  Kind::Brouwerian, Kind::Bimodule, Kind::TwistablePair,
                                  Kind::Nagata, Kind::Bimonoid});
}
