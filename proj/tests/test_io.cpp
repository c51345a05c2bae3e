#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"

using namespace nagata;
namespace fs = std::filesystem;

namespace {

// Unique temp path per test file; removed by each test that uses it.
fs::path temp_alg(const std::string& stem) {
  return fs::temp_directory_path() / (stem + ".alg");
}

std::string dump_of(const Structure& s) { return structure_to_json(s).dump(); }

}  // namespace

TEST_CASE("every corpus structure survives a save and load round trip") {
  for (const auto& e : corpus::builtin_corpus()) {
    INFO(e.name);
    const fs::path p = temp_alg("roundtrip-" + e.name);
    save_structure(e.structure, p.string());
    const Structure back = load_structure(p.string());
    REQUIRE(back.kind == e.structure.kind);
    REQUIRE(back.restricted == e.structure.restricted);
    REQUIRE(dump_of(back) == dump_of(e.structure));
    fs::remove(p);
  }
}

TEST_CASE("json round trips in memory for the negative corpus too") {
  for (const auto& e : corpus::negative_corpus()) {
    INFO(e.name);
    const Structure back = structure_from_json(structure_to_json(e.structure));
    REQUIRE(dump_of(back) == dump_of(e.structure));
  }
}

TEST_CASE("a ragged table is a parse error") {
  const fs::path p = temp_alg("ragged");
  nlohmann::json j = structure_to_json(wrap(Poset::chain(2)));
  j["leq"] = nlohmann::json::array({{1, 1}, {1}});
  std::ofstream(p.string()) << j.dump();

  bool threw = false;
  try {
    load_structure(p.string());
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::ParseError);
  }
  REQUIRE(threw);
  fs::remove(p);
}

TEST_CASE("malformed json and unknown kinds are parse errors") {
  const fs::path p = temp_alg("malformed");
  std::ofstream(p.string()) << "{ not json";
  bool threw = false;
  try {
    load_structure(p.string());
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::ParseError);
  }
  REQUIRE(threw);
  fs::remove(p);

  REQUIRE_THROWS_AS(structure_from_json(nlohmann::json{{"kind", "frobnicator"}}), Error);
  REQUIRE_THROWS_AS(load_structure((fs::temp_directory_path() / "no-such-file.alg").string()),
                    Error);
}

TEST_CASE("an axiom violation in a file is a validation error naming the axiom") {
  Posemigroup s;
  s.poset = Poset::antichain(2);
  s.mul = {{1, 0}, {0, 0}};
  const fs::path p = temp_alg("nonassoc");
  save_structure(wrap(std::move(s)), p.string());

  bool threw = false;
  try {
    load_validated(p.string());
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code() == Errc::ValidationError);
    REQUIRE(std::string(e.what()).find("posemigroup.associativity") != std::string::npos);
  }
  REQUIRE(threw);
  // Plain load accepts the same file: shape is fine, only the axiom fails.
  REQUIRE(load_structure(p.string()).kind == Kind::Posemigroup);
  fs::remove(p);
}

TEST_CASE("kind names round trip") {
  for (Kind k : {Kind::Poset, Kind::Posemigroup, Kind::ResiduatedLattice, Kind::Brouwerian,
                 Kind::Bimodule, Kind::TwistablePair, Kind::Nagata, Kind::Bimonoid})
    REQUIRE(kind_from(kind_name(k)) == std::optional<Kind>(k));
  REQUIRE_FALSE(kind_from("no-such-kind").has_value());
}

TEST_CASE("check_structure dispatches on the kind") {
  REQUIRE_PASSES(check_structure(wrap(Poset::chain(3))));
  REQUIRE_PASSES(check_structure(wrap(corpus::godel3())));
  REQUIRE_PASSES(check_structure(wrap(corpus::chain_brouwerian(3, 1))));
  // A declared point is validated, not just stored.
  REQUIRE_FAILS_WITH(check_structure(wrap(corpus::chain_brouwerian(3, 0))),
                     "brouwerian.boolean-point");
}

TEST_CASE("the restricted flag survives serialization") {
  const auto p = restricted_twist_product(
      identity_pair(residuated_of_brouwerian(corpus::chain_brouwerian(2, 0))));
  const Structure s = wrap(p.algebra, true);
  REQUIRE(s.restricted);
  const Structure back = structure_from_json(structure_to_json(s));
  REQUIRE(back.restricted);
  REQUIRE_PASSES(check_structure(back));
}
