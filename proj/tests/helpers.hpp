#pragma once

#include <catch_amalgamated.hpp>

#include "nagata/all.hpp"

// Asserts a report passed; on failure the axiom id and witness land in the
// test output.
#define REQUIRE_PASSES(expr)                                 \
  do {                                                       \
    const ::nagata::CheckReport _r = (expr);                 \
    const std::string _w = ::nagata::witness_text(_r);       \
    INFO(_r.axiom << (_w.empty() ? "" : " [" + _w + "]"));   \
    REQUIRE(_r.passed);                                      \
  } while (0)

// Asserts a report failed on exactly the given axiom, with a witness.
#define REQUIRE_FAILS_WITH(expr, expectedAxiom)              \
  do {                                                       \
    const ::nagata::CheckReport _r = (expr);                 \
    INFO("axiom: " << _r.axiom);                             \
    REQUIRE_FALSE(_r.passed);                                \
    REQUIRE(_r.axiom == std::string(expectedAxiom));         \
    REQUIRE_FALSE(_r.witness.empty());                       \
  } while (0)

namespace testutil {

// Pair universes as plain sets for frozen comparisons.
inline std::vector<std::pair<int, int>> universe(const ::nagata::PairContext& c) {
  return c.pairs;
}

}  // namespace testutil
