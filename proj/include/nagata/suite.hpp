#pragma once

// The acceptance battery: nine numbered verification criteria covering the
// product constructions, the recovery maps, the twist and fraction
// pipelines, and the cross-checks against independent oracles. The command
// line `suite` subcommand and the acceptance test binary both run these.

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/corpus.hpp"
#include "nagata/enumerate.hpp"
#include "nagata/fractions.hpp"
#include "nagata/io.hpp"
#include "nagata/iso.hpp"
#include "nagata/product.hpp"
#include "nagata/twist.hpp"

namespace nagata::suite {

struct Entry {
  std::string name;
  CheckReport report;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Entry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.report.passed; });
  }
  const Entry* first_failure() const {
    for (const auto& e : entries)
      if (!e.report.passed) return &e;
    return nullptr;
  }
};

namespace detail {

inline void put(CriterionResult& c, std::string name, CheckReport r) {
  c.entries.push_back({std::move(name), std::move(r)});
}

inline void claim(CriterionResult& c, std::string name, bool ok, std::string what,
                  std::vector<WitnessEntry> witness = {}, std::string detail = {}) {
  put(c, std::move(name),
      ok ? CheckReport::pass(std::move(what))
         : CheckReport::fail(std::move(what), std::move(witness), std::move(detail)));
}

// Constructions may throw on malformed input; inside the battery a throw is
// a failure of the entry, never a crash of the run.
template <typename F>
inline void guarded(CriterionResult& c, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    put(c, name + "/error", CheckReport::fail("unexpected-error", {}, e.what()));
  }
}

}  // namespace detail

// Full products of division bimodules, over the built-in residuated
// structures and over every commutative residuated chain up to size 4, are
// residuated lattice-ordered semigroups.
inline CriterionResult criterion1() {
  CriterionResult c{1, "products of division bimodules are residuated", {}};
  const auto run = [&c](const std::string& name, const ResiduatedStructure& r) {
    detail::guarded(c, name, [&] {
      const Bimodule m = division_bimodule(r, r.point ? r.point : std::optional<int>(0));
      const NagataProduct p = nagata_product(m);
      if (!p.lres || !p.rres) {
        detail::claim(c, name, false, "product-residuals", {}, "residual tables missing");
        return;
      }
      ResiduatedStructure rs{p.carrier, *p.lres, *p.rres, std::nullopt};
      detail::put(c, name, check_residuated_ell_semigroup(rs));
    });
  };
  for (const auto& [name, r] : corpus::residuated_corpus()) run("full-" + name, r);
  for (int n = 1; n <= 4; ++n) {
    const auto chains = enumerate_residuated_chains(n);
    for (std::size_t i = 0; i < chains.size(); ++i)
      run("full-chain" + std::to_string(n) + "-" + std::to_string(i), chains[i]);
  }
  return c;
}

// Restricted products are residuated lattices whose universe is exactly the
// double-division image of the full product at the pair (1, 0).
inline CriterionResult criterion2() {
  CriterionResult c{2, "restricted products live on the double-division universe", {}};
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    detail::guarded(c, name, [&c, &name, &m] {
      const StructuredProduct p = restricted_nagata_product(m);
      if (!p.algebra.lres || !p.algebra.rres) {
        detail::claim(c, name + "/lattice", false, "product-residuals", {},
                      "residual tables missing");
        return;
      }
      ResiduatedStructure rs{p.algebra.carrier, *p.algebra.lres, *p.algebra.rres,
                             p.algebra.point};
      detail::put(c, name + "/lattice", check_residuated_lattice(rs));

      const NagataProduct full = nagata_product(m);
      ResiduatedStructure fullRs{full.carrier, *full.lres, *full.rres, std::nullopt};
      const int unitPair = full.ctx.indexOf(*m.scalars.unit, *m.point);
      const std::vector<int> image = double_division_image(fullRs, unitPair);
      std::vector<int> universe;
      universe.reserve(p.ctx.pairs.size());
      for (const auto& [a, x] : p.ctx.pairs) universe.push_back(full.ctx.indexOf(a, x));
      std::sort(universe.begin(), universe.end());
      detail::claim(c, name + "/universe", image == universe, "double-division-universe", {},
                    "the restricted universe must equal the double-division image");
    });
  }
  return c;
}

// The recovery maps of every restricted product: sigma is a multiplicative
// interior operator, gamma a closure operator, the scalar and module
// embeddings satisfy the six action recovery equations, and the structural
// bimodule is isomorphic to the input.
inline CriterionResult criterion3() {
  CriterionResult c{3, "interior, closure, and action recovery", {}};
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    detail::guarded(c, name, [&c, &name, &m] {
      const StructuredProduct p = restricted_nagata_product(m);
      const NagataStructure& n = p.algebra;
      const Poset& o = n.carrier.poset;

      const OperatorKind sk = classify_operator(o, n.sigma);
      detail::claim(c, name + "/sigma-interior",
                    sk == OperatorKind::Interior || sk == OperatorKind::Both,
                    "sigma-is-interior");
      const OperatorKind gk = classify_operator(o, n.gamma);
      detail::claim(c, name + "/gamma-closure",
                    gk == OperatorKind::Closure || gk == OperatorKind::Both,
                    "gamma-is-closure");

      bool hom = true;
      std::vector<WitnessEntry> w;
      for (int i = 0; i < n.size() && hom; ++i)
        for (int j = 0; j < n.size() && hom; ++j)
          if (n.sigma(n.carrier.mul[i][j]) != n.carrier.mul[n.sigma(i)][n.sigma(j)]) {
            hom = false;
            w = {{"m", n.label(i)}, {"n", n.label(j)}};
          }
      detail::claim(c, name + "/sigma-mul", hom, "sigma-multiplicative", w);

      detail::put(c, name + "/counit", verify_counit(m));
      detail::put(c, name + "/recovery", verify_action_recovery(m, true));

      const StructuralBimodule F = structural_bimodule(n);
      detail::claim(c, name + "/structural-iso",
                    isomorphic(view_of(F.bimodule), view_of(m)),
                    "structural-bimodule-isomorphic");
    });
  }
  return c;
}

// Restricted products pass the full interior/closure axiom suites, and the
// comparison map into the product of the structural bimodule is an injective
// homomorphism with both triangle identities.
inline CriterionResult criterion4() {
  CriterionResult c{4, "axiom suites and the comparison embedding", {}};
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    detail::guarded(c, name, [&c, &name, &m] {
      const StructuredProduct p = restricted_nagata_product(m);
      detail::put(c, name + "/posemigroup-suite", check_nagata_posemigroup(p.algebra, true));
      if (p.algebra.lres && p.algebra.rres && p.algebra.carrier.meet && p.algebra.carrier.join)
        detail::put(c, name + "/lattice-suite", check_nagata_lattice(p.algebra, true));
      const UnitMapResult um = unit_map(p.algebra, true);
      detail::put(c, name + "/unit-map", um.report);
      detail::put(c, name + "/triangle-product", verify_triangle_product(m));
      detail::put(c, name + "/triangle-bimodule", verify_triangle_bimodule(p.algebra, true));
    });
  }
  return c;
}

// The truth-order join recovers every element from its interior and closure,
// and the comparison map is onto.
inline CriterionResult criterion5() {
  CriterionResult c{5, "truth-order join decomposes every element", {}};
  for (const auto& [name, m] : corpus::bimodule_corpus()) {
    detail::guarded(c, name, [&c, &name, &m] {
      const StructuredProduct p = restricted_nagata_product(m);
      const NagataStructure& n = p.algebra;
      if (!n.oplus) {
        detail::claim(c, name + "/oplus", false, "truth-join-attached", {}, "oplus missing");
        return;
      }
      detail::put(c, name + "/suite",
                  check_bilattice_sesquilattice(n, TruthOrderVariant::Sesquilattice));
      bool dec = true;
      std::vector<WitnessEntry> w;
      for (int i = 0; i < n.size() && dec; ++i)
        if ((*n.oplus)[n.sigma(i)][n.gamma(i)] != i) {
          dec = false;
          w = {{"m", n.label(i)}};
        }
      detail::claim(c, name + "/decomposition", dec, "interior-closure-decomposition", w,
                    dec ? "" : "sigma m (+) gamma m differs from m");
      detail::put(c, name + "/surjective", check_unit_surjectivity(n, true));
    });
  }
  return c;
}

// Twist products carry a strong negation, untwisting recovers the input pair
// up to a two-sorted isomorphism commuting with both maps, and the negation
// is involutive exactly when nothing collapses.
inline CriterionResult criterion6() {
  CriterionResult c{6, "strong negation and the untwist round trip", {}};
  for (const auto& [name, t] : corpus::pair_corpus()) {
    detail::guarded(c, name, [&c, &name, &t] {
      const StructuredProduct p = restricted_twist_product(t);
      detail::put(c, name + "/negation", check_strong_negation(p.algebra));
      if (p.algebra.lres && p.algebra.rres)
        detail::put(c, name + "/negation-residuated",
                    check_strong_negation_residuated(p.algebra));
      detail::put(c, name + "/counit", verify_twist_counit(t));
      const TwistablePair u = untwist(p.algebra);
      const PairView va = view_of(u);
      const PairView vb = view_of(t);
      detail::claim(c, name + "/untwist-iso", isomorphic(va, vb), "untwist-isomorphic");
      detail::put(c, name + "/involutive", check_involutive_collapse(t));
    });
  }
  return c;
}

// The fraction construction over every Boolean-pointed Brouwerian algebra up
// to size 5, and over the eight-element Boolean corpus member: the lemma
// suite, the conucleus/nucleus pipeline, and the complemented bimonoid with
// its term equivalence and the fraction representation of every element.
inline CriterionResult criterion7() {
  CriterionResult c{7, "fractions over boolean-pointed algebras", {}};
  std::vector<std::pair<std::string, BrouwerianAlgebra>> algebras;
  for (int n = 1; n <= 5; ++n) {
    const auto found = enumerate_boolean_pointed_brouwerian(n);
    for (std::size_t i = 0; i < found.size(); ++i)
      algebras.emplace_back("bp" + std::to_string(n) + "-" + std::to_string(i), found[i]);
  }
  algebras.emplace_back("c8-boolean", corpus::boolean_brouwerian(3, 0));
  for (const auto& [name, b] : algebras) {
    detail::guarded(c, name, [&c, &name, &b] {
      detail::put(c, name + "/lemmas", brouwerian_lemma_suite(b));
      const FractionsResult f = bimonoid_of_fractions(b);
      detail::put(c, name + "/pipeline", check_fractions_pipeline(f));
      detail::put(c, name + "/bimonoid", check_bimonoid(f.fractions));
      detail::put(c, name + "/complemented", check_complemented(f.fractions));
      detail::put(c, name + "/terms", check_term_equivalence(f.fractions));
      detail::put(c, name + "/representation", verify_fraction_representation(f));
      detail::put(c, name + "/embedding", verify_fraction_embedding(f));
    });
  }
  return c;
}

// Cross-checks against independently computed oracles: the semantic residual
// scan reproduces the stored tables, the twist complement agrees with the
// exhaustive complement search, and the enumeration counts match both the
// frozen values and a second census that never touches canonical keys.
inline CriterionResult criterion8() {
  CriterionResult c{8, "independent oracles agree", {}};
  for (const auto& [name, r] : corpus::residuated_corpus()) {
    detail::guarded(c, "residuals-" + name, [&c, &name, &r] {
      const auto scan = compute_residuals(r.base);
      detail::claim(c, "residuals-" + name,
                    scan && scan->lres == r.lres && scan->rres == r.rres,
                    "residual-scan-roundtrip");
    });
  }
  for (const auto& [name, b] : corpus::brouwerian_corpus()) {
    detail::guarded(c, "complement-" + name, [&c, &name, &b] {
      const FractionsResult f = bimonoid_of_fractions(b);
      bool ok = true;
      std::vector<WitnessEntry> w;
      for (int x = 0; x < f.fractions.size() && ok; ++x)
        if (complement_of(f.fractions, x) != std::optional<int>(f.complement[x])) {
          ok = false;
          w = {{"x", f.fractions.label(x)}};
        }
      detail::claim(c, "complement-" + name, ok, "complement-search-agrees", w);
    });
  }
  constexpr std::array<int, 4> posetCounts{1, 2, 5, 16};
  constexpr std::array<int, 4> chainCounts{1, 1, 2, 6};
  for (int n = 1; n <= 4; ++n) {
    detail::guarded(c, "census-" + std::to_string(n), [&c, n, &posetCounts, &chainCounts] {
      const int canonical = static_cast<int>(enumerate_posets(n).size());
      detail::claim(c, "posets" + std::to_string(n) + "-frozen",
                    canonical == posetCounts[n - 1], "poset-count-frozen", {},
                    "got " + std::to_string(canonical));
      const int searched = count_posets_by_search(n);
      detail::claim(c, "posets" + std::to_string(n) + "-search", searched == canonical,
                    "poset-count-search", {}, "got " + std::to_string(searched));
      const int chains = static_cast<int>(enumerate_residuated_chains(n).size());
      detail::claim(c, "chains" + std::to_string(n) + "-frozen",
                    chains == chainCounts[n - 1], "chain-count-frozen", {},
                    "got " + std::to_string(chains));
    });
  }
  return c;
}

// Every damaged fixture fails its check with exactly the intended axiom and
// a concrete witness. When a spawn hook is supplied, the fixture is also run
// through the command line and must exit with code 1.
inline CriterionResult criterion9(
    const std::function<int(const corpus::NegativeEntry&)>& spawn = {}) {
  CriterionResult c{9, "damaged inputs fail with the intended axiom", {}};
  for (const auto& e : corpus::negative_corpus()) {
    CheckReport r;
    try {
      r = check_structure(e.structure);
    } catch (const Error& err) {
      detail::claim(c, e.name, false, e.axiom, {},
                    std::string("checker threw instead of reporting: ") + err.what());
      continue;
    }
    const bool ok = !r.passed && r.axiom == e.axiom && !r.witness.empty();
    detail::claim(c, e.name, ok, e.axiom, r.witness,
                  ok ? ""
                     : (r.passed ? "check unexpectedly passed"
                                 : "reported " + r.axiom + " instead"));
    if (spawn) {
      const int code = spawn(e);
      detail::claim(c, e.name + "/exit-code", code == 1, "cli-exit-one", {},
                    code == 1 ? "" : "exit code " + std::to_string(code));
    }
  }
  return c;
}

inline std::vector<CriterionResult> run_all(
    const std::function<int(const corpus::NegativeEntry&)>& spawn = {}) {
  return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
          criterion6(), criterion7(), criterion8(), criterion9(spawn)};
}

}  // namespace nagata::suite
