#pragma once

// Built-in example structures. The positive corpus holds small algebras that
// every construction in the library accepts; the negative corpus holds
// deliberately damaged variants, each paired with the axiom it violates.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/fractions.hpp"
#include "nagata/io.hpp"
#include "nagata/product.hpp"
#include "nagata/twist.hpp"

namespace nagata::corpus {

// n-element chain with the Goedel implication; the point marks the element
// whose relative double negation is a join.
inline BrouwerianAlgebra chain_brouwerian(int n, int point,
                                          std::vector<std::string> labels = {}) {
  BrouwerianAlgebra b;
  b.poset = Poset::chain(n);
  b.poset.labels = std::move(labels);
  b.meet.assign(n, std::vector<int>(n));
  b.join.assign(n, std::vector<int>(n));
  b.imp.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.meet[i][j] = std::min(i, j);
      b.join[i][j] = std::max(i, j);
      b.imp[i][j] = i <= j ? n - 1 : j;
    }
  b.top = n - 1;
  b.point = point;
  return b;
}

// Powerset algebra on `atoms` generators; elements are bitmask-indexed and
// labeled by the atoms they contain.
inline BrouwerianAlgebra boolean_brouwerian(int atoms, int point = 0) {
  const int n = 1 << atoms;
  const int full = n - 1;
  BrouwerianAlgebra b;
  b.poset.size = n;
  b.poset.leq.assign(n, std::vector<std::uint8_t>(n, 0));
  b.poset.labels.resize(n);
  b.meet.assign(n, std::vector<int>(n));
  b.join.assign(n, std::vector<int>(n));
  b.imp.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    std::string name;
    for (int k = 0; k < atoms; ++k)
      if (i >> k & 1) name += static_cast<char>('a' + k);
    b.poset.labels[i] = name.empty() ? "0" : name;
    for (int j = 0; j < n; ++j) {
      b.poset.leq[i][j] = (i & ~j) == 0;
      b.meet[i][j] = i & j;
      b.join[i][j] = i | j;
      b.imp[i][j] = (~i | j) & full;
    }
  }
  b.top = full;
  b.point = point;
  return b;
}

// Three-element Goedel chain as a residuated lattice, zero at the bottom.
inline ResiduatedStructure godel3() {
  ResiduatedStructure r = residuated_of_brouwerian(chain_brouwerian(3, 0, {"0", "m", "1"}));
  return r;
}

// Three-element Lukasiewicz chain: x.y = max(x + y - 1, 0) on {0, h, 1}.
inline ResiduatedStructure lukasiewicz3() {
  Posemigroup s;
  s.poset = Poset::chain(3);
  s.poset.labels = {"0", "h", "1"};
  s.mul.assign(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.mul[i][j] = std::max(i + j - 2, 0);
  s.unit = 2;
  s.meet = meet_table(s.poset);
  s.join = join_table(s.poset);
  ResiduatedStructure r = compute_residuals(s).value();
  r.point = 0;
  return r;
}

// Surjective map from the Goedel chain onto the two-element chain, with the
// inclusion as its right inverse. The composite rho . lam collapses m to 1,
// so the twist negation over this pair is not involutive.
inline TwistablePair collapsing_pair() {
  const ResiduatedStructure plus = godel3();
  const ResiduatedStructure minus = residuated_of_brouwerian(chain_brouwerian(2, 0, {"0", "1"}));
  TwistablePair t;
  t.plus = plus.base;
  t.plusLres = plus.lres;
  t.plusRres = plus.rres;
  t.minus = minus.base;
  t.minusLres = minus.lres;
  t.minusRres = minus.rres;
  t.lam = {0, 1, 1};
  t.rho = {0, 2};
  t.point = 0;
  return t;
}

inline std::vector<std::pair<std::string, BrouwerianAlgebra>> brouwerian_corpus() {
  return {
      {"c1-singleton", chain_brouwerian(1, 0, {"*"})},
      {"c2-bottom", chain_brouwerian(2, 0, {"0", "1"})},
      {"c2-top", chain_brouwerian(2, 1, {"0", "1"})},
      {"c3-godel", chain_brouwerian(3, 1, {"0", "m", "1"})},
      {"c4-boolean", boolean_brouwerian(2, 0)},
      {"c8-boolean", boolean_brouwerian(3, 0)},
  };
}

inline std::vector<std::pair<std::string, ResiduatedStructure>> residuated_corpus() {
  return {
      {"rl-godel3", godel3()},
      {"rl-luk3", lukasiewicz3()},
      {"rl-boolean4", residuated_of_brouwerian(boolean_brouwerian(2, 0))},
  };
}

inline std::vector<std::pair<std::string, Bimodule>> bimodule_corpus() {
  std::vector<std::pair<std::string, Bimodule>> out;
  for (const auto& [name, r] : residuated_corpus())
    out.emplace_back("bimod-" + name.substr(3), division_bimodule(r, r.point));
  return out;
}

inline std::vector<std::pair<std::string, TwistablePair>> pair_corpus() {
  std::vector<std::pair<std::string, TwistablePair>> out;
  for (const auto& [name, b] : brouwerian_corpus())
    out.emplace_back("pair-id-" + name, identity_pair(residuated_of_brouwerian(b)));
  out.emplace_back("pair-id-luk3", identity_pair(lukasiewicz3()));
  out.emplace_back("pair-collapse", collapsing_pair());
  return out;
}

struct CorpusEntry {
  std::string name;
  Structure structure;
};

inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& [name, b] : brouwerian_corpus()) out.push_back({name, wrap(std::move(b))});
  for (auto& [name, r] : residuated_corpus()) out.push_back({name, wrap(std::move(r))});
  for (auto& [name, m] : bimodule_corpus()) out.push_back({name, wrap(std::move(m))});
  for (auto& [name, t] : pair_corpus()) out.push_back({name, wrap(std::move(t))});
  out.push_back({"nagata-rt-godel3",
                 wrap(restricted_twist_product(identity_pair(godel3())).algebra, true)});
  out.push_back({"nagata-rt-luk3",
                 wrap(restricted_twist_product(identity_pair(lukasiewicz3())).algebra, true)});
  out.push_back({"nagata-rt-collapse",
                 wrap(restricted_twist_product(collapsing_pair()).algebra, true)});
  out.push_back({"nagata-full-godel3",
                 wrap(full_nagata_structure(division_bimodule(godel3(), 0)).algebra, false)});
  out.push_back({"bm-frac-c2",
                 wrap(bimonoid_of_fractions(chain_brouwerian(2, 0, {"0", "1"})).fractions)});
  out.push_back({"bm-c4", wrap(brouwerian_bimonoid(boolean_brouwerian(2, 0)))});
  return out;
}

struct NegativeEntry {
  std::string name;
  Structure structure;
  std::string axiom;  // the axiom id the checker must report
};

// One damaged structure per axiom family. Every entry fails plain `check`
// with exactly the recorded axiom.
inline std::vector<NegativeEntry> negative_corpus() {
  std::vector<NegativeEntry> out;
  {
    Poset p = Poset::chain(3);
    p.leq[0][2] = 0;  // 0 <= 1 <= 2 without 0 <= 2
    out.push_back({"bad-poset", wrap(std::move(p)), "poset.transitivity"});
  }
  {
    Posemigroup s;
    s.poset = Poset::antichain(2);
    s.mul = {{1, 0}, {0, 0}};  // (0.0).1 = 0 but 0.(0.1) = 1
    out.push_back({"bad-posemigroup", wrap(std::move(s)), "posemigroup.associativity"});
  }
  {
    ResiduatedStructure r = godel3();
    r.lres[1][0] = 1;  // m\0 lifted above the true residual
    out.push_back({"bad-residuated", wrap(std::move(r)), "residuated.residuation"});
  }
  {
    BrouwerianAlgebra b = chain_brouwerian(3, 1, {"0", "m", "1"});
    b.imp[2][0] = 1;  // 1 -> 0 lifted above the pseudocomplement
    out.push_back({"bad-brouwerian", wrap(std::move(b)), "brouwerian.pseudocomplement"});
  }
  {
    // The bottom of a three-element chain is not a Boolean point: ~~m = 1.
    BrouwerianAlgebra b = chain_brouwerian(3, 0, {"0", "m", "1"});
    out.push_back({"bad-boolean-point", wrap(std::move(b)), "brouwerian.boolean-point"});
  }
  {
    Bimodule m = division_bimodule(godel3(), 0);
    m.moduleJoin[0][1] = (m.moduleJoin[0][1] + 1) % m.moduleCount();
    out.push_back({"bad-bimodule", wrap(std::move(m)), "bimodule.module-join"});
  }
  {
    // Constant maps satisfy the adjunction vacuously but lam . rho moves 1.
    const ResiduatedStructure two = residuated_of_brouwerian(chain_brouwerian(2, 0, {"0", "1"}));
    TwistablePair t;
    t.plus = two.base;
    t.minus = two.base;
    t.minusLres = two.lres;
    t.minusRres = two.rres;
    t.lam = {0, 0};
    t.rho = {1, 1};
    out.push_back({"bad-pair", wrap(std::move(t)), "twist.retraction"});
  }
  {
    NagataStructure n = restricted_twist_product(identity_pair(lukasiewicz3())).algebra;
    std::vector<int> moved;
    for (int i = 0; i < n.size(); ++i)
      if (n.sigma(i) != i) moved.push_back(i);
    n.sigma.table[moved.at(0)] = moved.at(1);  // sigma(sigma(m0)) lands back in the image
    out.push_back({"bad-nagata", wrap(std::move(n), true), "nagata.sigma.idempotent"});
  }
  {
    // Join and meet are both commutative monoids on the chain, but gluing
    // them in this orientation breaks the linking inequality at x=1, z=0.
    Bimonoid b;
    b.poset = Poset::chain(2);
    b.poset.labels = {"0", "1"};
    b.mul = {{0, 1}, {1, 1}};
    b.mulUnit = 0;
    b.add = {{0, 0}, {0, 1}};
    b.addUnit = 1;
    out.push_back({"bad-bimonoid", wrap(std::move(b)), "bimonoid.linking"});
  }
  return out;
}

}  // namespace nagata::corpus
