#pragma once

// Commutative bimonoids, complements, and the bimonoid of fractions of a
// Boolean-pointed Brouwerian algebra, built as a nucleus image of a
// conucleus image of its restricted twist product.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/core.hpp"
#include "nagata/product.hpp"
#include "nagata/twist.hpp"

namespace nagata {

// Two commutative isotone monoid operations over one poset, linked by
// x.(y+z) <= (x.y)+z. Multiplication need not distribute over addition.
struct Bimonoid {
  Poset poset;
  Table mul;
  int mulUnit = 0;
  Table add;
  int addUnit = 0;

  int size() const { return poset.size; }
  std::string label(int i) const { return poset.label(i); }

  bool operator==(const Bimonoid&) const = default;
};

namespace detail {

inline void require_bimonoid_shape(const Bimonoid& b) {
  require_square(b.poset.leq, b.poset.size, "leq");
  require_table(b.mul, b.size(), b.size(), b.size(), "mul");
  require_table(b.add, b.size(), b.size(), b.size(), "add");
  if (b.mulUnit < 0 || b.mulUnit >= b.size())
    throw Error(Errc::DimensionMismatch, "mul unit out of range");
  if (b.addUnit < 0 || b.addUnit >= b.size())
    throw Error(Errc::DimensionMismatch, "add unit out of range");
}

inline CheckReport check_commutative_monoid(const Poset& p, const Table& op, int unit,
                                            const std::string& prefix) {
  const int n = p.size;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (op[a][b] != op[b][a])
        return CheckReport::fail(prefix + ".commutativity",
                                 {{"x", p.label(a)}, {"y", p.label(b)}});
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]])
          return CheckReport::fail(prefix + ".associativity",
                                   {{"x", p.label(a)}, {"y", p.label(b)}, {"z", p.label(c)}});
    }
  for (int a = 0; a < n; ++a)
    if (op[unit][a] != a)
      return CheckReport::fail(prefix + ".unit", {{"x", p.label(a)}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (!p.le(op[a][c], op[b][c]))
          return CheckReport::fail(prefix + ".isotonicity",
                                   {{"x", p.label(a)}, {"y", p.label(b)}, {"z", p.label(c)}});
    }
  return CheckReport::pass(prefix);
}

}  // namespace detail

inline CheckReport check_bimonoid(const Bimonoid& b) {
  detail::require_bimonoid_shape(b);
  if (auto r = check_poset(b.poset); !r.passed) return r;
  if (auto r = detail::check_commutative_monoid(b.poset, b.mul, b.mulUnit, "bimonoid.mul");
      !r.passed)
    return r;
  if (auto r = detail::check_commutative_monoid(b.poset, b.add, b.addUnit, "bimonoid.add");
      !r.passed)
    return r;
  const int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!b.poset.le(b.mul[x][b.add[y][z]], b.add[b.mul[x][y]][z]))
          return CheckReport::fail(
              "bimonoid.linking",
              {{"x", b.label(x)}, {"y", b.label(y)}, {"z", b.label(z)}},
              "x.(y+z) exceeds (x.y)+z");
  return CheckReport::pass("bimonoid");
}

// First y with x.y <= 0 and 1 <= x+y; in a valid bimonoid it is the only one.
inline std::optional<int> complement_of(const Bimonoid& b, int x) {
  for (int y = 0; y < b.size(); ++y)
    if (b.poset.le(b.mul[x][y], b.addUnit) && b.poset.le(b.mulUnit, b.add[x][y]))
      return y;
  return std::nullopt;
}

inline CheckReport check_complemented(const Bimonoid& b) {
  detail::require_bimonoid_shape(b);
  for (int x = 0; x < b.size(); ++x) {
    int found = kAbsent;
    for (int y = 0; y < b.size(); ++y) {
      if (!b.poset.le(b.mul[x][y], b.addUnit) || !b.poset.le(b.mulUnit, b.add[x][y])) continue;
      if (found != kAbsent)
        return CheckReport::fail(
            "bimonoid.complement-unique",
            {{"x", b.label(x)}, {"y", b.label(found)}, {"z", b.label(y)}},
            "two distinct complements");
      found = y;
    }
    if (found == kAbsent)
      return CheckReport::fail("bimonoid.complemented", {{"x", b.label(x)}},
                               "no complement exists");
  }
  return CheckReport::pass("complemented-bimonoid");
}

// A pointed Brouwerian algebra as a bimonoid: multiplication is the meet,
// addition is (0 -> (x ^ y)) ^ (x v y).
inline Bimonoid brouwerian_bimonoid(const BrouwerianAlgebra& b) {
  if (!b.point) throw Error(Errc::MissingPoint, "the bimonoid view needs a point");
  Bimonoid out;
  out.poset = b.poset;
  out.mul = b.meet;
  out.mulUnit = b.top;
  const int n = b.size();
  out.add.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.add[x][y] = b.meet[b.imp[*b.point][b.meet[x][y]]][b.join[x][y]];
  out.addUnit = *b.point;
  return out;
}

// Exhaustive scans of the three facts the fractions construction leans on:
// cancellation by (0-meet, negation) profiles, double-negation recovery of
// fractions, and the closed form of addition.
inline CheckReport brouwerian_lemma_suite(const BrouwerianAlgebra& b) {
  if (!b.point) throw Error(Errc::MissingPoint, "the lemma suite needs a point");
  const int zero = *b.point;
  const int n = b.size();
  const auto neg = [&](int a) { return b.imp[a][zero]; };
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (a != c && b.meet[zero][a] == b.meet[zero][c] && neg(a) == neg(c))
        return CheckReport::fail("brouwerian.lemma.cancellation",
                                 {{"a", b.label(a)}, {"b", b.label(c)}},
                                 "equal 0-meet and negation on distinct elements");
  for (int a = 0; a < n; ++a)
    if (b.imp[neg(a)][a] != a)
      return CheckReport::fail("brouwerian.lemma.negation-fixpoint", {{"a", b.label(a)}},
                               "not(a) -> a differs from a");
  const Bimonoid bb = brouwerian_bimonoid(b);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (bb.add[a][c] != b.meet[b.imp[neg(a)][c]][b.imp[neg(c)][a]])
        return CheckReport::fail("brouwerian.lemma.addition", {{"a", b.label(a)}, {"b", b.label(c)}},
                                 "a+b differs from (not(a)->b) ^ (not(b)->a)");
  return CheckReport::pass("brouwerian-lemmas");
}

// A complemented commutative bimonoid carries a commutative involutive
// residuated pomonoid via x -> y := comp(x)+y, and addition is recovered as
// comp(comp(y).comp(x)).
inline CheckReport check_term_equivalence(const Bimonoid& b) {
  if (auto r = check_complemented(b); !r.passed) return r;
  const int n = b.size();
  std::vector<int> comp(n);
  for (int x = 0; x < n; ++x) comp[x] = *complement_of(b, x);
  for (int x = 0; x < n; ++x)
    if (comp[comp[x]] != x)
      return CheckReport::fail("bimonoid.term.involution", {{"x", b.label(x)}},
                               "comp(comp(x)) differs from x");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z)
        if (b.poset.le(b.mul[x][y], z) != b.poset.le(y, b.add[comp[x]][z]))
          return CheckReport::fail(
              "bimonoid.term.residuation",
              {{"x", b.label(x)}, {"y", b.label(y)}, {"z", b.label(z)}},
              "x.y <= z does not match y <= comp(x)+z");
      if (b.add[x][y] != comp[b.mul[comp[y]][comp[x]]])
        return CheckReport::fail("bimonoid.term.addition", {{"x", b.label(x)}, {"y", b.label(y)}},
                                 "x+y differs from comp(comp(y).comp(x))");
    }
  return CheckReport::pass("term-equivalence");
}

// The full pipeline from a Boolean-pointed Brouwerian algebra to its
// bimonoid of fractions inside the restricted twist product.
struct FractionsResult {
  BrouwerianAlgebra base;
  StructuredProduct twist;      // restricted twist product of the identity pair
  EndoMap mu;                   // co-fraction interior on twist indices
  EndoMap nu;                   // fraction closure (meaningful on the mu-image)
  std::vector<int> muImage;     // ambient twist indices, ascending
  std::vector<int> nuImage;     // ambient twist indices, ascending
  Bimonoid fractions;           // the algebra over nuImage positions
  std::vector<int> iota;        // base element -> fractions position
  std::vector<int> complement;  // fractions position -> fractions position

  int positionOf(int ambient) const {
    auto it = std::lower_bound(nuImage.begin(), nuImage.end(), ambient);
    return (it != nuImage.end() && *it == ambient) ? static_cast<int>(it - nuImage.begin())
                                                   : kAbsent;
  }
};

inline FractionsResult bimonoid_of_fractions(const BrouwerianAlgebra& b) {
  if (auto r = check_boolean_pointed(b); !r.passed)
    throw Error(Errc::NotBooleanPointed, "the base algebra fails " + r.axiom);

  FractionsResult f;
  f.base = b;
  f.twist = restricted_twist_product(identity_pair(residuated_of_brouwerian(b)));
  const PairContext& c = f.twist.ctx;
  const int n = c.size();
  const int zero = *b.point;

  auto pairIndex = [&](int a, int x, const char* what) {
    const int i = c.indexOf(a, x);
    if (i == kAbsent)
      throw Error(Errc::AxiomFailure, std::string(what) + " escapes the universe at (" +
                                          b.label(a) + "," + b.label(x) + ")");
    return i;
  };

  f.mu.table.resize(n);
  f.nu.table.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto [a, x] = c.pairOf(i);
    f.mu.table[i] = pairIndex(a, b.imp[a][x], "mu");
    f.nu.table[i] = pairIndex(b.imp[x][a], x, "nu");
    if (f.mu.table[i] == i) {
      f.muImage.push_back(i);
      if (f.nu.table[i] == i) f.nuImage.push_back(i);
    }
  }

  const int m = static_cast<int>(f.nuImage.size());
  f.fractions.poset = subposet(f.twist.algebra.carrier.poset, f.nuImage);
  f.fractions.mul.assign(m, std::vector<int>(m, 0));
  f.complement.resize(m);
  for (int p = 0; p < m; ++p) {
    const auto [a, x] = c.pairOf(f.nuImage[p]);
    f.complement[p] = f.positionOf(pairIndex(x, a, "complement"));
    if (f.complement[p] == kAbsent)
      throw Error(Errc::AxiomFailure, "the swap of a fraction is not a fraction");
    for (int q = 0; q < m; ++q) {
      const int prod = f.twist.algebra.carrier.mul[f.nuImage[p]][f.nuImage[q]];
      if (f.mu.table[prod] != prod)
        throw Error(Errc::AxiomFailure, "a product of co-fractions is not a co-fraction");
      f.fractions.mul[p][q] = f.positionOf(f.nu.table[prod]);
      if (f.fractions.mul[p][q] == kAbsent)
        throw Error(Errc::AxiomFailure, "the closure of a product is not a fraction");
    }
  }
  f.fractions.add.assign(m, std::vector<int>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      f.fractions.add[p][q] = f.complement[f.fractions.mul[f.complement[p]][f.complement[q]]];
  f.fractions.mulUnit = f.positionOf(pairIndex(b.top, zero, "the multiplicative unit"));
  f.fractions.addUnit = f.positionOf(pairIndex(zero, b.top, "the additive unit"));
  if (f.fractions.mulUnit == kAbsent || f.fractions.addUnit == kAbsent)
    throw Error(Errc::AxiomFailure, "a unit is missing from the fraction universe");

  f.iota.resize(b.size());
  for (int a = 0; a < b.size(); ++a) {
    f.iota[a] = f.positionOf(pairIndex(a, b.imp[a][zero], "iota"));
    if (f.iota[a] == kAbsent)
      throw Error(Errc::AxiomFailure, "iota leaves the fraction universe at " + b.label(a));
  }
  return f;
}

// Structural facts about the two-step restriction: mu is a multiplicative
// conucleus with the co-fractions as image, nu is a nucleus on that image
// with the fractions as image.
inline CheckReport check_fractions_pipeline(const FractionsResult& f) {
  const Poset& p = f.twist.algebra.carrier.poset;
  const Table& mul = f.twist.algebra.carrier.mul;
  const BrouwerianAlgebra& b = f.base;
  const PairContext& c = f.twist.ctx;
  const int n = c.size();

  const OperatorKind muKind = classify_operator(p, f.mu);
  if (muKind != OperatorKind::Interior && muKind != OperatorKind::Both)
    return CheckReport::fail("fractions.mu-interior", {},
                             std::string("mu classifies as ") + operator_kind_name(muKind));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.mu(mul[i][j]) != mul[f.mu(i)][f.mu(j)])
        return CheckReport::fail("fractions.mu-multiplicative",
                                 {{"x", p.label(i)}, {"y", p.label(j)}});
  for (int i = 0; i < n; ++i) {
    const auto [a, x] = c.pairOf(i);
    if ((f.mu(i) == i) != (b.imp[a][x] == x))
      return CheckReport::fail("fractions.mu-image", {{"x", p.label(i)}},
                               "mu-fixpoints are not exactly the co-fractions");
  }

  for (int i : f.muImage) {
    if (!p.le(i, f.nu(i)))
      return CheckReport::fail("fractions.nu-closure", {{"x", p.label(i)}}, "nu is not expanding");
    if (f.nu(f.nu(i)) != f.nu(i))
      return CheckReport::fail("fractions.nu-closure", {{"x", p.label(i)}},
                               "nu is not idempotent");
    if (f.mu(f.nu(i)) != f.nu(i))
      return CheckReport::fail("fractions.nu-co-fraction", {{"x", p.label(i)}},
                               "nu leaves the mu-image");
    for (int j : f.muImage) {
      if (p.le(i, j) && !p.le(f.nu(i), f.nu(j)))
        return CheckReport::fail("fractions.nu-closure", {{"x", p.label(i)}, {"y", p.label(j)}},
                                 "nu is not isotone");
      if (!p.le(mul[f.nu(i)][f.nu(j)], f.nu(mul[i][j])))
        return CheckReport::fail("fractions.nu-nucleus", {{"x", p.label(i)}, {"y", p.label(j)}});
    }
    const auto [a, x] = c.pairOf(i);
    if ((f.nu(i) == i) != (b.imp[x][a] == a))
      return CheckReport::fail("fractions.nu-image", {{"x", p.label(i)}},
                               "nu-fixpoints are not exactly the fractions");
  }
  return CheckReport::pass("fractions-pipeline");
}

// Every element of the fraction algebra is iota(a).comp(iota(x)) and also
// iota(a)+comp(iota(x)) for its own components a and x.
inline CheckReport verify_fraction_representation(const FractionsResult& f) {
  const PairContext& c = f.twist.ctx;
  for (int p = 0; p < f.fractions.size(); ++p) {
    const auto [a, x] = c.pairOf(f.nuImage[p]);
    const int viaMul = f.fractions.mul[f.iota[a]][f.complement[f.iota[x]]];
    if (viaMul != p)
      return CheckReport::fail("fractions.co-fraction-form", {{"m", f.fractions.label(p)}},
                               "iota(a).comp(iota(x)) misses the element");
    const int viaAdd = f.fractions.add[f.iota[a]][f.complement[f.iota[x]]];
    if (viaAdd != p)
      return CheckReport::fail("fractions.fraction-form", {{"m", f.fractions.label(p)}},
                               "iota(a)+comp(iota(x)) misses the element");
  }
  return CheckReport::pass("fraction-representation");
}

// iota is an embedding of bimonoids from the base algebra (viewed as a
// bimonoid) into the fraction algebra.
inline CheckReport verify_fraction_embedding(const FractionsResult& f) {
  const Bimonoid bb = brouwerian_bimonoid(f.base);
  const int n = bb.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto w = std::vector<WitnessEntry>{{"x", bb.label(a)}, {"y", bb.label(c)}};
      if (bb.poset.le(a, c) != f.fractions.poset.le(f.iota[a], f.iota[c]))
        return CheckReport::fail("fractions.iota-order", w);
      if (f.iota[bb.mul[a][c]] != f.fractions.mul[f.iota[a]][f.iota[c]])
        return CheckReport::fail("fractions.iota-mul", w);
      if (f.iota[bb.add[a][c]] != f.fractions.add[f.iota[a]][f.iota[c]])
        return CheckReport::fail("fractions.iota-add", w);
    }
  if (f.iota[bb.mulUnit] != f.fractions.mulUnit)
    return CheckReport::fail("fractions.iota-units", {{"1", bb.label(bb.mulUnit)}});
  if (f.iota[bb.addUnit] != f.fractions.addUnit)
    return CheckReport::fail("fractions.iota-units", {{"0", bb.label(bb.addUnit)}});
  return CheckReport::pass("fraction-embedding");
}

}  // namespace nagata
