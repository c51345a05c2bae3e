#pragma once

// Partially ordered semigroups, residuated lattices, and Brouwerian algebras.

#include <optional>
#include <string>
#include <vector>

#include "nagata/core.hpp"

namespace nagata {

struct Posemigroup {
  Poset poset;
  Table mul;
  std::optional<int> unit;
  std::optional<Table> meet;
  std::optional<Table> join;

  int size() const { return poset.size; }
  std::string label(int i) const { return poset.label(i); }

  bool operator==(const Posemigroup&) const = default;
};

// Residuated posemigroup: lres[a][c] = a\c, rres[c][b] = c/b, so that
// b <= a\c  iff  a.b <= c  iff  a <= c/b.
struct ResiduatedStructure {
  Posemigroup base;
  Table lres;
  Table rres;
  std::optional<int> point;

  int size() const { return base.size(); }
  std::string label(int i) const { return base.label(i); }

  bool operator==(const ResiduatedStructure&) const = default;
};

// Brouwerian algebra: distributive lattice with top and relative
// pseudocomplement imp, optionally pointed by a designated element 0.
struct BrouwerianAlgebra {
  Poset poset;
  Table meet;
  Table join;
  Table imp;
  int top = 0;
  std::optional<int> point;

  int size() const { return poset.size; }
  std::string label(int i) const { return poset.label(i); }

  bool operator==(const BrouwerianAlgebra&) const = default;
};

namespace detail {

inline void require_posemigroup_shape(const Posemigroup& s) {
  require_square(s.poset.leq, s.poset.size, "leq");
  require_table(s.mul, s.size(), s.size(), s.size(), "mul");
  if (s.unit && (*s.unit < 0 || *s.unit >= s.size()))
    throw Error(Errc::DimensionMismatch, "unit out of range");
  if (s.meet) require_table(*s.meet, s.size(), s.size(), s.size(), "meet");
  if (s.join) require_table(*s.join, s.size(), s.size(), s.size(), "join");
}

}  // namespace detail

inline CheckReport check_posemigroup(const Posemigroup& s) {
  detail::require_posemigroup_shape(s);
  const Poset& p = s.poset;
  if (auto r = check_poset(p); !r.passed) return r;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul[s.mul[a][b]][c] != s.mul[a][s.mul[b][c]])
          return CheckReport::fail("posemigroup.associativity",
                                   {{"a", p.label(a)}, {"b", p.label(b)}, {"c", p.label(c)}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.le(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.le(s.mul[a][c], s.mul[b][c]))
          return CheckReport::fail("posemigroup.isotonicity",
                                   {{"a", p.label(a)}, {"b", p.label(b)}, {"c", p.label(c)}},
                                   "right multiplication by c is not isotone");
        if (!p.le(s.mul[c][a], s.mul[c][b]))
          return CheckReport::fail("posemigroup.isotonicity",
                                   {{"a", p.label(a)}, {"b", p.label(b)}, {"c", p.label(c)}},
                                   "left multiplication by c is not isotone");
      }
    }
  if (s.unit) {
    for (int a = 0; a < n; ++a)
      if (s.mul[*s.unit][a] != a || s.mul[a][*s.unit] != a)
        return CheckReport::fail("posemigroup.unit", {{"a", p.label(a)}});
  }
  if (s.meet) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (glb(p, {a, b}) != std::optional<int>((*s.meet)[a][b]))
          return CheckReport::fail("posemigroup.meet", {{"a", p.label(a)}, {"b", p.label(b)}},
                                   "meet table disagrees with the order");
  }
  if (s.join) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lub(p, {a, b}) != std::optional<int>((*s.join)[a][b]))
          return CheckReport::fail("posemigroup.join", {{"a", p.label(a)}, {"b", p.label(b)}},
                                   "join table disagrees with the order");
  }
  return CheckReport::pass("posemigroup");
}

// Residuals by maximum-of-set scan; nullopt when some bound set lacks a
// greatest element (including the empty set).
inline std::optional<ResiduatedStructure> compute_residuals(const Posemigroup& s) {
  detail::require_posemigroup_shape(s);
  const int n = s.size();
  ResiduatedStructure r;
  r.base = s;
  r.lres.assign(n, std::vector<int>(n, kAbsent));
  r.rres.assign(n, std::vector<int>(n, kAbsent));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      auto m = max_satisfying(s.poset, [&](int b) { return s.poset.le(s.mul[a][b], c); });
      if (!m) return std::nullopt;
      r.lres[a][c] = *m;
    }
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      auto m = max_satisfying(s.poset, [&](int a) { return s.poset.le(s.mul[a][b], c); });
      if (!m) return std::nullopt;
      r.rres[c][b] = *m;
    }
  return r;
}

namespace detail {

// Shared by the unital and unit-free variants.
inline CheckReport check_residuated_core(const ResiduatedStructure& r, bool requireUnit) {
  const Posemigroup& s = r.base;
  require_posemigroup_shape(s);
  require_table(r.lres, s.size(), s.size(), s.size(), "lres");
  require_table(r.rres, s.size(), s.size(), s.size(), "rres");
  if (!s.meet || !s.join)
    throw Error(Errc::MissingComponent, "residuated lattice checks need meet and join tables");
  if (requireUnit && !s.unit)
    throw Error(Errc::MissingComponent, "residuated lattice checks need a unit");
  if (auto c = check_posemigroup(s); !c.passed) return c;
  const Poset& p = s.poset;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const bool prod = p.le(s.mul[a][b], c);
        if (p.le(b, r.lres[a][c]) != prod)
          return CheckReport::fail(
              "residuated.residuation",
              {{"a", p.label(a)}, {"b", p.label(b)}, {"c", p.label(c)}},
              "b <= a\\c does not match a.b <= c");
        if (p.le(a, r.rres[c][b]) != prod)
          return CheckReport::fail(
              "residuated.residuation",
              {{"a", p.label(a)}, {"b", p.label(b)}, {"c", p.label(c)}},
              "a <= c/b does not match a.b <= c");
      }
  return CheckReport::pass(requireUnit ? "residuated-lattice" : "residuated-ell-semigroup");
}

}  // namespace detail

// Residuated lattice-ordered semigroup: no unit requirement.
inline CheckReport check_residuated_ell_semigroup(const ResiduatedStructure& r) {
  return detail::check_residuated_core(r, false);
}

inline CheckReport check_residuated_lattice(const ResiduatedStructure& r) {
  return detail::check_residuated_core(r, true);
}

inline CheckReport check_brouwerian(const BrouwerianAlgebra& b) {
  const Poset& p = b.poset;
  detail::require_square(p.leq, p.size, "leq");
  detail::require_table(b.meet, b.size(), b.size(), b.size(), "meet");
  detail::require_table(b.join, b.size(), b.size(), b.size(), "join");
  detail::require_table(b.imp, b.size(), b.size(), b.size(), "imp");
  if (b.top < 0 || b.top >= b.size()) throw Error(Errc::DimensionMismatch, "top out of range");
  if (b.point && (*b.point < 0 || *b.point >= b.size()))
    throw Error(Errc::DimensionMismatch, "point out of range");
  if (auto r = check_poset(p); !r.passed) return r;
  const int n = b.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (glb(p, {a, c}) != std::optional<int>(b.meet[a][c]))
        return CheckReport::fail("brouwerian.meet", {{"x", p.label(a)}, {"y", p.label(c)}});
      if (lub(p, {a, c}) != std::optional<int>(b.join[a][c]))
        return CheckReport::fail("brouwerian.join", {{"x", p.label(a)}, {"y", p.label(c)}});
    }
  for (int a = 0; a < n; ++a)
    if (!p.le(a, b.top)) return CheckReport::fail("brouwerian.top", {{"x", p.label(a)}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (b.meet[x][b.join[y][z]] != b.join[b.meet[x][y]][b.meet[x][z]])
          return CheckReport::fail(
              "brouwerian.distributivity",
              {{"x", p.label(x)}, {"y", p.label(y)}, {"z", p.label(z)}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.le(z, b.imp[x][y]) != p.le(b.meet[x][z], y))
          return CheckReport::fail(
              "brouwerian.pseudocomplement",
              {{"x", p.label(x)}, {"y", p.label(y)}, {"z", p.label(z)}},
              "z <= x->y does not match x^z <= y");
  return CheckReport::pass("brouwerian");
}

// Boolean-pointed: (x -> 0) -> 0 = x v 0 for the designated point 0.
inline CheckReport check_boolean_pointed(const BrouwerianAlgebra& b) {
  if (!b.point) throw Error(Errc::MissingPoint, "boolean-pointed check needs a point");
  if (auto r = check_brouwerian(b); !r.passed) return r;
  const int zero = *b.point;
  for (int x = 0; x < b.size(); ++x) {
    const int nn = b.imp[b.imp[x][zero]][zero];
    if (nn != b.join[x][zero])
      return CheckReport::fail("brouwerian.boolean-point", {{"x", b.label(x)}},
                               "~~x differs from x v 0");
  }
  return CheckReport::pass("boolean-pointed");
}

// A Brouwerian algebra viewed as a commutative residuated lattice with
// mul = meet and unit = top.
inline ResiduatedStructure residuated_of_brouwerian(const BrouwerianAlgebra& b) {
  ResiduatedStructure r;
  r.base.poset = b.poset;
  r.base.mul = b.meet;
  r.base.unit = b.top;
  r.base.meet = b.meet;
  r.base.join = b.join;
  r.lres = b.imp;
  // lres[a][x] = a\x but rres[x][a] = x/a, so the shared implication table
  // enters the right residual transposed.
  r.rres.assign(b.size(), std::vector<int>(b.size()));
  for (int x = 0; x < b.size(); ++x)
    for (int a = 0; a < b.size(); ++a) r.rres[x][a] = b.imp[a][x];
  r.point = b.point;
  return r;
}

// Inverse view; requires mul == meet, unit == top, and the two residuals
// describing the same binary operation.
inline BrouwerianAlgebra brouwerian_of_residuated(const ResiduatedStructure& r) {
  if (!r.base.meet || !r.base.join)
    throw Error(Errc::MissingComponent, "brouwerian view needs meet and join");
  if (!r.base.unit) throw Error(Errc::MissingComponent, "brouwerian view needs a unit");
  if (r.base.mul != *r.base.meet)
    throw Error(Errc::AxiomFailure, "brouwerian view needs mul = meet");
  for (int a = 0; a < r.size(); ++a)
    for (int x = 0; x < r.size(); ++x)
      if (r.rres[x][a] != r.lres[a][x])
        throw Error(Errc::AxiomFailure, "brouwerian view needs symmetric residuals");
  BrouwerianAlgebra b;
  b.poset = r.base.poset;
  b.meet = *r.base.meet;
  b.join = *r.base.join;
  b.imp = r.lres;
  b.top = *r.base.unit;
  b.point = r.point;
  return b;
}

}  // namespace nagata
