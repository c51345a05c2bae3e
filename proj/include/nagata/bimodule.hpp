#pragma once

// Biactions of a posemigroup S on a join-semilattice M, their positional
// residuals, and the division bimodule of a residuated lattice.

#include <optional>
#include <string>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/core.hpp"

namespace nagata {

// The four action residuals. Orientation:
//   x <= bslres[a][y]  iff  a*x <= y  iff  a <= slres[y][x]
//   x <= srres[y][a]   iff  x*a <= y  iff  a <= bsrres[x][y]
struct ActionResiduals {
  Table bslres;  // |S| x |M| -> M
  Table slres;   // |M| x |M| -> S
  Table bsrres;  // |M| x |M| -> S
  Table srres;   // |M| x |S| -> M

  bool operator==(const ActionResiduals&) const = default;
};

struct Bimodule {
  Posemigroup scalars;                  // S, with optional unit/meet/join
  std::optional<Table> scalarLres;      // a\b in S, when S is residuated
  std::optional<Table> scalarRres;      // a/b in S
  Poset module;                         // M
  Table moduleJoin;                     // total join on M
  std::optional<Table> moduleMeet;
  Table lact;                           // |S| x |M|: a*x
  Table ract;                           // |M| x |S|: x*a
  std::optional<int> point;             // 0 in M
  std::optional<ActionResiduals> residuals;

  int scalarCount() const { return scalars.size(); }
  int moduleCount() const { return module.size; }
  std::string scalarLabel(int a) const { return scalars.label(a); }
  std::string moduleLabel(int x) const { return module.label(x); }

  bool doublyResiduated() const {
    return residuals.has_value() && scalarLres.has_value() && scalarRres.has_value();
  }

  bool operator==(const Bimodule&) const = default;
};

enum class BimoduleLevel { Biaction, Bimodule, Residuated, Unital, Cyclic };

inline const char* bimodule_level_name(BimoduleLevel l) {
  switch (l) {
    case BimoduleLevel::Biaction: return "biaction";
    case BimoduleLevel::Bimodule: return "bimodule";
    case BimoduleLevel::Residuated: return "residuated";
    case BimoduleLevel::Unital: return "unital";
    case BimoduleLevel::Cyclic: return "cyclic";
  }
  return "biaction";
}

inline std::optional<BimoduleLevel> bimodule_level_from(const std::string& s) {
  if (s == "biaction") return BimoduleLevel::Biaction;
  if (s == "bimodule") return BimoduleLevel::Bimodule;
  if (s == "residuated") return BimoduleLevel::Residuated;
  if (s == "unital") return BimoduleLevel::Unital;
  if (s == "cyclic") return BimoduleLevel::Cyclic;
  return std::nullopt;
}

namespace detail {

inline void require_bimodule_shape(const Bimodule& m) {
  require_posemigroup_shape(m.scalars);
  require_square(m.module.leq, m.module.size, "module leq");
  const int ns = m.scalarCount(), nm = m.moduleCount();
  require_table(m.moduleJoin, nm, nm, nm, "module join");
  if (m.moduleMeet) require_table(*m.moduleMeet, nm, nm, nm, "module meet");
  require_table(m.lact, ns, nm, nm, "lact");
  require_table(m.ract, nm, ns, nm, "ract");
  if (m.scalarLres) require_table(*m.scalarLres, ns, ns, ns, "scalar lres");
  if (m.scalarRres) require_table(*m.scalarRres, ns, ns, ns, "scalar rres");
  if (m.point && (*m.point < 0 || *m.point >= nm))
    throw Error(Errc::DimensionMismatch, "point out of range");
  if (m.residuals) {
    require_table(m.residuals->bslres, ns, nm, nm, "bslres");
    require_table(m.residuals->slres, nm, nm, ns, "slres");
    require_table(m.residuals->bsrres, nm, nm, ns, "bsrres");
    require_table(m.residuals->srres, nm, ns, nm, "srres");
  }
}

}  // namespace detail

// Cumulative checks: biaction < bimodule < residuated < unital < cyclic.
inline CheckReport check_bimodule(const Bimodule& m, BimoduleLevel level) {
  detail::require_bimodule_shape(m);
  const Poset& mp = m.module;
  const Poset& sp = m.scalars.poset;
  const int ns = m.scalarCount(), nm = m.moduleCount();

  if (auto r = check_posemigroup(m.scalars); !r.passed) return r;
  if (auto r = check_poset(mp); !r.passed) return r;

  // Biaction: mixed associativity plus isotonicity in every argument.
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int x = 0; x < nm; ++x) {
        if (m.lact[m.scalars.mul[a][b]][x] != m.lact[a][m.lact[b][x]])
          return CheckReport::fail(
              "bimodule.action-associativity",
              {{"a", m.scalarLabel(a)}, {"b", m.scalarLabel(b)}, {"x", m.moduleLabel(x)}},
              "(a.b)*x differs from a*(b*x)");
        if (m.ract[m.ract[x][a]][b] != m.ract[x][m.scalars.mul[a][b]])
          return CheckReport::fail(
              "bimodule.action-associativity",
              {{"a", m.scalarLabel(a)}, {"b", m.scalarLabel(b)}, {"x", m.moduleLabel(x)}},
              "(x*a)*b differs from x*(a.b)");
        if (m.ract[m.lact[a][x]][b] != m.lact[a][m.ract[x][b]])
          return CheckReport::fail(
              "bimodule.action-associativity",
              {{"a", m.scalarLabel(a)}, {"b", m.scalarLabel(b)}, {"x", m.moduleLabel(x)}},
              "(a*x)*b differs from a*(x*b)");
      }
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b) {
      if (!sp.le(a, b)) continue;
      for (int x = 0; x < nm; ++x) {
        if (!mp.le(m.lact[a][x], m.lact[b][x]))
          return CheckReport::fail(
              "bimodule.action-isotonicity",
              {{"a", m.scalarLabel(a)}, {"b", m.scalarLabel(b)}, {"x", m.moduleLabel(x)}},
              "left action not isotone in the scalar");
        if (!mp.le(m.ract[x][a], m.ract[x][b]))
          return CheckReport::fail(
              "bimodule.action-isotonicity",
              {{"a", m.scalarLabel(a)}, {"b", m.scalarLabel(b)}, {"x", m.moduleLabel(x)}},
              "right action not isotone in the scalar");
      }
    }
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      if (!mp.le(x, y)) continue;
      for (int a = 0; a < ns; ++a) {
        if (!mp.le(m.lact[a][x], m.lact[a][y]))
          return CheckReport::fail(
              "bimodule.action-isotonicity",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "left action not isotone in the module argument");
        if (!mp.le(m.ract[x][a], m.ract[y][a]))
          return CheckReport::fail(
              "bimodule.action-isotonicity",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "right action not isotone in the module argument");
      }
    }
  if (level == BimoduleLevel::Biaction) return CheckReport::pass("bimodule.biaction");

  // Bimodule: the join table is the lub and both actions distribute over it.
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y)
      if (lub(mp, {x, y}) != std::optional<int>(m.moduleJoin[x][y]))
        return CheckReport::fail("bimodule.module-join",
                                 {{"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
                                 "module join table disagrees with the order");
  if (m.moduleMeet) {
    for (int x = 0; x < nm; ++x)
      for (int y = 0; y < nm; ++y)
        if (glb(mp, {x, y}) != std::optional<int>((*m.moduleMeet)[x][y]))
          return CheckReport::fail("bimodule.module-meet",
                                   {{"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
                                   "module meet table disagrees with the order");
  }
  for (int a = 0; a < ns; ++a)
    for (int x = 0; x < nm; ++x)
      for (int y = 0; y < nm; ++y) {
        if (m.lact[a][m.moduleJoin[x][y]] != m.moduleJoin[m.lact[a][x]][m.lact[a][y]])
          return CheckReport::fail(
              "bimodule.join-distribution",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "a*(x v y) differs from a*x v a*y");
        if (m.ract[m.moduleJoin[x][y]][a] != m.moduleJoin[m.ract[x][a]][m.ract[y][a]])
          return CheckReport::fail(
              "bimodule.join-distribution",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "(x v y)*a differs from x*a v y*a");
      }
  if (level == BimoduleLevel::Bimodule) return CheckReport::pass("bimodule");

  // Residuated: the four tables satisfy both three-way equivalences.
  if (!m.residuals)
    throw Error(Errc::MissingComponent, "residuated bimodule check needs the residual tables");
  const ActionResiduals& r = *m.residuals;
  for (int a = 0; a < ns; ++a)
    for (int x = 0; x < nm; ++x)
      for (int y = 0; y < nm; ++y) {
        const bool left = mp.le(m.lact[a][x], y);
        if (mp.le(x, r.bslres[a][y]) != left)
          return CheckReport::fail(
              "bimodule.residuation",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "x <= a\\*y does not match a*x <= y");
        if (sp.le(a, r.slres[y][x]) != left)
          return CheckReport::fail(
              "bimodule.residuation",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "a <= y/*x does not match a*x <= y");
        const bool right = mp.le(m.ract[x][a], y);
        if (mp.le(x, r.srres[y][a]) != right)
          return CheckReport::fail(
              "bimodule.residuation",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "x <= y*/a does not match x*a <= y");
        if (sp.le(a, r.bsrres[x][y]) != right)
          return CheckReport::fail(
              "bimodule.residuation",
              {{"a", m.scalarLabel(a)}, {"x", m.moduleLabel(x)}, {"y", m.moduleLabel(y)}},
              "a <= x*\\y does not match x*a <= y");
      }
  if (level == BimoduleLevel::Residuated) return CheckReport::pass("bimodule.residuated");

  // Unital: the scalar unit acts as identity on the module.
  if (!m.scalars.unit)
    throw Error(Errc::MissingComponent, "unital bimodule check needs a scalar unit");
  for (int x = 0; x < nm; ++x)
    if (m.lact[*m.scalars.unit][x] != x || m.ract[x][*m.scalars.unit] != x)
      return CheckReport::fail("bimodule.unit", {{"x", m.moduleLabel(x)}},
                               "scalar unit does not act as identity");
  if (level == BimoduleLevel::Unital) return CheckReport::pass("bimodule.unital");

  // Cyclic: a*0 = 0*a for the designated point.
  if (!m.point) throw Error(Errc::MissingPoint, "cyclic bimodule check needs a point");
  for (int a = 0; a < ns; ++a)
    if (m.lact[a][*m.point] != m.ract[*m.point][a])
      return CheckReport::fail("bimodule.cyclic", {{"a", m.scalarLabel(a)}},
                               "a*0 differs from 0*a");
  return CheckReport::pass("bimodule.cyclic");
}

// Semantic residuals by maximum-of-set scans; nullopt when any maximum is
// missing. Independent of the closed forms used by the constructions.
inline std::optional<ActionResiduals> compute_action_residuals(const Bimodule& m) {
  detail::require_bimodule_shape(m);
  const int ns = m.scalarCount(), nm = m.moduleCount();
  ActionResiduals r;
  r.bslres.assign(ns, std::vector<int>(nm, kAbsent));
  r.slres.assign(nm, std::vector<int>(nm, kAbsent));
  r.bsrres.assign(nm, std::vector<int>(nm, kAbsent));
  r.srres.assign(nm, std::vector<int>(ns, kAbsent));
  for (int a = 0; a < ns; ++a)
    for (int y = 0; y < nm; ++y) {
      auto v = max_satisfying(m.module, [&](int x) { return m.module.le(m.lact[a][x], y); });
      if (!v) return std::nullopt;
      r.bslres[a][y] = *v;
    }
  for (int y = 0; y < nm; ++y)
    for (int x = 0; x < nm; ++x) {
      auto v = max_satisfying(m.scalars.poset,
                              [&](int a) { return m.module.le(m.lact[a][x], y); });
      if (!v) return std::nullopt;
      r.slres[y][x] = *v;
    }
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      auto v = max_satisfying(m.scalars.poset,
                              [&](int a) { return m.module.le(m.ract[x][a], y); });
      if (!v) return std::nullopt;
      r.bsrres[x][y] = *v;
    }
  for (int y = 0; y < nm; ++y)
    for (int a = 0; a < ns; ++a) {
      auto v = max_satisfying(m.module, [&](int x) { return m.module.le(m.ract[x][a], y); });
      if (!v) return std::nullopt;
      r.srres[y][a] = *v;
    }
  return r;
}

// Division bimodule of a residuated lattice L: S = L acting on the order
// dual of L by a*x = x/a and x*a = a\x. Doubly residuated, unital when L
// has a unit, cyclic at zero iff a\zero = zero/a for all a.
inline Bimodule division_bimodule(const ResiduatedStructure& L, std::optional<int> zero) {
  if (!L.base.meet || !L.base.join)
    throw Error(Errc::MissingComponent, "division bimodule needs lattice tables on L");
  const int n = L.size();
  Bimodule m;
  m.scalars = L.base;
  m.scalarLres = L.lres;
  m.scalarRres = L.rres;
  m.module = dualize(L.base.poset);
  m.moduleJoin = *L.base.meet;  // join in the dual is meet in L
  m.moduleMeet = *L.base.join;
  m.lact.assign(n, std::vector<int>(n, 0));
  m.ract.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      m.lact[a][x] = L.rres[x][a];  // x/a
      m.ract[x][a] = L.lres[a][x];  // a\x
    }
  ActionResiduals r;
  r.bslres.assign(n, std::vector<int>(n, 0));
  r.slres.assign(n, std::vector<int>(n, 0));
  r.bsrres.assign(n, std::vector<int>(n, 0));
  r.srres.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      r.bsrres[x][y] = L.rres[x][y];  // x/y
      r.slres[x][y] = L.lres[x][y];   // x\y, see the residuation law
    }
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y) {
      r.bslres[a][y] = L.base.mul[y][a];  // y.a
      r.srres[y][a] = L.base.mul[a][y];   // a.y
    }
  m.residuals = r;
  if (zero) {
    if (*zero < 0 || *zero >= n) throw Error(Errc::DimensionMismatch, "zero out of range");
    m.point = zero;
  }
  return m;
}

inline bool bimodule_is_cyclic(const Bimodule& m) {
  if (!m.point) return false;
  for (int a = 0; a < m.scalarCount(); ++a)
    if (m.lact[a][*m.point] != m.ract[*m.point][a]) return false;
  return true;
}

// Consequences of module bounds: bottom is a two-sided action zero and the
// scalar poset has a top computable from either bound via the residuals.
// Vacuous pass when M has neither bound.
inline CheckReport check_top_bottom_consequences(const Bimodule& m) {
  detail::require_bimodule_shape(m);
  if (!m.residuals)
    throw Error(Errc::MissingComponent, "bound consequences need the residual tables");
  const auto bot = bottom_of(m.module);
  const auto top = top_of(m.module);
  if (!bot && !top) return CheckReport::pass("bimodule.bounds");
  const ActionResiduals& r = *m.residuals;
  if (bot) {
    for (int a = 0; a < m.scalarCount(); ++a)
      if (m.lact[a][*bot] != *bot || m.ract[*bot][a] != *bot)
        return CheckReport::fail("bimodule.bounds.bottom-zero", {{"a", m.scalarLabel(a)}},
                                 "module bottom is not an action zero");
  }
  const auto stop = top_of(m.scalars.poset);
  if (!stop)
    return CheckReport::fail("bimodule.bounds.scalar-top", {},
                             "bounded module forces a scalar top, none exists");
  if (bot) {
    if (r.bsrres[*bot][*bot] != *stop || r.slres[*bot][*bot] != *stop)
      return CheckReport::fail("bimodule.bounds.scalar-top", {{"x", m.moduleLabel(*bot)}},
                               "residual at the bottom does not give the scalar top");
  }
  if (top) {
    for (int x = 0; x < m.moduleCount(); ++x)
      if (r.bsrres[x][*top] != *stop || r.slres[*top][x] != *stop)
        return CheckReport::fail("bimodule.bounds.scalar-top", {{"x", m.moduleLabel(x)}},
                                 "residual into the top does not give the scalar top");
  }
  return CheckReport::pass("bimodule.bounds");
}

}  // namespace nagata
