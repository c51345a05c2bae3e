#pragma once

// Twistable pairs of posemigroups, the bimodule they induce, (restricted)
// twist products with strong negation, and the untwist construction that
// recovers the pair from a Nagata structure with strong negation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/product.hpp"

namespace nagata {

// Two sorts linked by an adjoint retraction pair: lam is a left adjoint and
// left inverse of rho. The negative sort must carry a meet and residuals;
// the positive sort carries them only at the residuated-lattice level.
struct TwistablePair {
  Posemigroup plus;
  std::optional<Table> plusLres;
  std::optional<Table> plusRres;
  Posemigroup minus;   // meet table required by every construction
  Table minusLres;     // x\y in the negative sort
  Table minusRres;     // x/y in the negative sort
  std::vector<int> lam;  // |plus| -> minus
  std::vector<int> rho;  // |minus| -> plus
  std::optional<int> point;  // element of the negative sort

  int plusCount() const { return plus.size(); }
  int minusCount() const { return minus.size(); }

  bool operator==(const TwistablePair&) const = default;
};

enum class TwistLevel { Posemigroup, ResiduatedLattice };

inline const char* twist_level_name(TwistLevel l) {
  return l == TwistLevel::Posemigroup ? "posemigroup" : "residuated-lattice";
}

inline std::optional<TwistLevel> twist_level_from(const std::string& s) {
  if (s == "posemigroup") return TwistLevel::Posemigroup;
  if (s == "residuated-lattice") return TwistLevel::ResiduatedLattice;
  return std::nullopt;
}

namespace detail {

inline void require_twistable_shape(const TwistablePair& t) {
  require_posemigroup_shape(t.plus);
  require_posemigroup_shape(t.minus);
  const int np = t.plusCount(), nm = t.minusCount();
  require_table(t.minusLres, nm, nm, nm, "minus lres");
  require_table(t.minusRres, nm, nm, nm, "minus rres");
  if (t.plusLres) require_table(*t.plusLres, np, np, np, "plus lres");
  if (t.plusRres) require_table(*t.plusRres, np, np, np, "plus rres");
  require_map(t.lam, np, nm, "lam");
  require_map(t.rho, nm, np, "rho");
  if (t.point && (*t.point < 0 || *t.point >= nm))
    throw Error(Errc::DimensionMismatch, "point out of range");
}

inline CheckReport relabel(CheckReport r, const std::string& prefix) {
  if (!r.passed) r.axiom = prefix + r.axiom;
  return r;
}

}  // namespace detail

// Axiom suite for twistable pairs. The cyclicity of the point is checked
// whenever a point is present, at either level.
inline CheckReport check_twistable_pair(const TwistablePair& t, TwistLevel level) {
  detail::require_twistable_shape(t);
  if (!t.minus.meet)
    throw Error(Errc::MissingComponent, "the negative sort needs a meet table");
  if (auto r = detail::relabel(check_posemigroup(t.plus), "twist.plus."); !r.passed) return r;
  if (auto r = detail::relabel(check_posemigroup(t.minus), "twist.minus."); !r.passed) return r;

  const Poset& pp = t.plus.poset;
  const Poset& mp = t.minus.poset;
  const int np = t.plusCount(), nm = t.minusCount();

  // Residuation law of the negative sort (a meet semilattice residuated
  // posemigroup even at the base level).
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b)
      for (int c = 0; c < nm; ++c) {
        const bool prod = mp.le(t.minus.mul[a][b], c);
        if (mp.le(b, t.minusLres[a][c]) != prod)
          return CheckReport::fail(
              "twist.minus.residuation",
              {{"a", mp.label(a)}, {"b", mp.label(b)}, {"c", mp.label(c)}},
              "b <= a\\c does not match a.b <= c");
        if (mp.le(a, t.minusRres[c][b]) != prod)
          return CheckReport::fail(
              "twist.minus.residuation",
              {{"a", mp.label(a)}, {"b", mp.label(b)}, {"c", mp.label(c)}},
              "a <= c/b does not match a.b <= c");
      }

  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      if (pp.le(a, b) && !mp.le(t.lam[a], t.lam[b]))
        return CheckReport::fail("twist.lambda.isotone", {{"a", pp.label(a)}, {"b", pp.label(b)}});
      if (t.lam[t.plus.mul[a][b]] != t.minus.mul[t.lam[a]][t.lam[b]])
        return CheckReport::fail("twist.lambda.mul", {{"a", pp.label(a)}, {"b", pp.label(b)}});
    }
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      if (mp.le(x, y) && !pp.le(t.rho[x], t.rho[y]))
        return CheckReport::fail("twist.rho.isotone", {{"x", mp.label(x)}, {"y", mp.label(y)}});
      if (t.rho[t.minus.mul[x][y]] != t.plus.mul[t.rho[x]][t.rho[y]])
        return CheckReport::fail("twist.rho.mul", {{"x", mp.label(x)}, {"y", mp.label(y)}});
    }
  for (int a = 0; a < np; ++a)
    for (int x = 0; x < nm; ++x)
      if (mp.le(t.lam[a], x) != pp.le(a, t.rho[x]))
        return CheckReport::fail("twist.adjunction", {{"a", pp.label(a)}, {"x", mp.label(x)}},
                                 "lam a <= x does not match a <= rho x");
  for (int x = 0; x < nm; ++x)
    if (t.lam[t.rho[x]] != x)
      return CheckReport::fail("twist.retraction", {{"x", mp.label(x)}});

  if (level == TwistLevel::ResiduatedLattice) {
    if (!t.plusLres || !t.plusRres)
      throw Error(Errc::MissingComponent, "the positive sort needs residual tables");
    ResiduatedStructure rp;
    rp.base = t.plus;
    rp.lres = *t.plusLres;
    rp.rres = *t.plusRres;
    if (auto r = detail::relabel(check_residuated_lattice(rp), "twist.plus."); !r.passed)
      return r;
    ResiduatedStructure rm;
    rm.base = t.minus;
    rm.lres = t.minusLres;
    rm.rres = t.minusRres;
    if (auto r = detail::relabel(check_residuated_lattice(rm), "twist.minus."); !r.passed)
      return r;
    if (t.rho[*t.minus.unit] != *t.plus.unit)
      return CheckReport::fail("twist.rho.unit", {{"1", mp.label(*t.minus.unit)}});
  }

  if (t.point) {
    const int zero = *t.point;
    for (int a = 0; a < np; ++a)
      if (t.minusLres[t.lam[a]][zero] != t.minusRres[zero][t.lam[a]])
        return CheckReport::fail("twist.point.cyclic", {{"a", pp.label(a)}},
                                 "lam a\\0 differs from 0/lam a");
  }
  return CheckReport::pass(level == TwistLevel::ResiduatedLattice
                               ? "twistable-pair-residuated-lattice"
                               : "twistable-pair-posemigroup");
}

// The positive sort acting on the order dual of the negative sort by
// division through lam: a*x = x/lam a and x*a = lam a\x.
inline Bimodule induced_bimodule(const TwistablePair& t) {
  detail::require_twistable_shape(t);
  if (!t.minus.meet)
    throw Error(Errc::MissingComponent, "the induced bimodule needs the negative meet");
  const int np = t.plusCount(), nm = t.minusCount();

  Bimodule m;
  m.scalars = t.plus;
  m.scalarLres = t.plusLres;
  m.scalarRres = t.plusRres;
  m.module = dualize(t.minus.poset);
  m.moduleJoin = *t.minus.meet;
  if (t.minus.join) m.moduleMeet = *t.minus.join;
  m.lact.assign(np, std::vector<int>(nm, 0));
  m.ract.assign(nm, std::vector<int>(np, 0));
  for (int a = 0; a < np; ++a)
    for (int x = 0; x < nm; ++x) {
      m.lact[a][x] = t.minusRres[x][t.lam[a]];
      m.ract[x][a] = t.minusLres[t.lam[a]][x];
    }
  m.point = t.point;

  ActionResiduals r;
  r.bslres.assign(np, std::vector<int>(nm, 0));
  r.slres.assign(nm, std::vector<int>(nm, 0));
  r.bsrres.assign(nm, std::vector<int>(nm, 0));
  r.srres.assign(nm, std::vector<int>(np, 0));
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      r.bsrres[x][y] = t.rho[t.minusRres[x][y]];
      r.slres[y][x] = t.rho[t.minusLres[y][x]];
    }
  for (int a = 0; a < np; ++a)
    for (int y = 0; y < nm; ++y) {
      r.bslres[a][y] = t.minus.mul[y][t.lam[a]];
      r.srres[y][a] = t.minus.mul[t.lam[a]][y];
    }
  m.residuals = std::move(r);
  return m;
}

namespace detail {

inline StructuredProduct twist_product_impl(const TwistablePair& t, bool restricted) {
  const Bimodule bm = induced_bimodule(t);
  StructuredProduct sp = structured_nagata_product(bm, restricted);
  EndoMap neg;
  neg.table.resize(sp.ctx.size());
  for (int i = 0; i < sp.ctx.size(); ++i) {
    const auto [a, x] = sp.ctx.pairOf(i);
    neg.table[i] = member(sp.ctx, t.rho[x], t.lam[a], bm, "negation");
  }
  sp.algebra.negation = std::move(neg);
  return sp;
}

}  // namespace detail

// Twist products require a cyclic point for the recovery maps, like every
// structured product.
inline StructuredProduct twist_product(const TwistablePair& t) {
  return detail::twist_product_impl(t, false);
}

inline StructuredProduct restricted_twist_product(const TwistablePair& t) {
  return detail::twist_product_impl(t, true);
}

// Strong negation axioms over a Nagata structure, phrased with the partial
// gamma-residuals. Antitonicity is included: the untwist construction
// depends on it.
inline CheckReport check_strong_negation(const NagataStructure& n) {
  if (!n.negation) throw Error(Errc::MissingComponent, "strong negation checks need negation");
  const EndoMap& ng = *n.negation;
  detail::require_map(ng.table, n.size(), n.size(), "negation");
  const Poset& p = n.carrier.poset;
  const auto sig = [&](int i) { return n.sigma(i); };
  const auto gam = [&](int i) { return n.gamma(i); };
  const int sz = n.size();

  for (int x = 0; x < sz; ++x) {
    const auto w = std::vector<WitnessEntry>{{"x", n.label(x)}};
    if (!p.le(x, ng(ng(x))))
      return CheckReport::fail("negation.double-expansion", w);
    if (ng(ng(ng(x))) != ng(x))
      return CheckReport::fail("negation.triple-collapse", w);
    if (ng(sig(ng(x))) != gam(x))
      return CheckReport::fail("negation.sigma-gamma", w, "neg sigma neg x differs from gamma x");
    if (ng(gam(ng(x))) != ng(ng(sig(x))))
      return CheckReport::fail("negation.gamma-sigma", w,
                               "neg gamma neg x differs from neg neg sigma x");
    if (ng(ng(sig(x))) != sig(ng(ng(x))))
      return CheckReport::fail("negation.sigma-commute", w);
  }
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      const auto w = std::vector<WitnessEntry>{{"x", n.label(x)}, {"y", n.label(y)}};
      if (p.le(x, y) && !p.le(ng(y), ng(x)))
        return CheckReport::fail("negation.antitone", w);
      const int l1 = n.gresL[ng(x)][gam(y)];
      const int r1 = n.gresR[gam(x)][ng(y)];
      const int l2 = n.gresL[ng(ng(y))][gam(ng(x))];
      const int l3 = n.gresL[ng(y)][gam(x)];
      if (l1 == kAbsent || r1 == kAbsent || l2 == kAbsent || l3 == kAbsent)
        return CheckReport::fail("negation.defined", w,
                                 "a gamma-residual cell required by the axioms is undefined");
      if (gam(l1) != gam(r1))
        return CheckReport::fail("negation.gres-swap", w,
                                 "gamma(neg x\\gamma y) differs from gamma(gamma x/neg y)");
      if (gam(l2) != gam(ng(n.carrier.mul[x][y])))
        return CheckReport::fail("negation.gres-mul", w,
                                 "gamma(neg neg y\\gamma neg x) differs from gamma neg(x.y)");
      if (n.carrier.mul[sig(ng(x))][sig(ng(y))] != sig(ng(l3)))
        return CheckReport::fail("negation.sigma-mul", w,
                                 "sigma neg x.sigma neg y differs from sigma neg(neg y\\gamma x)");
    }
  return CheckReport::pass("strong-negation");
}

// The stronger identities available when the carrier is fully residuated.
inline CheckReport check_strong_negation_residuated(const NagataStructure& n) {
  if (!n.negation) throw Error(Errc::MissingComponent, "strong negation checks need negation");
  if (!n.lres || !n.rres)
    throw Error(Errc::MissingComponent, "residuated negation checks need carrier residuals");
  const EndoMap& ng = *n.negation;
  const Table& lres = *n.lres;
  const Table& rres = *n.rres;
  const auto sig = [&](int i) { return n.sigma(i); };
  const auto gam = [&](int i) { return n.gamma(i); };
  for (int x = 0; x < n.size(); ++x)
    for (int y = 0; y < n.size(); ++y) {
      const auto w = std::vector<WitnessEntry>{{"x", n.label(x)}, {"y", n.label(y)}};
      if (gam(lres[ng(x)][y]) != gam(rres[x][ng(y)]))
        return CheckReport::fail("negation.res-swap", w,
                                 "gamma(neg x\\y) differs from gamma(x/neg y)");
      if (gam(lres[ng(ng(y))][ng(x)]) != gam(ng(n.carrier.mul[x][y])))
        return CheckReport::fail("negation.res-mul", w,
                                 "gamma(neg neg y\\neg x) differs from gamma neg(x.y)");
      if (n.carrier.mul[sig(ng(x))][sig(ng(y))] != sig(ng(lres[ng(y)][x])))
        return CheckReport::fail("negation.res-sigma-mul", w,
                                 "sigma neg x.sigma neg y differs from sigma neg(neg y\\x)");
    }
  return CheckReport::pass("strong-negation-residuated");
}

inline bool negation_is_involutive(const NagataStructure& n) {
  if (!n.negation) throw Error(Errc::MissingComponent, "involutivity check needs negation");
  for (int x = 0; x < n.size(); ++x)
    if ((*n.negation)((*n.negation)(x)) != x) return false;
  return true;
}

// Both directions of the collapse: the restricted twist negation is an
// involution exactly when rho o lam is the identity on the positive sort.
inline CheckReport check_involutive_collapse(const TwistablePair& t) {
  const StructuredProduct p = detail::twist_product_impl(t, true);
  const bool involutive = negation_is_involutive(p.algebra);
  int moved = kAbsent;
  for (int a = 0; a < t.plusCount(); ++a)
    if (t.rho[t.lam[a]] != a) {
      moved = a;
      break;
    }
  if (involutive && moved != kAbsent)
    return CheckReport::fail("involutive.collapse", {{"a", t.plus.label(moved)}},
                             "negation is involutive but rho(lam(a)) moves a");
  if (!involutive && moved == kAbsent) {
    for (int i = 0; i < p.algebra.size(); ++i)
      if ((*p.algebra.negation)((*p.algebra.negation)(i)) != i)
        return CheckReport::fail("involutive.collapse", {{"m", p.algebra.label(i)}},
                                 "rho o lam is the identity but the negation moves m");
  }
  return CheckReport::pass("involutive-collapse");
}

// Recovers the twistable pair from a Nagata structure with strong negation:
// the positive sort is the sigma-image, the negative sort is the order dual
// of the gamma-image with lam = gamma o neg and rho = sigma o neg.
inline TwistablePair untwist(const NagataStructure& n) {
  if (!n.negation) throw Error(Errc::MissingComponent, "untwist needs a strong negation");
  const EndoMap& ng = *n.negation;
  const StructuralBimodule F = structural_bimodule(n);
  const auto& A = F.scalarElems;
  const auto& X = F.moduleElems;
  const int np = static_cast<int>(A.size());
  const int nm = static_cast<int>(X.size());

  TwistablePair t;
  t.plus = F.bimodule.scalars;
  t.plusLres = F.bimodule.scalarLres;
  t.plusRres = F.bimodule.scalarRres;

  t.lam.resize(np);
  for (int a = 0; a < np; ++a) {
    t.lam[a] = F.modulePos(n.gamma(ng(A[a])));
    if (t.lam[a] == kAbsent)
      throw Error(Errc::AxiomFailure, "lam leaves the gamma-image at " + n.label(A[a]));
  }
  t.rho.resize(nm);
  for (int x = 0; x < nm; ++x) {
    t.rho[x] = F.scalarPos(n.sigma(ng(X[x])));
    if (t.rho[x] == kAbsent)
      throw Error(Errc::AxiomFailure, "rho leaves the sigma-image at " + n.label(X[x]));
  }

  t.minus.poset = dualize(F.bimodule.module);
  t.minus.mul.assign(nm, std::vector<int>(nm, 0));
  t.minusLres.assign(nm, std::vector<int>(nm, 0));
  t.minusRres.assign(nm, std::vector<int>(nm, 0));
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      // x.y = lam(rho x.rho y); residuals transport through the negation.
      const int prod = n.carrier.mul[A[t.rho[x]]][A[t.rho[y]]];
      t.minus.mul[x][y] = F.modulePos(n.gamma(ng(prod)));
      t.minusLres[x][y] = F.modulePos(n.gamma(n.carrier.mul[X[y]][ng(X[x])]));
      t.minusRres[x][y] = F.modulePos(n.gamma(n.carrier.mul[ng(X[y])][X[x]]));
      if (t.minus.mul[x][y] == kAbsent || t.minusLres[x][y] == kAbsent ||
          t.minusRres[x][y] == kAbsent)
        throw Error(Errc::AxiomFailure, "negative-sort operation leaves the gamma-image at " +
                                            n.label(X[x]) + ", " + n.label(X[y]));
    }
  // The meet of the negative sort is the gamma-join; its join is the meet
  // of the gamma-image when that exists.
  t.minus.meet = F.bimodule.moduleJoin;
  if (F.bimodule.moduleMeet) t.minus.join = *F.bimodule.moduleMeet;
  if (t.plus.unit) t.minus.unit = t.lam[*t.plus.unit];
  t.point = F.bimodule.point;
  return t;
}

// Comparison map of a Nagata structure with strong negation into the
// restricted (or full) twist product of its untwisting.
inline CheckReport verify_negation_unit_map(const NagataStructure& n, bool restricted) {
  const StructuralBimodule F = structural_bimodule(n);
  const TwistablePair t = untwist(n);
  const StructuredProduct T = detail::twist_product_impl(t, restricted);
  std::vector<int> u;
  return detail::comparison_checks(n, F, T, u);
}

// Counit direction for pairs: the embeddings of the two sorts into the
// restricted twist product identify the pair with its untwisting.
inline CheckReport verify_twist_counit(const TwistablePair& t) {
  const StructuredProduct T = restricted_twist_product(t);
  const TwistablePair back = untwist(T.algebra);
  const StructuralBimodule F = structural_bimodule(T.algebra);
  const Bimodule bm = induced_bimodule(t);
  const int np = t.plusCount(), nm = t.minusCount();

  // Sort embeddings, as positions inside the untwisted pair.
  std::vector<int> eP(np);
  std::vector<int> eM(nm);
  for (int a = 0; a < np; ++a) {
    const auto [sa, sx] = embed_scalar(bm, a);
    const int idx = T.ctx.indexOf(sa, sx);
    const int pos = idx == kAbsent ? kAbsent : F.scalarPos(idx);
    if (pos == kAbsent)
      return CheckReport::fail("twist-counit.plus-bijective", {{"a", t.plus.label(a)}},
                               "scalar embedding misses the sigma-image");
    eP[a] = pos;
  }
  for (int x = 0; x < nm; ++x) {
    const auto [ga, gx] = embed_module(bm, x);
    const int idx = T.ctx.indexOf(ga, gx);
    const int pos = idx == kAbsent ? kAbsent : F.modulePos(idx);
    if (pos == kAbsent)
      return CheckReport::fail("twist-counit.minus-bijective", {{"x", t.minus.label(x)}},
                               "module embedding misses the gamma-image");
    eM[x] = pos;
  }
  if (static_cast<int>(back.plusCount()) != np)
    return CheckReport::fail("twist-counit.plus-bijective",
                             {{"plus", std::to_string(back.plusCount())}});
  if (static_cast<int>(back.minusCount()) != nm)
    return CheckReport::fail("twist-counit.minus-bijective",
                             {{"minus", std::to_string(back.minusCount())}});

  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      const auto w = std::vector<WitnessEntry>{{"a", t.plus.label(a)}, {"b", t.plus.label(b)}};
      if (t.plus.poset.le(a, b) != back.plus.poset.le(eP[a], eP[b]))
        return CheckReport::fail("twist-counit.plus-order", w);
      if (eP[t.plus.mul[a][b]] != back.plus.mul[eP[a]][eP[b]])
        return CheckReport::fail("twist-counit.plus-mul", w);
      if (t.plusLres && back.plusLres &&
          eP[(*t.plusLres)[a][b]] != (*back.plusLres)[eP[a]][eP[b]])
        return CheckReport::fail("twist-counit.plus-lres", w);
      if (t.plusRres && back.plusRres &&
          eP[(*t.plusRres)[a][b]] != (*back.plusRres)[eP[a]][eP[b]])
        return CheckReport::fail("twist-counit.plus-rres", w);
    }
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      const auto w = std::vector<WitnessEntry>{{"x", t.minus.label(x)}, {"y", t.minus.label(y)}};
      if (t.minus.poset.le(x, y) != back.minus.poset.le(eM[x], eM[y]))
        return CheckReport::fail("twist-counit.minus-order", w);
      if (eM[t.minus.mul[x][y]] != back.minus.mul[eM[x]][eM[y]])
        return CheckReport::fail("twist-counit.minus-mul", w);
      if (eM[t.minusLres[x][y]] != back.minusLres[eM[x]][eM[y]])
        return CheckReport::fail("twist-counit.minus-lres", w);
      if (eM[t.minusRres[x][y]] != back.minusRres[eM[x]][eM[y]])
        return CheckReport::fail("twist-counit.minus-rres", w);
    }
  for (int a = 0; a < np; ++a)
    if (eM[t.lam[a]] != back.lam[eP[a]])
      return CheckReport::fail("twist-counit.lambda", {{"a", t.plus.label(a)}});
  for (int x = 0; x < nm; ++x)
    if (eP[t.rho[x]] != back.rho[eM[x]])
      return CheckReport::fail("twist-counit.rho", {{"x", t.minus.label(x)}});
  if (!back.point || !t.point || eM[*t.point] != *back.point)
    return CheckReport::fail("twist-counit.point", {{"0", t.point ? t.minus.label(*t.point)
                                                                  : std::string("absent")}});
  return CheckReport::pass("twist-counit");
}

// The identity pair over a residuated structure: both sorts coincide and
// lam = rho = id. Requires a meet on the carrier.
inline TwistablePair identity_pair(const ResiduatedStructure& r) {
  if (!r.base.meet)
    throw Error(Errc::MissingComponent, "the identity pair needs a meet table");
  TwistablePair t;
  t.plus = r.base;
  t.plusLres = r.lres;
  t.plusRres = r.rres;
  t.minus = r.base;
  t.minusLres = r.lres;
  t.minusRres = r.rres;
  const int n = r.size();
  t.lam.resize(n);
  t.rho.resize(n);
  for (int i = 0; i < n; ++i) t.lam[i] = t.rho[i] = i;
  t.point = r.point;
  return t;
}

}  // namespace nagata
