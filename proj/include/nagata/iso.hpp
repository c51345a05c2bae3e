#pragma once

// Isomorphism tests and canonical forms for the finite structures in this
// library. Views are non-owning: the viewed structure must outlive the view.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/fractions.hpp"
#include "nagata/twist.hpp"

namespace nagata {

// One sort of a structure: its order plus any square operation tables, unary
// maps into the same sort, and distinguished constants (kAbsent allowed).
struct SortView {
  int size = 0;
  const BoolTable* leq = nullptr;
  std::vector<const Table*> tables;
  std::vector<const std::vector<int>*> unary;
  std::vector<int> constants;
};

// A two-sorted structure: per-sort data, cross tables typed by the sorts of
// their rows, columns, and values, and maps between the sorts.
struct CrossView {
  const Table* table = nullptr;
  int rowSort = 0;
  int colSort = 0;
  int valueSort = 0;
};

struct PairView {
  std::array<SortView, 2> sorts;
  std::vector<CrossView> cross;
  std::vector<const std::vector<int>*> forward;   // sort 0 -> sort 1
  std::vector<const std::vector<int>*> backward;  // sort 1 -> sort 0
};

namespace detail {

constexpr int kCanonicalBound = 8;
constexpr int kIsoBound = 64;

inline bool same_shape(const SortView& a, const SortView& b) {
  return a.size == b.size && (a.leq == nullptr) == (b.leq == nullptr) &&
         a.tables.size() == b.tables.size() && a.unary.size() == b.unary.size() &&
         a.constants.size() == b.constants.size();
}

// Encodes the structure relabeled by perm (new index -> old index) into out.
// Values are shifted by one so kAbsent encodes as zero.
inline void encode_sort(const SortView& v, const std::vector<int>& perm,
                        const std::vector<int>& inv, std::string& out) {
  const int n = v.size;
  if (v.leq)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back((*v.leq)[perm[i]][perm[j]] ? 1 : 0);
  for (const Table* t : v.tables)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int val = (*t)[perm[i]][perm[j]];
        out.push_back(static_cast<char>(val == kAbsent ? 0 : inv[val] + 1));
      }
  for (const auto* u : v.unary)
    for (int i = 0; i < n; ++i) {
      const int val = (*u)[perm[i]];
      out.push_back(static_cast<char>(val == kAbsent ? 0 : inv[val] + 1));
    }
  for (int c : v.constants) out.push_back(static_cast<char>(c == kAbsent ? 0 : inv[c] + 1));
}

// Full equality check of b against a relabeled by perm (a index -> b index).
inline bool sort_matches(const SortView& a, const SortView& b, const std::vector<int>& perm) {
  const int n = a.size;
  if (a.leq)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((*a.leq)[i][j] != (*b.leq)[perm[i]][perm[j]]) return false;
  for (std::size_t t = 0; t < a.tables.size(); ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int av = (*a.tables[t])[i][j];
        const int bv = (*b.tables[t])[perm[i]][perm[j]];
        if (av == kAbsent ? bv != kAbsent : bv != perm[av]) return false;
      }
  for (std::size_t u = 0; u < a.unary.size(); ++u)
    for (int i = 0; i < n; ++i) {
      const int av = (*a.unary[u])[i];
      const int bv = (*b.unary[u])[perm[i]];
      if (av == kAbsent ? bv != kAbsent : bv != perm[av]) return false;
    }
  for (std::size_t c = 0; c < a.constants.size(); ++c) {
    const int av = a.constants[c];
    const int bv = b.constants[c];
    if (av == kAbsent ? bv != kAbsent : bv != perm[av]) return false;
  }
  return true;
}

// Partial consistency of assigning perm[i] = j, checking only constraints
// whose participants are already assigned. Deferred value constraints are
// caught by the final sort_matches pass.
inline bool sort_consistent(const SortView& a, const SortView& b, const std::vector<int>& perm,
                            const std::vector<int>& inv, int i, int j) {
  for (std::size_t c = 0; c < a.constants.size(); ++c) {
    if ((a.constants[c] == i) != (b.constants[c] == j)) return false;
  }
  const int n = a.size;
  for (int k = 0; k < n; ++k) {
    if (perm[k] == kAbsent) continue;
    if (a.leq) {
      if ((*a.leq)[i][k] != (*b.leq)[j][perm[k]]) return false;
      if ((*a.leq)[k][i] != (*b.leq)[perm[k]][j]) return false;
    }
    for (std::size_t t = 0; t < a.tables.size(); ++t) {
      const auto cell = [&](int ar, int ac, int br, int bc) {
        const int av = (*a.tables[t])[ar][ac];
        const int bv = (*b.tables[t])[br][bc];
        if (av == kAbsent || bv == kAbsent) return av == bv;
        if (perm[av] != kAbsent) return perm[av] == bv;
        return inv[bv] == kAbsent;
      };
      if (!cell(i, k, j, perm[k])) return false;
      if (!cell(k, i, perm[k], j)) return false;
    }
  }
  for (std::size_t u = 0; u < a.unary.size(); ++u) {
    const int av = (*a.unary[u])[i];
    const int bv = (*b.unary[u])[j];
    if (av == kAbsent || bv == kAbsent) {
      if (av != bv) return false;
    } else if (perm[av] != kAbsent) {
      if (perm[av] != bv) return false;
    } else if (inv[bv] != kAbsent) {
      return false;
    }
  }
  return true;
}

inline bool sort_backtrack(const SortView& a, const SortView& b, std::vector<int>& perm,
                           std::vector<int>& inv, int depth, const auto& leaf) {
  if (depth == a.size) return leaf();
  for (int j = 0; j < a.size; ++j) {
    if (inv[j] != kAbsent) continue;
    perm[depth] = j;
    inv[j] = depth;
    if (sort_consistent(a, b, perm, inv, depth, j) &&
        sort_backtrack(a, b, perm, inv, depth + 1, leaf))
      return true;
    perm[depth] = kAbsent;
    inv[j] = kAbsent;
  }
  return false;
}

}  // namespace detail

// Lexicographically least relabeling of the sort, usable as a dedup key.
inline std::string canonical_key(const SortView& v) {
  if (v.size > detail::kCanonicalBound)
    throw Error(Errc::BoundExceeded, "canonical forms are bounded at " +
                                         std::to_string(detail::kCanonicalBound) + " elements");
  std::vector<int> perm(v.size), inv(v.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best, cur;
  do {
    for (int i = 0; i < v.size; ++i) inv[perm[i]] = i;
    cur.clear();
    detail::encode_sort(v, perm, inv, cur);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const SortView& a, const SortView& b) {
  if (!detail::same_shape(a, b)) return false;
  if (a.size > detail::kIsoBound)
    throw Error(Errc::BoundExceeded, "isomorphism search is bounded at " +
                                         std::to_string(detail::kIsoBound) + " elements");
  std::vector<int> perm(a.size, kAbsent), inv(a.size, kAbsent);
  return detail::sort_backtrack(a, b, perm, inv, 0,
                                [&] { return detail::sort_matches(a, b, perm); });
}

inline bool isomorphic(const PairView& a, const PairView& b) {
  if (!detail::same_shape(a.sorts[0], b.sorts[0]) || !detail::same_shape(a.sorts[1], b.sorts[1]))
    return false;
  if (a.cross.size() != b.cross.size() || a.forward.size() != b.forward.size() ||
      a.backward.size() != b.backward.size())
    return false;
  if (a.sorts[0].size + a.sorts[1].size > detail::kIsoBound)
    throw Error(Errc::BoundExceeded, "isomorphism search is bounded at " +
                                         std::to_string(detail::kIsoBound) + " elements");

  std::array<std::vector<int>, 2> perm, inv;
  for (int s = 0; s < 2; ++s) {
    perm[s].assign(a.sorts[s].size, kAbsent);
    inv[s].assign(a.sorts[s].size, kAbsent);
  }

  const auto crossLeaf = [&] {
    for (std::size_t t = 0; t < a.cross.size(); ++t) {
      const CrossView& ca = a.cross[t];
      const CrossView& cb = b.cross[t];
      if (ca.rowSort != cb.rowSort || ca.colSort != cb.colSort || ca.valueSort != cb.valueSort)
        return false;
      const int rows = a.sorts[ca.rowSort].size;
      const int cols = a.sorts[ca.colSort].size;
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          const int av = (*ca.table)[i][j];
          const int bv = (*cb.table)[perm[ca.rowSort][i]][perm[ca.colSort][j]];
          if (av == kAbsent ? bv != kAbsent : bv != perm[ca.valueSort][av]) return false;
        }
    }
    for (std::size_t m = 0; m < a.forward.size(); ++m)
      for (int i = 0; i < a.sorts[0].size; ++i)
        if ((*b.forward[m])[perm[0][i]] != perm[1][(*a.forward[m])[i]]) return false;
    for (std::size_t m = 0; m < a.backward.size(); ++m)
      for (int i = 0; i < a.sorts[1].size; ++i)
        if ((*b.backward[m])[perm[1][i]] != perm[0][(*a.backward[m])[i]]) return false;
    return true;
  };

  return detail::sort_backtrack(a.sorts[0], b.sorts[0], perm[0], inv[0], 0, [&] {
    if (!detail::sort_matches(a.sorts[0], b.sorts[0], perm[0])) return false;
    return detail::sort_backtrack(a.sorts[1], b.sorts[1], perm[1], inv[1], 0, [&] {
      return detail::sort_matches(a.sorts[1], b.sorts[1], perm[1]) && crossLeaf();
    });
  });
}

inline SortView view_of(const Poset& p) {
  SortView v;
  v.size = p.size;
  v.leq = &p.leq;
  return v;
}

inline SortView view_of(const Posemigroup& s) {
  SortView v = view_of(s.poset);
  v.tables.push_back(&s.mul);
  if (s.meet) v.tables.push_back(&*s.meet);
  if (s.join) v.tables.push_back(&*s.join);
  v.constants.push_back(s.unit ? *s.unit : kAbsent);
  return v;
}

inline SortView view_of(const ResiduatedStructure& r) {
  SortView v = view_of(r.base);
  v.tables.push_back(&r.lres);
  v.tables.push_back(&r.rres);
  v.constants.push_back(r.point ? *r.point : kAbsent);
  return v;
}

inline SortView view_of(const BrouwerianAlgebra& b) {
  SortView v = view_of(b.poset);
  v.tables.push_back(&b.meet);
  v.tables.push_back(&b.join);
  v.tables.push_back(&b.imp);
  v.constants.push_back(b.top);
  v.constants.push_back(b.point ? *b.point : kAbsent);
  return v;
}

inline SortView view_of(const Bimonoid& b) {
  SortView v = view_of(b.poset);
  v.tables.push_back(&b.mul);
  v.tables.push_back(&b.add);
  v.constants.push_back(b.mulUnit);
  v.constants.push_back(b.addUnit);
  return v;
}

inline PairView view_of(const Bimodule& m) {
  PairView v;
  v.sorts[0] = view_of(m.scalars);
  if (m.scalarLres) v.sorts[0].tables.push_back(&*m.scalarLres);
  if (m.scalarRres) v.sorts[0].tables.push_back(&*m.scalarRres);
  v.sorts[1] = view_of(m.module);
  v.sorts[1].tables.push_back(&m.moduleJoin);
  if (m.moduleMeet) v.sorts[1].tables.push_back(&*m.moduleMeet);
  v.sorts[1].constants.push_back(m.point ? *m.point : kAbsent);
  v.cross.push_back({&m.lact, 0, 1, 1});
  v.cross.push_back({&m.ract, 1, 0, 1});
  if (m.residuals) {
    v.cross.push_back({&m.residuals->bslres, 0, 1, 1});
    v.cross.push_back({&m.residuals->slres, 1, 1, 0});
    v.cross.push_back({&m.residuals->bsrres, 1, 1, 0});
    v.cross.push_back({&m.residuals->srres, 1, 0, 1});
  }
  return v;
}

inline PairView view_of(const TwistablePair& t) {
  PairView v;
  v.sorts[0] = view_of(t.plus);
  if (t.plusLres) v.sorts[0].tables.push_back(&*t.plusLres);
  if (t.plusRres) v.sorts[0].tables.push_back(&*t.plusRres);
  v.sorts[1] = view_of(t.minus);
  v.sorts[1].tables.push_back(&t.minusLres);
  v.sorts[1].tables.push_back(&t.minusRres);
  v.sorts[1].constants.push_back(t.point ? *t.point : kAbsent);
  v.forward.push_back(&t.lam);
  v.backward.push_back(&t.rho);
  return v;
}

}  // namespace nagata
