#pragma once

// Exhaustive structure generators with canonical-form deduplication, an
// independent search-based census for cross-checks, and seeded random
// structures. All generators are deterministic.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/fractions.hpp"
#include "nagata/io.hpp"
#include "nagata/iso.hpp"
#include "nagata/twist.hpp"

namespace nagata {

// Enumeration bound; NAGATA_MAX_SIZE overrides the default of 5.
inline int max_size_limit() {
  if (const char* s = std::getenv("NAGATA_MAX_SIZE")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1 || v > 8)
      throw Error(Errc::UsageError, "NAGATA_MAX_SIZE must be an integer in 1..8");
    return static_cast<int>(v);
  }
  return 5;
}

namespace detail {

inline void require_enum_size(int n, int bound) {
  if (n < 1) throw Error(Errc::UsageError, "size must be positive");
  if (n > bound)
    throw Error(Errc::BoundExceeded,
                "size " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
}

// All labeled posets on n points, as leq tables, in mask order.
inline std::vector<BoolTable> labeled_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  const int bits = static_cast<int>(slots.size());
  std::vector<BoolTable> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    BoolTable leq(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) leq[i][i] = 1;
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1) leq[slots[b].first][slots[b].second] = 1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        if (!leq[i][j]) continue;
        for (int k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) {
            ok = false;
            break;
          }
      }
    if (ok) out.push_back(std::move(leq));
  }
  return out;
}

}  // namespace detail

inline std::vector<Poset> enumerate_posets(int n, bool upToIso = true) {
  // The labeled census walks 2^(n(n-1)) masks; 5 is the practical ceiling.
  detail::require_enum_size(n, std::min(5, max_size_limit()));
  std::vector<Poset> out;
  std::set<std::string> seen;
  for (BoolTable& leq : detail::labeled_posets(n)) {
    Poset p;
    p.size = n;
    p.leq = std::move(leq);
    if (!upToIso || seen.insert(canonical_key(view_of(p))).second) out.push_back(std::move(p));
  }
  return out;
}

// Census by pairwise backtracking search instead of canonical keys; the two
// methods cross-check each other.
inline int count_posets_by_search(int n) {
  detail::require_enum_size(n, std::min(5, max_size_limit()));
  std::vector<Poset> reps;
  for (BoolTable& leq : detail::labeled_posets(n)) {
    Poset p;
    p.size = n;
    p.leq = std::move(leq);
    bool known = false;
    for (const Poset& r : reps)
      if (isomorphic(view_of(r), view_of(p))) {
        known = true;
        break;
      }
    if (!known) reps.push_back(std::move(p));
  }
  return static_cast<int>(reps.size());
}

inline std::vector<Posemigroup> enumerate_posemigroups(int n, bool upToIso = true) {
  detail::require_enum_size(n, std::min(3, max_size_limit()));
  std::vector<Posemigroup> out;
  std::set<std::string> seen;
  for (const Poset& p : enumerate_posets(n, upToIso)) {
    Table mul(n, std::vector<int>(n, 0));
    const int cells = n * n;
    while (true) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          for (int c = 0; c < n; ++c)
            if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
              ok = false;
              break;
            }
          if (ok && p.le(a, b))
            for (int c = 0; c < n; ++c)
              if (!p.le(mul[a][c], mul[b][c]) || !p.le(mul[c][a], mul[c][b])) {
                ok = false;
                break;
              }
        }
      if (ok) {
        Posemigroup s;
        s.poset = p;
        s.mul = mul;
        if (!upToIso || seen.insert(canonical_key(view_of(s))).second)
          out.push_back(std::move(s));
      }
      int cell = cells - 1;
      while (cell >= 0 && mul[cell / n][cell % n] == n - 1) {
        mul[cell / n][cell % n] = 0;
        --cell;
      }
      if (cell < 0) break;
      ++mul[cell / n][cell % n];
    }
  }
  return out;
}

// Finite distributive lattices with their relative pseudocomplement, one
// per isomorphism class. A finite lattice carries imp exactly when it is
// distributive, so imp existence is the filter.
inline std::vector<BrouwerianAlgebra> enumerate_brouwerian(int n, bool upToIso = true) {
  detail::require_enum_size(n, max_size_limit());
  std::vector<BrouwerianAlgebra> out;
  for (const Poset& p : enumerate_posets(n, upToIso)) {
    const auto meet = meet_table(p);
    const auto join = join_table(p);
    const auto top = top_of(p);
    if (!meet || !join || !top) continue;
    BrouwerianAlgebra b;
    b.poset = p;
    b.meet = *meet;
    b.join = *join;
    b.top = *top;
    b.imp.assign(n, std::vector<int>(n, 0));
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int c = 0; c < n; ++c) {
        const auto v = max_satisfying(p, [&](int x) { return p.le((*meet)[a][x], c); });
        if (!v) {
          ok = false;
          break;
        }
        b.imp[a][c] = *v;
      }
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<BrouwerianAlgebra> enumerate_boolean_pointed_brouwerian(int n,
                                                                           bool upToIso = true) {
  std::vector<BrouwerianAlgebra> out;
  std::set<std::string> seen;
  for (const BrouwerianAlgebra& b : enumerate_brouwerian(n, upToIso))
    for (int p = 0; p < n; ++p) {
      BrouwerianAlgebra cand = b;
      cand.point = p;
      if (!check_boolean_pointed(cand).passed) continue;
      if (!upToIso || seen.insert(canonical_key(view_of(cand))).second)
        out.push_back(std::move(cand));
    }
  return out;
}

// Commutative integral residuated chains (unit = top); residuals on a
// finite integral chain always exist, so isotone associative tables are the
// whole search space. Chains are rigid, so no dedup pass is needed.
inline std::vector<ResiduatedStructure> enumerate_residuated_chains(int n) {
  detail::require_enum_size(n, max_size_limit());
  const Poset chain = Poset::chain(n);
  const auto meet = meet_table(chain);
  const auto join = join_table(chain);
  std::vector<ResiduatedStructure> out;

  Table mul(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) mul[n - 1][x] = mul[x][n - 1] = x;

  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i; j + 1 < n; ++j) cells.emplace_back(i, j);

  const auto emit = [&] {
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            assoc = false;
            break;
          }
    if (!assoc) return;
    ResiduatedStructure r;
    r.base.poset = chain;
    r.base.mul = mul;
    r.base.unit = n - 1;
    r.base.meet = meet;
    r.base.join = join;
    const auto res = compute_residuals(r.base);
    if (!res) return;
    r.lres = res->lres;
    r.rres = res->rres;
    out.push_back(std::move(r));
  };

  const auto fill = [&](const auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      emit();
      return;
    }
    const auto [i, j] = cells[k];
    int lower = 0;
    if (i > 0) lower = std::max(lower, mul[i - 1][j]);
    if (j > i) lower = std::max(lower, mul[i][j - 1]);
    for (int v = lower; v <= i; ++v) {
      mul[i][j] = mul[j][i] = v;
      self(self, k + 1);
    }
    mul[i][j] = mul[j][i] = 0;
  };
  fill(fill, 0);
  return out;
}

inline Poset random_poset(std::mt19937_64& rng, int n) {
  detail::require_enum_size(n, 64);
  std::uniform_int_distribution<int> coin(0, 2);
  Poset p;
  p.size = n;
  p.leq.assign(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) p.leq[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq[i][k] && p.leq[k][j]) p.leq[i][j] = 1;
  return p;
}

inline EndoMap random_isotone_map(std::mt19937_64& rng, const Poset& p) {
  std::uniform_int_distribution<int> pick(0, p.size - 1);
  for (int attempt = 0; attempt < 500; ++attempt) {
    EndoMap f;
    f.table.resize(p.size);
    for (int i = 0; i < p.size; ++i) f.table[i] = pick(rng);
    if (is_isotone(p, f)) return f;
  }
  return EndoMap::identity(p.size);
}

inline Posemigroup random_posemigroup(std::mt19937_64& rng, int n) {
  Posemigroup s;
  s.poset = random_poset(rng, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  bool found = false;
  for (int attempt = 0; attempt < 2000 && !found; ++attempt) {
    Table mul(n, std::vector<int>(n, 0));
    for (auto& row : mul)
      for (int& v : row) v = pick(rng);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            ok = false;
            break;
          }
        if (ok && s.poset.le(a, b))
          for (int c = 0; c < n; ++c)
            if (!s.poset.le(mul[a][c], mul[b][c]) || !s.poset.le(mul[c][a], mul[c][b])) {
              ok = false;
              break;
            }
      }
    if (ok) {
      s.mul = std::move(mul);
      found = true;
    }
  }
  if (!found) {
    // Left projection is associative and isotone over any order.
    s.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s.mul[a][b] = a;
  }
  for (int u = 0; u < n; ++u) {
    bool unital = true;
    for (int x = 0; x < n && unital; ++x) unital = s.mul[u][x] == x && s.mul[x][u] == x;
    if (unital) {
      s.unit = u;
      break;
    }
  }
  s.meet = meet_table(s.poset);
  s.join = join_table(s.poset);
  return s;
}

// The downset lattice of a random poset on `generators` points, a Heyting
// algebra by construction, with a random valid Boolean point (the top is
// always one).
inline BrouwerianAlgebra random_brouwerian(std::mt19937_64& rng, int generators) {
  detail::require_enum_size(generators, 4);
  const Poset g = random_poset(rng, generators);
  std::vector<unsigned> downs;
  for (unsigned mask = 0; mask < (1u << generators); ++mask) {
    bool closed = true;
    for (int i = 0; i < generators && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < generators; ++j)
        if (g.le(j, i) && !(mask >> j & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) downs.push_back(mask);
  }
  const int n = static_cast<int>(downs.size());
  const auto posOf = [&](unsigned mask) {
    return static_cast<int>(std::lower_bound(downs.begin(), downs.end(), mask) - downs.begin());
  };

  BrouwerianAlgebra b;
  b.poset.size = n;
  b.poset.leq.assign(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.poset.leq[i][j] = (downs[i] & ~downs[j]) == 0;
  b.meet.assign(n, std::vector<int>(n, 0));
  b.join.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.meet[i][j] = posOf(downs[i] & downs[j]);
      b.join[i][j] = posOf(downs[i] | downs[j]);
    }
  b.top = n - 1;
  b.imp.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto v =
          max_satisfying(b.poset, [&](int x) { return b.poset.le(b.meet[a][x], c); });
      if (!v) throw Error(Errc::AxiomFailure, "downset lattice lost a pseudocomplement");
      b.imp[a][c] = *v;
    }
  std::vector<int> valid;
  for (int p = 0; p < n; ++p) {
    b.point = p;
    if (check_boolean_pointed(b).passed) valid.push_back(p);
  }
  if (valid.empty()) throw Error(Errc::GenerationExhausted, "no Boolean point found");
  b.point = valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(rng)];
  return b;
}

inline ResiduatedStructure random_residuated_chain(std::mt19937_64& rng, int n) {
  auto all = enumerate_residuated_chains(n);
  if (all.empty()) throw Error(Errc::GenerationExhausted, "no residuated chain of that size");
  ResiduatedStructure r =
      all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  r.point = 0;
  return r;
}

// Deterministic in (kind, size, seed); every output passes its kind's base
// checks by construction.
inline Structure random_structure(Kind kind, int size, std::uint64_t seed) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(size),
                    static_cast<std::uint64_t>(kind) + 1};
  std::mt19937_64 rng(seq);
  switch (kind) {
    case Kind::Poset: return wrap(random_poset(rng, size));
    case Kind::Posemigroup: return wrap(random_posemigroup(rng, size));
    case Kind::ResiduatedLattice: return wrap(random_residuated_chain(rng, size));
    case Kind::Brouwerian: return wrap(random_brouwerian(rng, std::min(size, 4)));
    case Kind::Bimodule:
      return wrap(division_bimodule(random_residuated_chain(rng, size), 0));
    case Kind::TwistablePair: return wrap(identity_pair(random_residuated_chain(rng, size)));
    case Kind::Nagata: {
      const TwistablePair t = identity_pair(random_residuated_chain(rng, size));
      return wrap(restricted_twist_product(t).algebra, true);
    }
    case Kind::Bimonoid:
      return wrap(brouwerian_bimonoid(random_brouwerian(rng, std::min(size, 4))));
  }
  throw Error(Errc::UsageError, "unknown kind");
}

}  // namespace nagata
