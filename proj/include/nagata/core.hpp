#pragma once

// Finite posets over dense indices 0..size-1, monotone endomaps, and the
// shared report/error vocabulary used by every checker in the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nagata {

using Table = std::vector<std::vector<int>>;
using BoolTable = std::vector<std::vector<std::uint8_t>>;

// Marker for undefined cells in partial tables.
inline constexpr int kAbsent = -1;

enum class Errc {
  DimensionMismatch,
  MissingComponent,
  MissingPoint,
  NotIdempotent,
  EmptySet,
  NotCyclic,
  NotPositive,
  NotComplemented,
  NonUniqueComplement,
  NotBooleanPointed,
  AxiomFailure,
  BoundExceeded,
  GenerationExhausted,
  ParseError,
  ValidationError,
  UsageError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MissingComponent: return "MissingComponent";
    case Errc::MissingPoint: return "MissingPoint";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotComplemented: return "NotComplemented";
    case Errc::NonUniqueComplement: return "NonUniqueComplement";
    case Errc::NotBooleanPointed: return "NotBooleanPointed";
    case Errc::AxiomFailure: return "AxiomFailure";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UsageError: return "UsageError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// One named variable of a witness tuple, e.g. {"x", "(1,0)"}.
using WitnessEntry = std::pair<std::string, std::string>;

// Outcome of one axiom suite. passed holds iff witness is empty; a failing
// report names the first violated axiom (dotted id) and a witness tuple.
struct CheckReport {
  bool passed = true;
  std::string axiom;
  std::vector<WitnessEntry> witness;
  std::string detail;

  static CheckReport pass(std::string suite) {
    CheckReport r;
    r.passed = true;
    r.axiom = std::move(suite);
    return r;
  }
  static CheckReport fail(std::string axiom, std::vector<WitnessEntry> witness,
                          std::string detail = {}) {
    CheckReport r;
    r.passed = false;
    r.axiom = std::move(axiom);
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }
  bool operator==(const CheckReport&) const = default;
};

struct Poset {
  int size = 0;
  BoolTable leq;  // leq[i][j] != 0 iff i <= j
  std::vector<std::string> labels;

  bool le(int i, int j) const { return leq[i][j] != 0; }

  std::string label(int i) const {
    if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
    return std::to_string(i);
  }

  static Poset chain(int n) {
    Poset p;
    p.size = n;
    p.leq.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) p.leq[i][j] = 1;
    return p;
  }

  static Poset antichain(int n) {
    Poset p;
    p.size = n;
    p.leq.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
    return p;
  }

  bool operator==(const Poset&) const = default;
};

// Total unary map on a poset's universe; isotonicity and idempotence are
// checked on demand, not stored.
struct EndoMap {
  std::vector<int> table;

  int operator()(int i) const { return table[i]; }
  int size() const { return static_cast<int>(table.size()); }

  static EndoMap identity(int n) {
    EndoMap f;
    f.table.resize(n);
    for (int i = 0; i < n; ++i) f.table[i] = i;
    return f;
  }

  bool operator==(const EndoMap&) const = default;
};

namespace detail {

inline void require_square(const BoolTable& t, int n, const std::string& what) {
  if (static_cast<int>(t.size()) != n)
    throw Error(Errc::DimensionMismatch, what + " has " + std::to_string(t.size()) +
                                             " rows, expected " + std::to_string(n));
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::DimensionMismatch, what + " is not square");
}

inline void require_table(const Table& t, int rows, int cols, int valueBound,
                          const std::string& what, bool allowAbsent = false) {
  if (static_cast<int>(t.size()) != rows)
    throw Error(Errc::DimensionMismatch, what + " has " + std::to_string(t.size()) +
                                             " rows, expected " + std::to_string(rows));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != cols)
      throw Error(Errc::DimensionMismatch, what + " has a row of width " +
                                               std::to_string(row.size()) + ", expected " +
                                               std::to_string(cols));
    for (int v : row) {
      if (allowAbsent && v == kAbsent) continue;
      if (v < 0 || v >= valueBound)
        throw Error(Errc::DimensionMismatch,
                    what + " entry " + std::to_string(v) + " is out of range");
    }
  }
}

inline void require_map(const std::vector<int>& m, int domain, int codomain,
                        const std::string& what) {
  if (static_cast<int>(m.size()) != domain)
    throw Error(Errc::DimensionMismatch, what + " has size " + std::to_string(m.size()) +
                                             ", expected " + std::to_string(domain));
  for (int v : m)
    if (v < 0 || v >= codomain)
      throw Error(Errc::DimensionMismatch, what + " value " + std::to_string(v) +
                                               " is out of range");
}

}  // namespace detail

inline CheckReport check_poset(const Poset& p) {
  detail::require_square(p.leq, p.size, "leq");
  for (int i = 0; i < p.size; ++i)
    if (!p.le(i, i))
      return CheckReport::fail("poset.reflexivity", {{"x", p.label(i)}});
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (i != j && p.le(i, j) && p.le(j, i))
        return CheckReport::fail("poset.antisymmetry", {{"x", p.label(i)}, {"y", p.label(j)}});
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) {
      if (!p.le(i, j)) continue;
      for (int k = 0; k < p.size; ++k)
        if (p.le(j, k) && !p.le(i, k))
          return CheckReport::fail(
              "poset.transitivity",
              {{"x", p.label(i)}, {"y", p.label(j)}, {"z", p.label(k)}});
    }
  return CheckReport::pass("poset");
}

inline Poset dualize(const Poset& p) {
  Poset d = p;
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) d.leq[i][j] = p.leq[j][i];
  return d;
}

// Greatest lower bound of a nonempty subset, if it exists.
inline std::optional<int> glb(const Poset& p, const std::vector<int>& xs) {
  if (xs.empty()) throw Error(Errc::EmptySet, "glb of an empty subset");
  for (int x : xs)
    if (x < 0 || x >= p.size) throw Error(Errc::DimensionMismatch, "glb element out of range");
  std::vector<int> lower;
  for (int z = 0; z < p.size; ++z) {
    bool ok = true;
    for (int x : xs)
      if (!p.le(z, x)) { ok = false; break; }
    if (ok) lower.push_back(z);
  }
  for (int g : lower) {
    bool greatest = true;
    for (int z : lower)
      if (!p.le(z, g)) { greatest = false; break; }
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<int> lub(const Poset& p, const std::vector<int>& xs) {
  if (xs.empty()) throw Error(Errc::EmptySet, "lub of an empty subset");
  return glb(dualize(p), xs);
}

inline bool is_isotone(const Poset& p, const EndoMap& f) {
  detail::require_map(f.table, p.size, p.size, "endomap");
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (p.le(i, j) && !p.le(f(i), f(j))) return false;
  return true;
}

inline bool is_idempotent(const EndoMap& f) {
  for (int i = 0; i < f.size(); ++i)
    if (f(f(i)) != f(i)) return false;
  return true;
}

enum class OperatorKind { Interior, Closure, Both, Neither };

inline const char* operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Interior: return "interior";
    case OperatorKind::Closure: return "closure";
    case OperatorKind::Both: return "both";
    case OperatorKind::Neither: return "neither";
  }
  return "neither";
}

// Interior: isotone, idempotent, f(x) <= x. Closure: dual. Both forces f = id.
inline OperatorKind classify_operator(const Poset& p, const EndoMap& f) {
  detail::require_map(f.table, p.size, p.size, "endomap");
  if (!is_isotone(p, f) || !is_idempotent(f)) return OperatorKind::Neither;
  bool contracting = true, expanding = true;
  for (int i = 0; i < p.size; ++i) {
    if (!p.le(f(i), i)) contracting = false;
    if (!p.le(i, f(i))) expanding = false;
  }
  if (contracting && expanding) return OperatorKind::Both;
  if (contracting) return OperatorKind::Interior;
  if (expanding) return OperatorKind::Closure;
  return OperatorKind::Neither;
}

// Restriction of a poset to a subset of its universe (indices keep the
// order they are listed in).
inline Poset subposet(const Poset& p, const std::vector<int>& elems) {
  Poset s;
  s.size = static_cast<int>(elems.size());
  s.leq.assign(s.size, std::vector<std::uint8_t>(s.size, 0));
  for (int i = 0; i < s.size; ++i)
    for (int j = 0; j < s.size; ++j) s.leq[i][j] = p.leq[elems[i]][elems[j]];
  s.labels.resize(s.size);
  for (int i = 0; i < s.size; ++i) s.labels[i] = p.label(elems[i]);
  return s;
}

struct FixpointImage {
  std::vector<int> elements;  // ambient indices of the fixpoints, ascending
  Poset poset;                // induced order on the image

  // Position of an ambient element inside the image, or kAbsent.
  int position(int ambient) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), ambient);
    if (it == elements.end() || *it != ambient) return kAbsent;
    return static_cast<int>(it - elements.begin());
  }
};

inline FixpointImage fixpoint_image(const Poset& p, const EndoMap& f) {
  detail::require_map(f.table, p.size, p.size, "endomap");
  if (!is_idempotent(f))
    throw Error(Errc::NotIdempotent, "fixpoint_image requires an idempotent map");
  FixpointImage img;
  for (int i = 0; i < p.size; ++i)
    if (f(i) == i) img.elements.push_back(i);
  img.poset = subposet(p, img.elements);
  return img;
}

// Meet table from pairwise glbs; nullopt when some pair has none.
inline std::optional<Table> meet_table(const Poset& p) {
  Table t(p.size, std::vector<int>(p.size, kAbsent));
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) {
      auto m = glb(p, {i, j});
      if (!m) return std::nullopt;
      t[i][j] = *m;
    }
  return t;
}

inline std::optional<Table> join_table(const Poset& p) {
  auto t = meet_table(dualize(p));
  return t;
}

inline std::optional<int> bottom_of(const Poset& p) {
  for (int b = 0; b < p.size; ++b) {
    bool ok = true;
    for (int i = 0; i < p.size; ++i)
      if (!p.le(b, i)) { ok = false; break; }
    if (ok) return b;
  }
  return std::nullopt;
}

inline std::optional<int> top_of(const Poset& p) { return bottom_of(dualize(p)); }

// Greatest element of {i : pred(i)}, if one exists. The workhorse behind
// every residual computation in the library.
template <typename Pred>
inline std::optional<int> max_satisfying(const Poset& p, Pred pred) {
  for (int g = 0; g < p.size; ++g) {
    if (!pred(g)) continue;
    bool greatest = true;
    for (int i = 0; i < p.size; ++i)
      if (pred(i) && !p.le(i, g)) { greatest = false; break; }
    if (greatest) return g;
  }
  return std::nullopt;
}

}  // namespace nagata
