#pragma once

// JSON serialization for every structure kind the tools exchange. Files are
// objects with a "kind" discriminator, snake_case keys, tables as row-major
// arrays of indices, and kAbsent for undefined cells.

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/fractions.hpp"
#include "nagata/product.hpp"
#include "nagata/twist.hpp"

namespace nagata {

enum class Kind {
  Poset,
  Posemigroup,
  ResiduatedLattice,
  Brouwerian,
  Bimodule,
  TwistablePair,
  Nagata,
  Bimonoid,
};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Poset: return "poset";
    case Kind::Posemigroup: return "posemigroup";
    case Kind::ResiduatedLattice: return "residuated-lattice";
    case Kind::Brouwerian: return "brouwerian";
    case Kind::Bimodule: return "bimodule";
    case Kind::TwistablePair: return "twistable-pair";
    case Kind::Nagata: return "nagata";
    case Kind::Bimonoid: return "bimonoid";
  }
  return "poset";
}

inline std::optional<Kind> kind_from(const std::string& s) {
  for (Kind k : {Kind::Poset, Kind::Posemigroup, Kind::ResiduatedLattice, Kind::Brouwerian,
                 Kind::Bimodule, Kind::TwistablePair, Kind::Nagata, Kind::Bimonoid})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

using StructureValue = std::variant<Poset, Posemigroup, ResiduatedStructure, BrouwerianAlgebra,
                                    Bimodule, TwistablePair, NagataStructure, Bimonoid>;

// One loaded file. restricted is meaningful for the nagata kind only and
// selects which axiom suite applies.
struct Structure {
  Kind kind = Kind::Poset;
  bool restricted = false;
  StructureValue value;
};

namespace detail {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline const json& json_field(const json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::ParseError, "missing field '" + key + "'");
  return *it;
}

inline int int_of(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw Error(Errc::ParseError, "field '" + key + "' must be an integer");
  return v.get<int>();
}

inline int int_field(const json& j, const std::string& key) {
  return int_of(json_field(j, key), key);
}

inline std::optional<int> opt_int_field(const json& j, const std::string& key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return int_of(j[key], key);
}

inline std::vector<int> vector_of(const json& v, const std::string& key) {
  if (!v.is_array()) throw Error(Errc::ParseError, "field '" + key + "' must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& cell : v) out.push_back(int_of(cell, key));
  return out;
}

inline std::vector<int> vector_field(const json& j, const std::string& key) {
  return vector_of(json_field(j, key), key);
}

inline Table table_of(const json& v, const std::string& key) {
  if (!v.is_array()) throw Error(Errc::ParseError, "field '" + key + "' must be a matrix");
  Table out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(vector_of(row, key));
  return out;
}

inline Table table_field(const json& j, const std::string& key) {
  return table_of(json_field(j, key), key);
}

inline std::optional<Table> opt_table_field(const json& j, const std::string& key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return table_of(j[key], key);
}

inline Poset poset_of(const json& j) {
  Poset p;
  const Table raw = table_field(j, "leq");
  p.size = static_cast<int>(raw.size());
  p.leq.reserve(raw.size());
  for (const auto& row : raw) {
    std::vector<std::uint8_t> bits;
    bits.reserve(row.size());
    for (int v : row) {
      if (v != 0 && v != 1) throw Error(Errc::ParseError, "leq entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(v));
    }
    p.leq.push_back(std::move(bits));
  }
  if (j.contains("labels")) {
    const json& ls = j["labels"];
    if (!ls.is_array()) throw Error(Errc::ParseError, "labels must be an array of strings");
    for (const auto& l : ls) {
      if (!l.is_string()) throw Error(Errc::ParseError, "labels must be an array of strings");
      p.labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(p.labels.size()) != p.size)
      throw Error(Errc::ParseError, "labels length differs from the order table");
  }
  return p;
}

inline Posemigroup posemigroup_of(const json& j) {
  Posemigroup s;
  s.poset = poset_of(j);
  s.mul = table_field(j, "mul");
  s.unit = opt_int_field(j, "unit");
  s.meet = opt_table_field(j, "meet");
  s.join = opt_table_field(j, "join");
  return s;
}

inline void require_nagata_shape(const NagataStructure& n) {
  require_posemigroup_shape(n.carrier);
  const int sz = n.size();
  require_map(n.sigma.table, sz, sz, "sigma");
  require_map(n.gamma.table, sz, sz, "gamma");
  if (n.point < 0 || n.point >= sz) throw Error(Errc::DimensionMismatch, "point out of range");
  if (n.one && (*n.one < 0 || *n.one >= sz))
    throw Error(Errc::DimensionMismatch, "one out of range");
  if (n.lres) require_table(*n.lres, sz, sz, sz, "lres");
  if (n.rres) require_table(*n.rres, sz, sz, sz, "rres");
  require_table(n.gresL, sz, sz, sz, "gres_l", true);
  require_table(n.gresR, sz, sz, sz, "gres_r", true);
  require_table(n.gjoin, sz, sz, sz, "gjoin", true);
  if (n.oplus) require_table(*n.oplus, sz, sz, sz, "oplus", true);
  if (n.otimes) require_table(*n.otimes, sz, sz, sz, "otimes", true);
  if (n.negation) require_map(n.negation->table, sz, sz, "negation");
}

inline json labels_json(const Poset& p) {
  json out = json::array();
  for (int i = 0; i < p.size; ++i) out.push_back(p.label(i));
  return out;
}

inline json leq_json(const Poset& p) {
  json out = json::array();
  for (const auto& row : p.leq) {
    json r = json::array();
    for (auto b : row) r.push_back(b ? 1 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

inline void poset_to_json(const Poset& p, json& j) {
  j["leq"] = leq_json(p);
  if (!p.labels.empty()) j["labels"] = labels_json(p);
}

inline void posemigroup_to_json(const Posemigroup& s, json& j) {
  poset_to_json(s.poset, j);
  j["mul"] = s.mul;
  if (s.unit) j["unit"] = *s.unit;
  if (s.meet) j["meet"] = *s.meet;
  if (s.join) j["join"] = *s.join;
}

}  // namespace detail

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, "invalid JSON in " + path + ": " + e.what());
  }
}

// Parses one structure and validates shapes (dimensions, index ranges), but
// no axioms. Axiom failures are the caller's to diagnose via check_structure.
inline Structure structure_from_json(const nlohmann::json& j) {
  using detail::json;
  if (!j.is_object()) throw Error(Errc::ParseError, "a structure file must hold a JSON object");
  const json& kindField = detail::json_field(j, "kind");
  if (!kindField.is_string()) throw Error(Errc::ParseError, "field 'kind' must be a string");
  const auto kind = kind_from(kindField.get<std::string>());
  if (!kind)
    throw Error(Errc::ParseError, "unknown kind '" + kindField.get<std::string>() + "'");

  Structure out;
  out.kind = *kind;
  switch (*kind) {
    case Kind::Poset: {
      Poset p = detail::poset_of(j);
      detail::require_square(p.leq, p.size, "leq");
      out.value = std::move(p);
      break;
    }
    case Kind::Posemigroup: {
      Posemigroup s = detail::posemigroup_of(j);
      detail::require_posemigroup_shape(s);
      out.value = std::move(s);
      break;
    }
    case Kind::ResiduatedLattice: {
      ResiduatedStructure r;
      r.base = detail::posemigroup_of(j);
      if (!r.base.meet || !r.base.join)
        throw Error(Errc::ParseError, "a residuated-lattice file needs meet and join");
      r.lres = detail::table_field(j, "lres");
      r.rres = detail::table_field(j, "rres");
      r.point = detail::opt_int_field(j, "point");
      detail::require_posemigroup_shape(r.base);
      detail::require_table(r.lres, r.size(), r.size(), r.size(), "lres");
      detail::require_table(r.rres, r.size(), r.size(), r.size(), "rres");
      if (r.point && (*r.point < 0 || *r.point >= r.size()))
        throw Error(Errc::DimensionMismatch, "point out of range");
      out.value = std::move(r);
      break;
    }
    case Kind::Brouwerian: {
      BrouwerianAlgebra b;
      b.poset = detail::poset_of(j);
      detail::require_square(b.poset.leq, b.poset.size, "leq");
      b.meet = detail::table_field(j, "meet");
      b.join = detail::table_field(j, "join");
      b.imp = detail::table_field(j, "imp");
      if (const auto top = detail::opt_int_field(j, "top")) {
        b.top = *top;
      } else {
        const auto t = top_of(b.poset);
        if (!t) throw Error(Errc::ParseError, "the order has no top and none was given");
        b.top = *t;
      }
      b.point = detail::opt_int_field(j, "point");
      const int n = b.size();
      detail::require_table(b.meet, n, n, n, "meet");
      detail::require_table(b.join, n, n, n, "join");
      detail::require_table(b.imp, n, n, n, "imp");
      if (b.top < 0 || b.top >= n) throw Error(Errc::DimensionMismatch, "top out of range");
      if (b.point && (*b.point < 0 || *b.point >= n))
        throw Error(Errc::DimensionMismatch, "point out of range");
      out.value = std::move(b);
      break;
    }
    case Kind::Bimodule: {
      Bimodule m;
      const json& sj = detail::json_field(j, "scalars");
      m.scalars = detail::posemigroup_of(sj);
      m.scalarLres = detail::opt_table_field(sj, "lres");
      m.scalarRres = detail::opt_table_field(sj, "rres");
      const json& mj = detail::json_field(j, "module");
      m.module = detail::poset_of(mj);
      m.moduleJoin = detail::table_field(mj, "join");
      m.moduleMeet = detail::opt_table_field(mj, "meet");
      m.lact = detail::table_field(j, "lact");
      m.ract = detail::table_field(j, "ract");
      m.point = detail::opt_int_field(j, "point");
      if (j.contains("residuals") && !j["residuals"].is_null()) {
        const json& rj = j["residuals"];
        ActionResiduals r;
        r.bslres = detail::table_field(rj, "bslres");
        r.slres = detail::table_field(rj, "slres");
        r.bsrres = detail::table_field(rj, "bsrres");
        r.srres = detail::table_field(rj, "srres");
        m.residuals = std::move(r);
      }
      detail::require_bimodule_shape(m);
      out.value = std::move(m);
      break;
    }
    case Kind::TwistablePair: {
      TwistablePair t;
      const json& pj = detail::json_field(j, "plus");
      t.plus = detail::posemigroup_of(pj);
      t.plusLres = detail::opt_table_field(pj, "lres");
      t.plusRres = detail::opt_table_field(pj, "rres");
      const json& mj = detail::json_field(j, "minus");
      t.minus = detail::posemigroup_of(mj);
      t.minusLres = detail::table_field(mj, "lres");
      t.minusRres = detail::table_field(mj, "rres");
      t.lam = detail::vector_field(j, "lam");
      t.rho = detail::vector_field(j, "rho");
      t.point = detail::opt_int_field(j, "point");
      detail::require_twistable_shape(t);
      out.value = std::move(t);
      break;
    }
    case Kind::Nagata: {
      NagataStructure n;
      n.carrier = detail::posemigroup_of(j);
      n.lres = detail::opt_table_field(j, "lres");
      n.rres = detail::opt_table_field(j, "rres");
      n.sigma.table = detail::vector_field(j, "sigma");
      n.gamma.table = detail::vector_field(j, "gamma");
      n.point = detail::int_field(j, "point");
      n.one = detail::opt_int_field(j, "one");
      n.gresL = detail::table_field(j, "gres_l");
      n.gresR = detail::table_field(j, "gres_r");
      n.gjoin = detail::table_field(j, "gjoin");
      n.oplus = detail::opt_table_field(j, "oplus");
      n.otimes = detail::opt_table_field(j, "otimes");
      if (j.contains("negation") && !j["negation"].is_null()) {
        EndoMap neg;
        neg.table = detail::vector_field(j, "negation");
        n.negation = std::move(neg);
      }
      detail::require_nagata_shape(n);
      out.restricted = j.value("restricted", false);
      out.value = std::move(n);
      break;
    }
    case Kind::Bimonoid: {
      Bimonoid b;
      b.poset = detail::poset_of(j);
      b.mul = detail::table_field(j, "mul");
      b.mulUnit = detail::int_field(j, "mul_unit");
      b.add = detail::table_field(j, "add");
      b.addUnit = detail::int_field(j, "add_unit");
      detail::require_bimonoid_shape(b);
      out.value = std::move(b);
      break;
    }
  }
  return out;
}

inline Structure load_structure(const std::string& path) {
  try {
    return structure_from_json(load_json(path));
  } catch (const Error& e) {
    // A malformed file is a parse problem regardless of which shape check
    // tripped; axiom violations stay ValidationError via load_validated.
    if (e.code() == Errc::DimensionMismatch)
      throw Error(Errc::ParseError, "in " + path + ": " + e.what());
    throw;
  }
}

// Axiom suite appropriate to the kind, at the strongest level the present
// components support.
inline CheckReport check_structure(const Structure& s) {
  return std::visit(
      detail::overloaded{
          [](const Poset& p) { return check_poset(p); },
          [](const Posemigroup& p) { return check_posemigroup(p); },
          [](const ResiduatedStructure& r) {
            return r.base.unit ? check_residuated_lattice(r) : check_residuated_ell_semigroup(r);
          },
          [](const BrouwerianAlgebra& b) {
            CheckReport r = check_brouwerian(b);
            if (r.passed && b.point) r = check_boolean_pointed(b);
            return r;
          },
          [](const Bimodule& m) {
            BimoduleLevel lvl = BimoduleLevel::Bimodule;
            if (m.residuals) {
              lvl = BimoduleLevel::Residuated;
              if (m.scalars.unit) {
                lvl = BimoduleLevel::Unital;
                if (m.point) lvl = BimoduleLevel::Cyclic;
              }
            }
            return check_bimodule(m, lvl);
          },
          [](const TwistablePair& t) {
            const TwistLevel lvl = (t.plusLres && t.plusRres) ? TwistLevel::ResiduatedLattice
                                                              : TwistLevel::Posemigroup;
            return check_twistable_pair(t, lvl);
          },
          [&s](const NagataStructure& n) {
            const bool lattice = n.lres && n.rres && n.carrier.meet && n.carrier.join;
            CheckReport r = lattice ? check_nagata_lattice(n, s.restricted)
                                    : check_nagata_posemigroup(n, s.restricted);
            if (!r.passed) return r;
            if (n.negation) {
              if (r = check_strong_negation(n); !r.passed) return r;
              if (lattice) {
                if (r = check_strong_negation_residuated(n); !r.passed) return r;
              }
            }
            if (n.oplus) {
              const auto variant = n.otimes ? TruthOrderVariant::Bilattice
                                            : TruthOrderVariant::Sesquilattice;
              if (r = check_bilattice_sesquilattice(n, variant); !r.passed) return r;
            }
            return CheckReport::pass(lattice ? "nagata-lattice" : "nagata-posemigroup");
          },
          [](const Bimonoid& b) { return check_bimonoid(b); },
      },
      s.value);
}

inline std::string witness_text(const CheckReport& r) {
  std::string out;
  for (const auto& [name, value] : r.witness) {
    out += out.empty() ? "" : ", ";
    out += name + "=" + value;
  }
  if (!r.detail.empty()) {
    if (!out.empty()) out += "; ";
    out += r.detail;
  }
  return out;
}

// Shape-checked load plus the full axiom suite for the kind.
inline Structure load_validated(const std::string& path) {
  Structure s = load_structure(path);
  if (const auto r = check_structure(s); !r.passed) {
    std::string msg = path + " fails " + r.axiom;
    if (const auto w = witness_text(r); !w.empty()) msg += " (" + w + ")";
    throw Error(Errc::ValidationError, msg);
  }
  return s;
}

inline nlohmann::json structure_to_json(const Structure& s) {
  using detail::json;
  json j;
  j["kind"] = kind_name(s.kind);
  std::visit(detail::overloaded{
                 [&](const Poset& p) { detail::poset_to_json(p, j); },
                 [&](const Posemigroup& p) { detail::posemigroup_to_json(p, j); },
                 [&](const ResiduatedStructure& r) {
                   detail::posemigroup_to_json(r.base, j);
                   j["lres"] = r.lres;
                   j["rres"] = r.rres;
                   if (r.point) j["point"] = *r.point;
                 },
                 [&](const BrouwerianAlgebra& b) {
                   detail::poset_to_json(b.poset, j);
                   j["meet"] = b.meet;
                   j["join"] = b.join;
                   j["imp"] = b.imp;
                   j["top"] = b.top;
                   if (b.point) j["point"] = *b.point;
                 },
                 [&](const Bimodule& m) {
                   json sj;
                   detail::posemigroup_to_json(m.scalars, sj);
                   if (m.scalarLres) sj["lres"] = *m.scalarLres;
                   if (m.scalarRres) sj["rres"] = *m.scalarRres;
                   j["scalars"] = std::move(sj);
                   json mj;
                   detail::poset_to_json(m.module, mj);
                   mj["join"] = m.moduleJoin;
                   if (m.moduleMeet) mj["meet"] = *m.moduleMeet;
                   j["module"] = std::move(mj);
                   j["lact"] = m.lact;
                   j["ract"] = m.ract;
                   if (m.point) j["point"] = *m.point;
                   if (m.residuals) {
                     json rj;
                     rj["bslres"] = m.residuals->bslres;
                     rj["slres"] = m.residuals->slres;
                     rj["bsrres"] = m.residuals->bsrres;
                     rj["srres"] = m.residuals->srres;
                     j["residuals"] = std::move(rj);
                   }
                 },
                 [&](const TwistablePair& t) {
                   json pj;
                   detail::posemigroup_to_json(t.plus, pj);
                   if (t.plusLres) pj["lres"] = *t.plusLres;
                   if (t.plusRres) pj["rres"] = *t.plusRres;
                   j["plus"] = std::move(pj);
                   json mj;
                   detail::posemigroup_to_json(t.minus, mj);
                   mj["lres"] = t.minusLres;
                   mj["rres"] = t.minusRres;
                   j["minus"] = std::move(mj);
                   j["lam"] = t.lam;
                   j["rho"] = t.rho;
                   if (t.point) j["point"] = *t.point;
                 },
                 [&](const NagataStructure& n) {
                   detail::posemigroup_to_json(n.carrier, j);
                   if (n.lres) j["lres"] = *n.lres;
                   if (n.rres) j["rres"] = *n.rres;
                   j["sigma"] = n.sigma.table;
                   j["gamma"] = n.gamma.table;
                   j["point"] = n.point;
                   if (n.one) j["one"] = *n.one;
                   j["gres_l"] = n.gresL;
                   j["gres_r"] = n.gresR;
                   j["gjoin"] = n.gjoin;
                   if (n.oplus) j["oplus"] = *n.oplus;
                   if (n.otimes) j["otimes"] = *n.otimes;
                   if (n.negation) j["negation"] = n.negation->table;
                   j["restricted"] = s.restricted;
                 },
                 [&](const Bimonoid& b) {
                   detail::poset_to_json(b.poset, j);
                   j["mul"] = b.mul;
                   j["mul_unit"] = b.mulUnit;
                   j["add"] = b.add;
                   j["add_unit"] = b.addUnit;
                 },
             },
             s.value);
  return j;
}

inline void save_structure(const Structure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << structure_to_json(s).dump(2) << '\n';
}

inline Structure wrap(Poset p) { return {Kind::Poset, false, std::move(p)}; }
inline Structure wrap(Posemigroup p) { return {Kind::Posemigroup, false, std::move(p)}; }
inline Structure wrap(ResiduatedStructure r) {
  return {Kind::ResiduatedLattice, false, std::move(r)};
}
inline Structure wrap(BrouwerianAlgebra b) { return {Kind::Brouwerian, false, std::move(b)}; }
inline Structure wrap(Bimodule m) { return {Kind::Bimodule, false, std::move(m)}; }
inline Structure wrap(TwistablePair t) { return {Kind::TwistablePair, false, std::move(t)}; }
inline Structure wrap(NagataStructure n, bool restricted) {
  return {Kind::Nagata, restricted, std::move(n)};
}
inline Structure wrap(Bimonoid b) { return {Kind::Bimonoid, false, std::move(b)}; }

}  // namespace nagata
