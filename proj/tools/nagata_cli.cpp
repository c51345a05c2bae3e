// Command-line front end: checking, constructing, and enumerating finite
// ordered structures stored as .alg files.
//
// Exit codes: 0 all checks passed, 1 an axiom check failed, 2 input or
// usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "nagata/all.hpp"

namespace {

using namespace nagata;

nlohmann::json report_json(const CheckReport& r, const std::string& name) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& [key, value] : r.witness) w.push_back({{"name", key}, {"value", value}});
  nlohmann::json j{{"passed", r.passed}, {"axiom", r.axiom}, {"witness", std::move(w)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!name.empty()) j["name"] = name;
  return j;
}

void print_report(const CheckReport& r, bool json, const std::string& name = {}) {
  if (json) {
    std::cout << report_json(r, name).dump() << "\n";
    return;
  }
  std::cout << (r.passed ? "PASS " : "FAIL ");
  if (!name.empty()) std::cout << name << ": ";
  std::cout << r.axiom;
  if (!r.passed) {
    const std::string w = witness_text(r);
    if (!w.empty()) std::cout << " [" << w << "]";
  }
  std::cout << "\n";
}

const Bimodule& as_bimodule(const Structure& s) {
  if (const Bimodule* p = std::get_if<Bimodule>(&s.value)) return *p;
  throw Error(Errc::UsageError, "this operation needs a bimodule file");
}

const TwistablePair& as_pair(const Structure& s) {
  if (const TwistablePair* p = std::get_if<TwistablePair>(&s.value)) return *p;
  throw Error(Errc::UsageError, "this operation needs a twistable-pair file");
}

const BrouwerianAlgebra& as_brouwerian(const Structure& s) {
  if (const BrouwerianAlgebra* p = std::get_if<BrouwerianAlgebra>(&s.value)) return *p;
  throw Error(Errc::UsageError, "this operation needs a brouwerian file");
}

const NagataStructure& as_nagata(const Structure& s) {
  if (const NagataStructure* p = std::get_if<NagataStructure>(&s.value)) return *p;
  throw Error(Errc::UsageError, "this operation needs a nagata file");
}

// Check at an explicitly requested level instead of the inferred one.
CheckReport leveled_check(const Structure& s, const std::string& level) {
  switch (s.kind) {
    case Kind::ResiduatedLattice: {
      const auto& r = std::get<ResiduatedStructure>(s.value);
      if (level == "ell-semigroup") return check_residuated_ell_semigroup(r);
      if (level == "residuated-lattice") return check_residuated_lattice(r);
      break;
    }
    case Kind::Brouwerian: {
      const auto& b = std::get<BrouwerianAlgebra>(s.value);
      if (level == "brouwerian") return check_brouwerian(b);
      if (level == "boolean-pointed") return check_boolean_pointed(b);
      break;
    }
    case Kind::Bimodule: {
      if (const auto lvl = bimodule_level_from(level))
        return check_bimodule(std::get<Bimodule>(s.value), *lvl);
      break;
    }
    case Kind::TwistablePair: {
      if (const auto lvl = twist_level_from(level))
        return check_twistable_pair(std::get<TwistablePair>(s.value), *lvl);
      break;
    }
    case Kind::Nagata: {
      const auto& n = std::get<NagataStructure>(s.value);
      if (level == "posemigroup") return check_nagata_posemigroup(n, s.restricted);
      if (level == "lattice") return check_nagata_lattice(n, s.restricted);
      break;
    }
    default:
      break;
  }
  throw Error(Errc::UsageError, "level '" + level + "' does not apply to a " +
                                    kind_name(s.kind) + " file");
}

int cmd_check(const std::string& path, const std::string& level, bool json) {
  const Structure s = load_structure(path);
  const CheckReport r = level.empty() ? check_structure(s) : leveled_check(s, level);
  print_report(r, json);
  return r.passed ? 0 : 1;
}

void emit(const Structure& s, const std::string& out, bool json) {
  if (out.empty()) {
    std::cout << structure_to_json(s).dump(2) << "\n";
    return;
  }
  save_structure(s, out);
  if (json)
    std::cout << nlohmann::json{{"wrote", out}, {"kind", kind_name(s.kind)}}.dump() << "\n";
  else
    std::cout << "wrote " << out << " (" << kind_name(s.kind) << ")\n";
}

int cmd_construct(const std::string& what, const std::string& path, const std::string& out,
                  bool json) {
  const Structure s = load_validated(path);
  Structure result;
  if (what == "nagata")
    result = wrap(full_nagata_structure(as_bimodule(s)).algebra, false);
  else if (what == "restricted-nagata")
    result = wrap(restricted_nagata_product(as_bimodule(s)).algebra, true);
  else if (what == "twist")
    result = wrap(twist_product(as_pair(s)).algebra, false);
  else if (what == "restricted-twist")
    result = wrap(restricted_twist_product(as_pair(s)).algebra, true);
  else if (what == "fractions")
    result = wrap(bimonoid_of_fractions(as_brouwerian(s)).fractions);
  else
    throw Error(Errc::UsageError, "unknown construction: " + what);
  emit(result, out, json);
  return 0;
}

int cmd_untwist(const std::string& path, const std::string& out, bool json) {
  const Structure s = load_validated(path);
  emit(wrap(untwist(as_nagata(s))), out, json);
  return 0;
}

int cmd_verify(const std::string& what, const std::string& path, bool json) {
  const Structure s = load_validated(path);
  std::vector<std::pair<std::string, CheckReport>> reports;
  const auto claim = [&reports](std::string name, bool ok, std::string detail = {}) {
    reports.emplace_back(std::move(name), ok ? CheckReport::pass("verified")
                                             : CheckReport::fail("verify", {}, std::move(detail)));
  };

  if (what == "adjunction") {
    if (const Bimodule* m = std::get_if<Bimodule>(&s.value)) {
      reports.emplace_back("counit", verify_counit(*m));
      reports.emplace_back("action-recovery", verify_action_recovery(*m, true));
      reports.emplace_back("triangle-product", verify_triangle_product(*m));
    } else if (const NagataStructure* n = std::get_if<NagataStructure>(&s.value)) {
      reports.emplace_back("unit-map", unit_map(*n, s.restricted).report);
      reports.emplace_back("triangle-bimodule", verify_triangle_bimodule(*n, s.restricted));
    } else {
      throw Error(Errc::UsageError, "verify adjunction needs a bimodule or nagata file");
    }
  } else if (what == "equivalence") {
    if (const Bimodule* m = std::get_if<Bimodule>(&s.value)) {
      reports.emplace_back("counit", verify_counit(*m));
      const StructuredProduct p = restricted_nagata_product(*m);
      const StructuralBimodule f = structural_bimodule(p.algebra);
      claim("structural-isomorphic", isomorphic(view_of(f.bimodule), view_of(*m)),
            "the structural bimodule of the restricted product is not isomorphic to the input");
    } else if (const NagataStructure* n = std::get_if<NagataStructure>(&s.value)) {
      reports.emplace_back("unit-map", unit_map(*n, s.restricted).report);
      reports.emplace_back("unit-surjective", check_unit_surjectivity(*n, s.restricted));
      if (n->oplus) {
        bool dec = true;
        for (int i = 0; i < n->size() && dec; ++i)
          dec = (*n->oplus)[n->sigma(i)][n->gamma(i)] == i;
        claim("decomposition", dec, "sigma m (+) gamma m differs from m");
      }
    } else {
      throw Error(Errc::UsageError, "verify equivalence needs a bimodule or nagata file");
    }
  } else if (what == "roundtrip") {
    if (const TwistablePair* t = std::get_if<TwistablePair>(&s.value)) {
      reports.emplace_back("twist-counit", verify_twist_counit(*t));
      const StructuredProduct p = restricted_twist_product(*t);
      const TwistablePair u = untwist(p.algebra);
      claim("untwist-isomorphic", isomorphic(view_of(u), view_of(*t)),
            "untwisting the twist product does not recover the pair");
      reports.emplace_back("involutive-collapse", check_involutive_collapse(*t));
    } else {
      const Structure back = structure_from_json(structure_to_json(s));
      claim("io-roundtrip",
            back.kind == s.kind && back.restricted == s.restricted && back.value == s.value,
            "serialize/parse changed the structure");
    }
  } else {
    throw Error(Errc::UsageError, "unknown verification: " + what);
  }

  bool all = true;
  for (const auto& [name, r] : reports) {
    all = all && r.passed;
    print_report(r, json, name);
  }
  return all ? 0 : 1;
}

int cmd_enumerate(const std::string& kind, int maxSize, bool upToIso, bool json) {
  for (int n = 1; n <= maxSize; ++n) {
    std::size_t count = 0;
    if (kind == "poset")
      count = enumerate_posets(n, upToIso).size();
    else if (kind == "posemigroup")
      count = enumerate_posemigroups(n, upToIso).size();
    else if (kind == "brouwerian")
      count = enumerate_brouwerian(n, upToIso).size();
    else if (kind == "boolean-pointed")
      count = enumerate_boolean_pointed_brouwerian(n, upToIso).size();
    else if (kind == "chain")
      count = enumerate_residuated_chains(n).size();
    else
      throw Error(Errc::UsageError, "unknown enumeration kind: " + kind);
    if (json)
      std::cout << nlohmann::json{{"kind", kind}, {"size", n}, {"count", count}}.dump() << "\n";
    else
      std::cout << kind << " size=" << n << " count=" << count << "\n";
  }
  return 0;
}

int cmd_random(const std::string& kindName, int size, std::uint64_t seed, const std::string& out,
               bool json) {
  const auto kind = kind_from(kindName);
  if (!kind) throw Error(Errc::UsageError, "unknown kind: " + kindName);
  emit(random_structure(*kind, size, seed), out, json);
  return 0;
}

int cmd_corpus(const std::string& dir, bool json) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "negative");
  std::vector<std::string> written;
  for (const auto& e : corpus::builtin_corpus()) {
    const std::string path = (fs::path(dir) / (e.name + ".alg")).string();
    save_structure(e.structure, path);
    written.push_back(path);
  }
  nlohmann::json expected = nlohmann::json::object();
  for (const auto& e : corpus::negative_corpus()) {
    const std::string path = (fs::path(dir) / "negative" / (e.name + ".alg")).string();
    save_structure(e.structure, path);
    written.push_back(path);
    expected[e.name] = e.axiom;
  }
  {
    const std::string path = (fs::path(dir) / "negative" / "expected.json").string();
    std::ofstream f(path);
    f << expected.dump(2) << "\n";
    written.push_back(path);
  }
  for (const auto& p : written) {
    if (json)
      std::cout << nlohmann::json{{"wrote", p}}.dump() << "\n";
    else
      std::cout << "wrote " << p << "\n";
  }
  return 0;
}

int cmd_suite(const std::string& what, bool json, const std::string& self) {
  if (what != "corpus") throw Error(Errc::UsageError, "unknown suite: " + what);

  const auto spawn = [&self](const corpus::NegativeEntry& e) -> int {
    namespace fs = std::filesystem;
    const fs::path p = fs::temp_directory_path() / ("nagata-" + e.name + ".alg");
    save_structure(e.structure, p.string());
    const std::string cmd =
        "\"" + self + "\" check \"" + p.string() + "\" >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    std::error_code ec;
    fs::remove(p, ec);
#ifdef __unix__
    if (rc != -1 && WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -1;
#else
    return rc;
#endif
  };

  const std::vector<suite::CriterionResult> results = suite::run_all(spawn);
  bool all = true;
  for (const auto& cr : results) {
    const bool ok = cr.passed();
    all = all && ok;
    if (json) {
      nlohmann::json j{{"criterion", cr.id},
                       {"title", cr.title},
                       {"passed", ok},
                       {"checks", cr.entries.size()}};
      if (const suite::Entry* f = cr.first_failure()) j["failure"] = report_json(f->report, f->name);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "criterion " << cr.id << " " << (ok ? "PASS" : "FAIL") << " " << cr.title
                << " (" << cr.entries.size() << " checks)\n";
      if (!ok)
        for (const auto& e : cr.entries)
          if (!e.report.passed) print_report(e.report, false, "  " + e.name);
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite residuated structures, pair products, and fractions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string checkPath, checkLevel;
  CLI::App* check = app.add_subcommand("check", "run the axiom suite for a structure file");
  check->add_option("file", checkPath, "structure file")->required();
  check->add_option("--level", checkLevel, "explicit check level for the file's kind");

  std::string consWhat, consPath, consOut;
  CLI::App* cons = app.add_subcommand("construct", "build a derived structure from a file");
  cons->add_option("what", consWhat, "nagata|restricted-nagata|twist|restricted-twist|fractions")
      ->required()
      ->check(CLI::IsMember({"nagata", "restricted-nagata", "twist", "restricted-twist",
                             "fractions"}));
  cons->add_option("file", consPath, "input structure file")->required();
  cons->add_option("-o,--out", consOut, "output file (default: print to stdout)");

  std::string untwistPath, untwistOut;
  CLI::App* untw = app.add_subcommand("untwist", "recover the twistable pair of a product");
  untw->add_option("file", untwistPath, "nagata structure file")->required();
  untw->add_option("-o,--out", untwistOut, "output file (default: print to stdout)");

  std::string verWhat, verPath;
  CLI::App* ver = app.add_subcommand("verify", "verify a construction-level property");
  ver->add_option("what", verWhat, "adjunction|equivalence|roundtrip")
      ->required()
      ->check(CLI::IsMember({"adjunction", "equivalence", "roundtrip"}));
  ver->add_option("file", verPath, "structure file")->required();

  std::string enumKind;
  int enumMax = 3;
  bool upToIso = false;
  CLI::App* enu = app.add_subcommand("enumerate", "count structures of a kind by size");
  enu->add_option("kind", enumKind, "poset|posemigroup|brouwerian|boolean-pointed|chain")
      ->required();
  enu->add_option("--max-size", enumMax, "largest size to enumerate")->required();
  enu->add_flag("--up-to-iso", upToIso, "deduplicate up to isomorphism");

  std::string randKind, randOut;
  int randSize = 3;
  std::uint64_t randSeed = 0;
  CLI::App* rnd = app.add_subcommand("random", "generate a pseudorandom valid structure");
  rnd->add_option("kind", randKind, "structure kind")->required();
  rnd->add_option("--size", randSize, "target size")->capture_default_str();
  rnd->add_option("--seed", randSeed, "generator seed")->capture_default_str();
  rnd->add_option("-o,--out", randOut, "output file (default: print to stdout)");

  std::string corpusDir = "corpus";
  CLI::App* corp = app.add_subcommand("corpus", "write the built-in example files");
  corp->add_option("dir", corpusDir, "target directory")->capture_default_str();

  std::string suiteWhat;
  CLI::App* sui = app.add_subcommand("suite", "run the full verification battery");
  sui->add_option("what", suiteWhat, "corpus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  try {
    if (check->parsed()) return cmd_check(checkPath, checkLevel, json);
    if (cons->parsed()) return cmd_construct(consWhat, consPath, consOut, json);
    if (untw->parsed()) return cmd_untwist(untwistPath, untwistOut, json);
    if (ver->parsed()) return cmd_verify(verWhat, verPath, json);
    if (enu->parsed()) return cmd_enumerate(enumKind, enumMax, upToIso, json);
    if (rnd->parsed()) return cmd_random(randKind, randSize, randSeed, randOut, json);
    if (corp->parsed()) return cmd_corpus(corpusDir, json);
    if (sui->parsed()) return cmd_suite(suiteWhat, json, argv[0]);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
