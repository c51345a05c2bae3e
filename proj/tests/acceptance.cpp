// Acceptance battery: one line per criterion, exit 0 only when all pass.
// --cli <path> points at the command line tool so the exit-code contract
// can be exercised end to end; without it those checks are skipped.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include "nagata/all.hpp"

namespace {

int spawn_check(const std::string& cli, const nagata::corpus::NegativeEntry& e) {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / ("acceptance-" + e.name + ".alg");
  nagata::save_structure(e.structure, p.string());
  const std::string cmd = "\"" + cli + "\" check \"" + p.string() + "\" >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  std::error_code ec;
  fs::remove(p, ec);
#ifdef __unix__
  if (rc != -1 && WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
#else
  return rc;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  std::function<int(const nagata::corpus::NegativeEntry&)> spawn;
  if (!cli.empty())
    spawn = [&cli](const nagata::corpus::NegativeEntry& e) { return spawn_check(cli, e); };
  else
    std::cerr << "note: no --cli given, exit-code checks are skipped\n";

  bool all = true;
  try {
    for (const auto& cr : nagata::suite::run_all(spawn)) {
      const bool ok = cr.passed();
      all = all && ok;
      std::cout << "criterion " << cr.id << " " << (ok ? "PASS" : "FAIL") << " " << cr.title
                << " (" << cr.entries.size() << " checks)" << std::endl;
      if (!ok)
        for (const auto& e : cr.entries)
          if (!e.report.passed) {
            std::cerr << "  " << e.name << ": " << e.report.axiom;
            const std::string w = nagata::witness_text(e.report);
            if (!w.empty()) std::cerr << " [" << w << "]";
            if (!e.report.detail.empty()) std::cerr << " " << e.report.detail;
            std::cerr << "\n";
          }
    }
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  return all ? 0 : 1;
}
