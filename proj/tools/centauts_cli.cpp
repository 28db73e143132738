// centauts: verify central-automorphism characterizations on small p-groups.
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/group_file.hpp"
#include "centauts/report.hpp"
#include "centauts/scan.hpp"

using namespace centauts;

namespace {

struct Loaded {
  std::string id;
  Group group;
};

Loaded load(const std::string& target) {
  for (const auto& e : catalog())
    if (e.name == target) return {e.name, e.build()};
  if (std::filesystem::exists(target)) {
    GroupFile f = parse_group_file(target, kHardElementCap);
    return {f.name, f.group};
  }
  throw Error(ErrorKind::ConfigError, "'" + target + "' is neither a catalog group nor a file");
}

int analyze(const std::string& target, std::vector<std::string> checks, const std::string& format,
            std::uint64_t budget) {
  if (checks.empty()) checks = known_checks();
  RunConfig cfg;
  cfg.checks = checks;
  cfg.outputFormat = format;
  cfg.budget = budget;
  validate(cfg);
  Loaded g = load(target);
  AnalysisOptions options;
  options.limits.budget = budget;
  options.cap = kHardElementCap;
  ScanResult result;
  result.reports.push_back(analyze_group(g.id, g.group, checks, options));
  if (result.reports.back().verdict == Verdict::Counterexample) {
    for (auto& c : result.reports.back().checks)
      if (c.status == CheckStatus::Fail) c.data["groupFile"] = group_to_json(g.group, g.id);
  }
  if (format == "csv") {
    std::cout << emit_csv(result.reports);
  } else {
    std::cout << emit_json(report_to_json(result.reports.back()));
  }
  return has_counterexample_or_error(result) ? 1 : 0;
}

int sweep(unsigned p, std::size_t maxExp) {
  if (!is_prime(p)) throw Error(ErrorKind::ConfigError, std::to_string(p) + " is not prime");
  Lemma4Sweep s = verify_lemma4_sweep(p, maxExp);
  std::cout << emit_json(sweep_to_json(s));
  return s.holds() ? 0 : 1;
}

int list_catalog() {
  for (const auto& e : catalog()) std::cout << e.name << '\t' << e.order << '\t' << e.description << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central automorphisms of small finite p-groups"};
  app.set_version_flag("--version", std::string(CENTAUTS_VERSION));
  app.require_subcommand(1);

  std::string target, format = "json";
  std::vector<std::string> checks;
  std::uint64_t budget = SearchLimits{}.budget;
  auto* analyzeCmd = app.add_subcommand("analyze", "run checks on one catalog group or group file");
  analyzeCmd->add_option("group", target, "catalog name or path to a group file")->required();
  analyzeCmd->add_option("--check", checks, "check to run (repeatable; default all)")
      ->check(CLI::IsMember(known_checks()));
  analyzeCmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyzeCmd->add_option("--budget", budget, "automorphism search budget");

  RunConfig cfg;
  std::vector<std::string> files;
  std::string cacheDir, output;
  auto* scanCmd = app.add_subcommand("scan", "run checks over the catalog and any group files");
  scanCmd->add_option("--max-order", cfg.maxOrder, "largest group order scanned");
  scanCmd->add_option("--prime", cfg.primes, "restrict to p-groups for these primes (repeatable)");
  scanCmd->add_option("--check", cfg.checks, "check to run (repeatable; default all)")
      ->check(CLI::IsMember(known_checks()));
  scanCmd->add_option("--format", cfg.outputFormat, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scanCmd->add_option("--cache-dir", cacheDir, "directory for cached reports");
  scanCmd->add_option("--budget", cfg.budget, "automorphism search budget");
  scanCmd->add_option("--group-file", files, "extra group file (repeatable)");
  scanCmd->add_option("--sweep-max-exp", cfg.sweepMaxExp, "lemma4 sweep bound p^e (0: default)");
  scanCmd->add_option("-o,--output", output, "write the report here instead of stdout");

  unsigned prime = 2;
  std::size_t maxExp = 6;
  auto* sweepCmd = app.add_subcommand("sweep-lemma4", "check the Hom-order comparison on all type triples");
  sweepCmd->add_option("--prime", prime, "prime")->required();
  sweepCmd->add_option("--max-exp", maxExp, "orders up to p^e")->required();

  auto* listCmd = app.add_subcommand("list-catalog", "print the builtin groups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyzeCmd) return analyze(target, checks, format, budget);
    if (*sweepCmd) return sweep(prime, maxExp);
    if (*listCmd) return list_catalog();
    if (*scanCmd) {
      if (!cacheDir.empty()) cfg.cacheDir = cacheDir;
      for (const auto& f : files) cfg.groupFiles.emplace_back(f);
      ScanResult result = scan_corpus(cfg);
      const std::string doc = emit_scan(cfg, result);
      if (output.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorKind::IoError, "cannot write " + output);
        out << doc;
      }
      return has_counterexample_or_error(result) ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "centauts: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
