#include "centauts/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/group_file.hpp"
#include "centauts/report.hpp"

#ifndef CENTAUTS_VERSION
#define CENTAUTS_VERSION "dev"
#endif

namespace centauts {

using nlohmann::json;
namespace fs = std::filesystem;

void validate(const RunConfig& cfg) {
  if (cfg.checks.empty()) throw Error(ErrorKind::ConfigError, "no checks enabled");
  for (const auto& c : cfg.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw Error(ErrorKind::ConfigError, "unknown check '" + c + "'");
  }
  if (cfg.maxOrder == 0 || cfg.maxOrder > kHardElementCap) {
    throw Error(ErrorKind::ConfigError,
                "maxOrder must be between 1 and " + std::to_string(kHardElementCap));
  }
  for (unsigned p : cfg.primes)
    if (!is_prime(p)) throw Error(ErrorKind::ConfigError, std::to_string(p) + " is not prime");
  if (cfg.outputFormat != "json" && cfg.outputFormat != "csv")
    throw Error(ErrorKind::ConfigError, "unknown output format '" + cfg.outputFormat + "'");
  if (cfg.budget == 0) throw Error(ErrorKind::ConfigError, "budget must be positive");
}

std::size_t default_sweep_exp(unsigned p) {
  if (p == 2) return 6;
  if (p == 3) return 4;
  return 3;
}

std::string cache_key(const Group& g, const std::vector<std::string>& checks, std::uint64_t budget) {
  std::vector<std::string> sorted = checks;
  std::sort(sorted.begin(), sorted.end());
  std::string msg = std::string("centauts ") + CENTAUTS_VERSION + "\nbudget " + std::to_string(budget) + "\nchecks";
  for (const auto& c : sorted) msg += " " + c;
  msg += "\nn " + std::to_string(g.order()) + "\n";
  for (Element x : g.table()) {
    msg += static_cast<char>(x & 0xff);
    msg += static_cast<char>(x >> 8);
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(msg.data(), msg.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::IoError, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

std::optional<fs::path> cache_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("CENTAUTS_CACHE_DIR"); env && *env) return fs::path(env);
  return cfg.cacheDir;
}

std::optional<TheoremReport> cache_load(const fs::path& file, const std::string& groupId) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    TheoremReport r = report_from_json(json::parse(in));
    // the same table may be cached under another name
    r.groupId = groupId;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void cache_store(const fs::path& dir, const std::string& key, const TheoremReport& r) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = dir / (key + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    out << emit_json(report_to_json(r));
  }
  fs::rename(tmp, dir / (key + ".json"), ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot commit " + (dir / (key + ".json")).string());
}

TheoremReport error_report(const std::string& id, const Error& e) {
  TheoremReport r;
  r.groupId = id;
  r.verdict = Verdict::Error;
  r.checks.push_back(CheckResult{"load", CheckStatus::Error, e.what(),
                                 {{"errorKind", std::string(to_string(e.kind()))}}});
  return r;
}

bool prime_selected(const RunConfig& cfg, std::optional<unsigned> p) {
  if (cfg.primes.empty()) return true;
  return p && std::find(cfg.primes.begin(), cfg.primes.end(), *p) != cfg.primes.end();
}

}  // namespace

ScanResult scan_corpus(const RunConfig& cfg) {
  validate(cfg);
  ScanResult result;
  const auto dir = cache_dir(cfg);
  AnalysisOptions options;
  options.limits.budget = cfg.budget;
  options.cap = kHardElementCap;

  auto run = [&](const std::string& id, const Group& g) {
    if (g.order() > cfg.maxOrder || !prime_selected(cfg, p_group_prime(g))) return;
    std::string key;
    if (dir) {
      key = cache_key(g, cfg.checks, cfg.budget);
      if (auto hit = cache_load(*dir / (key + ".json"), id)) {
        ++result.cacheHits;
        result.reports.push_back(std::move(*hit));
        return;
      }
    }
    TheoremReport r = analyze_group(id, g, cfg.checks, options);
    if (r.verdict == Verdict::Counterexample) {
      for (auto& c : r.checks)
        if (c.status == CheckStatus::Fail) c.data["groupFile"] = group_to_json(g, id);
    }
    if (dir) cache_store(*dir, key, r);
    result.reports.push_back(std::move(r));
  };

  for (const auto& entry : catalog()) {
    if (entry.order > cfg.maxOrder) continue;
    try {
      run(entry.name, entry.build());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IoError) throw;
      result.reports.push_back(error_report(entry.name, e));
    }
  }
  for (const auto& path : cfg.groupFiles) {
    try {
      GroupFile f = parse_group_file(path, kHardElementCap);
      run(f.name, f.group);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IoError && fs::exists(path)) throw;
      result.reports.push_back(error_report(path.string(), e));
    }
  }

  if (std::find(cfg.checks.begin(), cfg.checks.end(), "lemma4") != cfg.checks.end()) {
    std::vector<unsigned> primes = cfg.primes.empty() ? std::vector<unsigned>{2, 3} : cfg.primes;
    for (unsigned p : primes)
      result.sweeps.push_back(verify_lemma4_sweep(p, cfg.sweepMaxExp ? cfg.sweepMaxExp : default_sweep_exp(p)));
  }
  return result;
}

json config_to_json(const RunConfig& cfg) {
  std::vector<std::string> files;
  for (const auto& f : cfg.groupFiles) files.push_back(f.string());
  return {{"maxOrder", cfg.maxOrder},
          {"primes", cfg.primes},
          {"checks", cfg.checks},
          {"outputFormat", cfg.outputFormat},
          {"budget", cfg.budget},
          {"groupFiles", files},
          {"sweepMaxExp", cfg.sweepMaxExp}};
}

json scan_to_json(const RunConfig& cfg, const ScanResult& result) {
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(report_to_json(r));
  json sweeps = json::array();
  for (const auto& s : result.sweeps) sweeps.push_back(sweep_to_json(s));
  std::size_t counterexamples = 0, errors = 0;
  for (const auto& r : result.reports) {
    counterexamples += r.verdict == Verdict::Counterexample;
    errors += r.verdict == Verdict::Error;
  }
  return {{"version", CENTAUTS_VERSION},
          {"config", config_to_json(cfg)},
          {"reports", reports},
          {"sweeps", sweeps},
          {"summary", {{"groups", result.reports.size()}, {"counterexamples", counterexamples}, {"errors", errors}}}};
}

std::string emit_scan(const RunConfig& cfg, const ScanResult& result) {
  if (cfg.outputFormat == "csv") return emit_csv(result.reports);
  return emit_json(scan_to_json(cfg, result));
}

bool has_counterexample_or_error(const ScanResult& result) {
  for (const auto& r : result.reports)
    if (r.verdict != Verdict::Agree) return true;
  for (const auto& s : result.sweeps)
    if (!s.holds()) return true;
  return false;
}

}  // namespace centauts
