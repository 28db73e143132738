#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "centauts/theory.hpp"

namespace centauts {

struct RunConfig {
  std::size_t maxOrder = 128;
  std::vector<unsigned> primes;  // empty: every group, including non-p-groups
  std::vector<std::string> checks = known_checks();
  std::string outputFormat = "json";
  std::optional<std::filesystem::path> cacheDir;
  std::uint64_t budget = SearchLimits{}.budget;
  std::vector<std::filesystem::path> groupFiles;  // ingested after the catalog
  // lemma4 sweep bound per prime; 0 picks the default (6 at p=2, 4 at p=3, 3 otherwise)
  std::size_t sweepMaxExp = 0;
};

// ConfigError when the configuration is unusable (empty checks, unknown
// check or format, maxOrder beyond the hard cap, a non-prime in primes).
void validate(const RunConfig& cfg);
std::size_t default_sweep_exp(unsigned p);

struct ScanResult {
  std::vector<TheoremReport> reports;
  std::vector<Lemma4Sweep> sweeps;
  std::size_t cacheHits = 0;
};

/// Catalog groups in catalog order, then ingested files in the given order.
/// Per-group failures are captured in the reports. The cache directory
/// (CENTAUTS_CACHE_DIR overrides cfg.cacheDir) holds one file per report,
/// keyed by a SHA-256 of the table, the check set, the budget and the version.
ScanResult scan_corpus(const RunConfig& cfg);

std::string cache_key(const Group& g, const std::vector<std::string>& checks, std::uint64_t budget);

nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json scan_to_json(const RunConfig& cfg, const ScanResult& result);
// The scan rendered in cfg.outputFormat.
std::string emit_scan(const RunConfig& cfg, const ScanResult& result);

bool has_counterexample_or_error(const ScanResult& result);

}  // namespace centauts
