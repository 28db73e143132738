#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/group_file.hpp"
#include "centauts/report.hpp"
#include "centauts/scan.hpp"

using namespace centauts;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("centauts-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::IoError, "");
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("group files: cayley") {
  GroupFile f = parse_group_text(R"({"name": "C2", "format": "cayley", "n": 2, "table": [[0, 1], [1, 0]]})");
  CHECK(f.name == "C2");
  CHECK(f.group.order() == 2);
}

TEST_CASE("group files: perm") {
  GroupFile f = parse_group_text(
      R"({"name": "D8", "format": "perm", "degree": 4, "generators": [[1, 2, 3, 0], [2, 1, 0, 3]]})");
  CHECK(f.group.order() == 8);
  CHECK(center(f.group).size() == 2);
}

TEST_CASE("group files: products of catalog names and nested specs") {
  GroupFile f = parse_group_text(R"({"name": "D8xC2", "format": "product", "factors": ["D8",
      {"format": "cayley", "n": 2, "table": [[0, 1], [1, 0]]}]})");
  CHECK(f.group.order() == 16);
  CHECK(f.group == catalog_group("D8xC2"));
}

TEST_CASE("group files: errors carry locations") {
  Error nonLatin = error_of([] { parse_group_text(R"({"format": "cayley", "n": 2, "table": [[0, 1], [1, 1]]})"); });
  CHECK(nonLatin.kind() == ErrorKind::NotAGroup);

  Error ragged = error_of([] { parse_group_text(R"({"format": "cayley", "n": 2, "table": [[0, 1], [1]]})"); });
  CHECK(ragged.kind() == ErrorKind::ParseError);
  CHECK(std::string(ragged.what()).find("/table/1") != std::string::npos);

  Error missing = error_of([] { parse_group_text(R"({"format": "perm", "degree": 3})"); });
  CHECK(missing.kind() == ErrorKind::ParseError);
  CHECK(std::string(missing.what()).find("generators") != std::string::npos);

  Error badValue = error_of([] { parse_group_text(R"({"format": "cayley", "n": 2, "table": [[0, "x"], [1, 0]]})"); });
  CHECK(std::string(badValue.what()).find("/table/0/1") != std::string::npos);

  Error notPerm = error_of([] { parse_group_text(R"({"format": "perm", "degree": 3, "generators": [[0, 0, 1]]})"); });
  CHECK(notPerm.kind() == ErrorKind::ParseError);
  CHECK(std::string(notPerm.what()).find("/generators/0/1") != std::string::npos);

  Error syntax = error_of([] { parse_group_text("{\n  \"format\": \"cayley\",\n  \"n\": 2,\n  oops\n}"); });
  CHECK(syntax.kind() == ErrorKind::ParseError);
  CHECK(std::string(syntax.what()).find("line 4") != std::string::npos);

  Error format = error_of([] { parse_group_text(R"({"format": "matrix"})"); });
  CHECK(std::string(format.what()).find("/format") != std::string::npos);

  Error unknown = error_of([] { parse_group_text(R"({"format": "product", "factors": ["D8", "Nope"]})"); });
  CHECK(unknown.kind() == ErrorKind::ParseError);
  CHECK(std::string(unknown.what()).find("/factors/1") != std::string::npos);

  Error big = error_of([] { parse_group_text(R"({"format": "product", "factors": ["Q8xQ8", "Q8xQ8"]})"); });
  CHECK(big.kind() == ErrorKind::SizeLimitExceeded);

  CHECK(error_of([] { parse_group_file("/nonexistent/group.json"); }).kind() == ErrorKind::IoError);
}

TEST_CASE("group files: emit and re-parse gives the same table") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Group g = e.build();
    GroupFile back = parse_group_text(group_to_json(g, e.name).dump(), kHardElementCap);
    CHECK(back.name == e.name);
    CHECK(back.group == g);
  }
  // a perm file round-trips to the same indexing as its closure
  GroupFile perm = parse_group_text(R"({"format": "perm", "degree": 5, "generators": [[1, 2, 0, 3, 4], [0, 1, 2, 4, 3]]})");
  GroupFile again = parse_group_text(group_to_json(perm.group, "p").dump());
  CHECK(again.group == perm.group);
}

TEST_CASE("group files: read from disk, name defaults to the stem") {
  TempDir dir;
  const fs::path p = dir.path / "klein.json";
  std::ofstream(p) << R"({"format": "cayley", "n": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})";
  GroupFile f = parse_group_file(p);
  CHECK(f.name == "klein");
  CHECK(f.group.order() == 4);
}

TEST_CASE("reports: JSON round trip") {
  TheoremReport r = analyze_group("D8", catalog_group("D8"), {"theorem"});
  nlohmann::json j = report_to_json(r);
  CHECK(j["conditionSide"]["all"] == true);
  CHECK(j["oracleSide"]["autcentOrder"] == 4);
  CHECK(j["lemmaChecks"]["theorem"] == "pass");
  CHECK(j["verdict"] == "agree");
  TheoremReport back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(emit_json(report_to_json(back)) == emit_json(j));

  TheoremReport all = analyze_group("D8xC2", catalog_group("D8xC2"), known_checks());
  CHECK(emit_json(report_to_json(report_from_json(report_to_json(all)))) == emit_json(report_to_json(all)));
  CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("reports: CSV") {
  CHECK(emit_csv({}) == std::string(kCsvHeader) + "\n");
  std::vector<TheoremReport> rs = {analyze_group("H(4,2,2)", catalog_group("H(4,2,2)"), {"theorem", "cor1"})};
  std::string csv = emit_csv(rs);
  CHECK(count_lines(csv) == 3);
  CHECK(csv.find("\"H(4,2,2)\",16,2,2,theorem,true,true,true,true,16,16,4,pass,agree") != std::string::npos);
}

TEST_CASE("scan: configuration errors") {
  RunConfig empty;
  empty.checks = {};
  CHECK(error_of([&] { scan_corpus(empty); }).kind() == ErrorKind::ConfigError);
  RunConfig big;
  big.maxOrder = kHardElementCap + 1;
  CHECK(error_of([&] { scan_corpus(big); }).kind() == ErrorKind::ConfigError);
  RunConfig unknown;
  unknown.checks = {"theorem", "lemma9"};
  CHECK(error_of([&] { scan_corpus(unknown); }).kind() == ErrorKind::ConfigError);
  RunConfig notPrime;
  notPrime.primes = {4};
  CHECK(error_of([&] { scan_corpus(notPrime); }).kind() == ErrorKind::ConfigError);
  RunConfig format;
  format.outputFormat = "xml";
  CHECK(error_of([&] { scan_corpus(format); }).kind() == ErrorKind::ConfigError);
}

TEST_CASE("scan: theorem up to order 16 has no counterexamples") {
  RunConfig cfg;
  cfg.checks = {"theorem"};
  cfg.maxOrder = 16;
  ScanResult r = scan_corpus(cfg);
  std::size_t expected = 0;
  for (const auto& e : catalog()) expected += e.order <= 16;
  CHECK(r.reports.size() == expected);
  CHECK_FALSE(has_counterexample_or_error(r));
  CHECK(r.sweeps.empty());
  // CSV row count = groups x checks
  CHECK(count_lines(emit_csv(r.reports)) == 1 + expected);
}

TEST_CASE("scan: the full corpus has one counterexample, C2 on lemma3") {
  RunConfig cfg;
  ScanResult r = scan_corpus(cfg);
  std::vector<std::string> bad;
  for (const auto& rep : r.reports) {
    if (rep.verdict == Verdict::Error) FAIL("error report for " << rep.groupId);
    if (rep.verdict != Verdict::Counterexample) continue;
    bad.push_back(rep.groupId);
    for (const auto& c : rep.checks) {
      if (c.status != CheckStatus::Fail) continue;
      CHECK(c.check == "lemma3");
      CHECK(c.data.contains("groupFile"));
    }
  }
  CHECK(bad == std::vector<std::string>{"C2"});
}

TEST_CASE("scan: prime filter and lemma4 sweeps") {
  RunConfig cfg;
  cfg.checks = {"lemma4"};
  cfg.primes = {3};
  cfg.sweepMaxExp = 3;
  ScanResult r = scan_corpus(cfg);
  for (const auto& rep : r.reports) CHECK(rep.prime == 3u);
  REQUIRE(r.sweeps.size() == 1);
  CHECK(r.sweeps[0].p == 3);
  CHECK(r.sweeps[0].triples == 28);
  CHECK(r.sweeps[0].holds());
}

TEST_CASE("scan: ingested files follow the catalog; bad files become error reports") {
  TempDir dir;
  const fs::path good = dir.path / "good.json";
  const fs::path bad = dir.path / "bad.json";
  std::ofstream(good) << R"({"name": "ext", "format": "product", "factors": ["Q8", "C2"]})";
  std::ofstream(bad) << R"({"format": "cayley", "n": 2, "table": [[0, 1], [1, 1]]})";
  RunConfig cfg;
  cfg.checks = {"theorem"};
  cfg.maxOrder = 16;
  cfg.groupFiles = {good, bad};
  ScanResult r = scan_corpus(cfg);
  REQUIRE(r.reports.size() >= 2);
  CHECK(r.reports[r.reports.size() - 2].groupId == "ext");
  CHECK(r.reports.back().verdict == Verdict::Error);
  CHECK(has_counterexample_or_error(r));
}

TEST_CASE("scan: determinism and cache correctness") {
  TempDir dir;
  RunConfig cfg;
  cfg.maxOrder = 32;
  cfg.sweepMaxExp = 4;
  const std::string fresh1 = emit_scan(cfg, scan_corpus(cfg));
  const std::string fresh2 = emit_scan(cfg, scan_corpus(cfg));
  CHECK(fresh1 == fresh2);

  cfg.cacheDir = dir.path;
  ScanResult cold = scan_corpus(cfg);
  CHECK(cold.cacheHits == 0);
  ScanResult warm = scan_corpus(cfg);
  CHECK(warm.cacheHits == warm.reports.size());
  CHECK(emit_scan(cfg, cold) == fresh1);
  CHECK(emit_scan(cfg, warm) == fresh1);

  cfg.outputFormat = "csv";
  CHECK(emit_scan(cfg, warm) == emit_scan(cfg, cold));

  // a different check set or budget is a different key
  Group d8 = catalog_group("D8");
  CHECK(cache_key(d8, {"theorem"}, 10) != cache_key(d8, {"theorem", "cor1"}, 10));
  CHECK(cache_key(d8, {"theorem"}, 10) != cache_key(d8, {"theorem"}, 11));
  CHECK(cache_key(d8, {"cor1", "theorem"}, 10) == cache_key(d8, {"theorem", "cor1"}, 10));
  CHECK(cache_key(d8, {"theorem"}, 10).size() == 64);
}

TEST_CASE("scan: CENTAUTS_CACHE_DIR overrides the configured directory") {
  TempDir configured, env;
  ::setenv("CENTAUTS_CACHE_DIR", env.path.c_str(), 1);
  RunConfig cfg;
  cfg.checks = {"cor1"};
  cfg.maxOrder = 8;
  cfg.cacheDir = configured.path;
  scan_corpus(cfg);
  ::unsetenv("CENTAUTS_CACHE_DIR");
  CHECK(fs::is_empty(configured.path));
  CHECK_FALSE(fs::is_empty(env.path));
}

TEST_CASE("scan: corrupt cache entries are recomputed") {
  TempDir dir;
  RunConfig cfg;
  cfg.checks = {"theorem"};
  cfg.maxOrder = 8;
  cfg.cacheDir = dir.path;
  const std::string fresh = emit_scan(cfg, scan_corpus(cfg));
  for (const auto& entry : fs::directory_iterator(dir.path)) std::ofstream(entry.path()) << "{ truncated";
  ScanResult again = scan_corpus(cfg);
  CHECK(again.cacheHits == 0);
  CHECK(emit_scan(cfg, again) == fresh);
}
