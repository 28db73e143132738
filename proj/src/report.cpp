#include "centauts/report.hpp"

#include <sstream>

#include "centauts/error.hpp"

namespace centauts {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json();
}

CheckStatus status_from(const std::string& s) {
  for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::NotApplicable, CheckStatus::Error})
    if (to_string(st) == s) return st;
  throw Error(ErrorKind::ParseError, "unknown check status '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (auto v : {Verdict::Agree, Verdict::Counterexample, Verdict::Error})
    if (to_string(v) == s) return v;
  throw Error(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

json report_to_json(const TheoremReport& r) {
  json j;
  j["groupId"] = r.groupId;
  j["order"] = r.order;
  j["prime"] = opt(r.prime);
  j["class"] = opt(r.nilClass);
  if (r.condition) {
    j["conditionSide"] = {{"rEqS", r.condition->rEqS},
                          {"residualIso", r.condition->residualIso},
                          {"expEq", r.condition->expEq},
                          {"all", r.condition->all}};
  } else {
    j["conditionSide"] = nullptr;
  }
  if (r.oracle) {
    j["oracleSide"] = {{"autcentOrder", r.oracle->autcentOrder},
                       {"autZZOrder", r.oracle->autZZOrder},
                       {"innOrder", r.oracle->innOrder},
                       {"autcentEqualsAutZZ", r.oracle->autcentEqualsAutZZ},
                       {"autcentEqualsInn", r.oracle->autcentEqualsInn},
                       {"autZZSubsetAutcent", r.oracle->autZZSubsetAutcent}};
  } else {
    j["oracleSide"] = nullptr;
  }
  json lemma = json::object();
  json checks = json::array();
  for (const auto& c : r.checks) {
    lemma[c.check] = to_string(c.status);
    checks.push_back({{"check", c.check}, {"status", to_string(c.status)}, {"detail", c.detail}, {"data", c.data}});
  }
  j["lemmaChecks"] = lemma;
  j["checks"] = checks;
  j["verdict"] = to_string(r.verdict);
  return j;
}

TheoremReport report_from_json(const json& j) {
  try {
    TheoremReport r;
    r.groupId = j.at("groupId").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    if (!j.at("prime").is_null()) r.prime = j.at("prime").get<unsigned>();
    if (!j.at("class").is_null()) r.nilClass = j.at("class").get<int>();
    if (const json& c = j.at("conditionSide"); !c.is_null()) {
      r.condition = ConditionSide{c.at("rEqS").get<bool>(), c.at("residualIso").get<bool>(),
                                  c.at("expEq").get<bool>(), c.at("all").get<bool>()};
    }
    if (const json& o = j.at("oracleSide"); !o.is_null()) {
      r.oracle = OracleSide{o.at("autcentOrder").get<std::size_t>(),   o.at("autZZOrder").get<std::size_t>(),
                            o.at("innOrder").get<std::size_t>(),       o.at("autcentEqualsAutZZ").get<bool>(),
                            o.at("autcentEqualsInn").get<bool>(),      o.at("autZZSubsetAutcent").get<bool>()};
    }
    for (const json& c : j.at("checks")) {
      r.checks.push_back(CheckResult{c.at("check").get<std::string>(), status_from(c.at("status").get<std::string>()),
                                     c.at("detail").get<std::string>(), c.at("data")});
    }
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

json sweep_to_json(const Lemma4Sweep& s) {
  json failures = json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"a", f.a.exps()},
                        {"b", f.b.exps()},
                        {"c", f.c.exps()},
                        {"t", f.result.t},
                        {"threshold", f.result.threshold.str()},
                        {"strict", f.result.strict},
                        {"homAC", f.result.homAC.str()},
                        {"homBC", f.result.homBC.str()}});
  }
  return {{"p", s.p},
          {"maxExp", s.maxExp},
          {"triples", s.triples},
          {"strictCount", s.strictCount},
          {"failures", failures},
          {"holds", s.holds()}};
}

std::string emit_csv(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << csv_field(r.groupId) << ',' << r.order << ',' << (r.prime ? std::to_string(*r.prime) : "") << ','
          << (r.nilClass ? std::to_string(*r.nilClass) : "") << ',' << c.check << ',';
      if (r.condition) {
        out << flag(r.condition->rEqS) << ',' << flag(r.condition->residualIso) << ','
            << flag(r.condition->expEq) << ',' << flag(r.condition->all) << ',';
      } else {
        out << ",,,,";
      }
      if (r.oracle) {
        out << r.oracle->autcentOrder << ',' << r.oracle->autZZOrder << ',' << r.oracle->innOrder << ',';
      } else {
        out << ",,,";
      }
      out << to_string(c.status) << ',' << to_string(r.verdict) << '\n';
    }
  }
  return out.str();
}

std::string emit_json(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace centauts
