#include "koszulkit/harness/report.hpp"

#include <set>
#include <sstream>

namespace koszulkit::harness {

std::string to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::kPass: return "pass";
    case TrialStatus::kViolation: return "violation";
    case TrialStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::uint64_t SuiteReport::count(TrialStatus s) const {
  std::uint64_t c = 0;
  for (const auto& r : records) c += r.status == s;
  return c;
}

std::uint64_t SuiteReport::koszul_certified() const {
  std::uint64_t c = 0;
  for (const auto& r : records) c += r.koszul_certified;
  return c;
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
  using J = nlohmann::ordered_json;
  J records = J::array();
  for (const auto& t : r.records) {
    J conds = J::object(), asserts = J::object(), values = J::object();
    for (const auto& [k, v] : t.conditions) conds[k] = v;
    for (const auto& [k, v] : t.assertions) asserts[k] = v;
    for (const auto& [k, v] : t.values) values[k] = v;
    J rec{{"index", t.index}, {"seed", t.seed}, {"instance", t.instance}, {"pred", t.predicate},
          {"status", to_string(t.status)}, {"conditions", conds}, {"assertions", asserts},
          {"values", values}, {"koszul_certified", t.koszul_certified}};
    if (!t.note.empty()) rec["note"] = t.note;
    records.push_back(std::move(rec));
  }
  J counter = J::array();
  for (const auto& c : r.counterexamples)
    counter.push_back(J{{"index", c.index}, {"assertion", c.assertion}, {"rerun", c.rerun}});
  J summary{{"records", r.records.size()},
            {"passed", r.count(TrialStatus::kPass)},
            {"violations", r.count(TrialStatus::kViolation)},
            {"skipped", r.count(TrialStatus::kSkipped)},
            {"koszul_certified", r.koszul_certified()},
            {"verdict", r.passed() ? "all-agree" : "violation"}};
  for (const auto& [k, v] : r.summary_extra) summary[k] = v;
  return J{{"tool", "koszulkit"},      {"version", kVersion},     {"suite", r.suite},
           {"statement", r.statement}, {"seed", r.seed},          {"first", r.first},
           {"trials", r.trials},       {"predicates", r.predicates}, {"summary", summary},
           {"counterexamples", counter}, {"records", records}};
}

std::string render_text(const SuiteReport& r) { return to_json(r).dump(2) + "\n"; }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const SuiteReport& r) {
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto& t : r.records) {
    for (const auto* list : {&t.conditions, &t.assertions})
      for (const auto& [k, v] : *list)
        if (seen.insert(k).second) cols.push_back(k);
  }
  std::ostringstream out;
  out << "index,seed,pred,status";
  for (const auto& c : cols) out << ',' << c;
  out << '\n';
  for (const auto& t : r.records) {
    out << t.index << ',' << t.seed << ',' << csv_field(t.predicate) << ',' << to_string(t.status);
    for (const auto& c : cols) {
      std::string cell;
      for (const auto* list : {&t.conditions, &t.assertions})
        for (const auto& [k, v] : *list)
          if (k == c) cell = v ? "1" : "0";
      out << ',' << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace koszulkit::harness
