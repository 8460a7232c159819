#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszulkit/harness/instance.hpp"

namespace koszulkit::harness {

inline constexpr const char* kVersion = "0.1.0";

enum class TrialStatus { kPass, kViolation, kSkipped };
std::string to_string(TrialStatus s);

struct TrialRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  InstanceSpec instance;
  std::string predicate;
  TrialStatus status = TrialStatus::kPass;
  // Evaluated conditions, in the order the statement lists them.
  std::vector<std::pair<std::string, bool>> conditions;
  // Assertions that must hold; the first false one makes the trial a violation.
  std::vector<std::pair<std::string, bool>> assertions;
  std::vector<std::pair<std::string, std::string>> values;
  std::uint64_t koszul_certified = 0;
  std::string note;
};

struct Counterexample {
  std::uint64_t index = 0;
  std::string assertion;
  std::string rerun;
};

struct SuiteReport {
  std::string suite;
  std::string statement;
  std::uint64_t seed = 0;
  std::uint64_t first = 0;
  int trials = 0;
  std::vector<std::string> predicates;
  std::vector<TrialRecord> records;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::string>> summary_extra;

  std::uint64_t count(TrialStatus s) const;
  std::uint64_t koszul_certified() const;
  bool passed() const { return count(TrialStatus::kViolation) == 0; }
};

nlohmann::ordered_json to_json(const SuiteReport& r);
// Indented JSON; identical inputs give identical bytes.
std::string render_text(const SuiteReport& r);
// RFC 4180 quoting when the text has a comma, quote or newline.
std::string csv_field(const std::string& text);
// One row per record: index, seed, predicate, status, then every condition and assertion.
std::string render_csv(const SuiteReport& r);

}  // namespace koszulkit::harness
