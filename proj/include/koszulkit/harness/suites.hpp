#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulkit/harness/report.hpp"

namespace koszulkit::harness {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t first = 0;  // trial indices first .. first+trials-1
  int trials = 20;
  std::vector<std::string> predicates;  // empty: the suite's default family
  std::optional<int> s;                 // overrides the drawn cutoff (clamped to n)
  std::optional<int> L;
  int t_max = 8;
  std::string profile = "default";
  std::vector<std::string> rings;  // finite suites; empty: the default ring list
  std::uint64_t bound = 64;
  std::size_t threads = 1;
};

// thm31, thm33, cor34, cor35, cor36, prop51, prop57, cor52, cor53, cor58, cor59,
// cor510, cor511, cor512, prop41, prop43, finitering-exhaustive, duality-sweep.
const std::vector<std::string>& suite_ids();
std::string suite_statement(const std::string& id);

// Trial t uses random_instance(derive_seed(seed, t)). Throws ParseError for an
// unknown id and CapabilityError / ParseError for bad options.
SuiteReport run_suite(const std::string& id, const SuiteOptions& options);

// Rings used by finitering-exhaustive when none are given.
const std::vector<std::string>& default_finite_rings();

// KOSZULKIT_THREADS when set (at least 1), otherwise the hardware concurrency.
std::size_t threads_from_env();

}  // namespace koszulkit::harness
