#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "koszulkit/serre.hpp"

namespace koszulkit::harness {

// Literal-level description of one computation or one suite trial. Every field
// is text in the ring-core / fpmod / finitering literal syntaxes, so a record
// can be pasted back into the CLI.
struct InstanceSpec {
  std::string backend = "polynomial";  // or "finite"
  std::string ring;
  std::string ideal;
  std::string module = "R";
  std::string module2;
  std::string predicate = "zero";
  int s = 0;
  int i = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<int> L;    // resolution bound
  int t_max = 8;           // socle tower
  std::optional<int> hilbert_degree;
  std::uint64_t bound = 64;  // finite module size bound
};

void to_json(nlohmann::ordered_json& j, const InstanceSpec& spec);
void from_json(const nlohmann::ordered_json& j, InstanceSpec& spec);

// Profiles: "default" (two or three variables), "xy", "xyz". All use F101,
// n <= 3 generators of degree <= 3, module rank <= 2 with <= 4 relations.
// About one draw in six replaces M by R/(1 - a_1), on which a_1 acts invertibly.
InstanceSpec random_instance(std::uint64_t seed, const std::string& profile = "default");

// Parsed polynomial-backend objects. `module2` defaults to R/a.
struct Instance {
  RingHandle ring;
  IdealGens ideal;
  FPModule module;
  FPModule module2;
  int s = 0;
};
Instance materialize(const InstanceSpec& spec);

// Reads a JSON object whose keys match the CLI flags (ring, ideal, module, ...).
InstanceSpec load_spec_file(const std::string& path);

}  // namespace koszulkit::harness
