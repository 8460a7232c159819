#include "koszulkit/harness/instance.hpp"

#include <fstream>
#include <sstream>

#include "koszulkit/parse.hpp"
#include "koszulkit/random.hpp"

namespace koszulkit::harness {

void to_json(nlohmann::ordered_json& j, const InstanceSpec& spec) {
  j = nlohmann::ordered_json{{"backend", spec.backend}, {"ring", spec.ring},   {"ideal", spec.ideal},
                             {"module", spec.module},   {"module2", spec.module2}, {"pred", spec.predicate},
                             {"s", spec.s},             {"i", spec.i}};
}

void from_json(const nlohmann::ordered_json& j, InstanceSpec& spec) {
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("backend", spec.backend);
  get("ring", spec.ring);
  get("ideal", spec.ideal);
  get("module", spec.module);
  get("module2", spec.module2);
  get("pred", spec.predicate);
  get("s", spec.s);
  get("i", spec.i);
  get("seed", spec.seed);
  get("trials", spec.trials);
  get("tmax", spec.t_max);
  get("bound", spec.bound);
  if (j.contains("L")) spec.L = j.at("L").get<int>();
  if (j.contains("hilbert_degree")) spec.hilbert_degree = j.at("hilbert_degree").get<int>();
}

InstanceSpec random_instance(std::uint64_t seed, const std::string& profile) {
  Rng rng(seed);
  std::size_t nvars = 0;
  if (profile == "default") {
    nvars = 2 + rng() % 2;
  } else if (profile == "xy") {
    nvars = 2;
  } else if (profile == "xyz") {
    nvars = 3;
  } else {
    throw ParseError("unknown instance profile '" + profile + "'", 0);
  }
  const std::string ring_text = nvars == 2 ? "F101[x,y] grevlex" : "F101[x,y,z] grevlex";
  const RingHandle R = parse_ring(ring_text);
  const IdealGens a = random_ideal(R, rng);
  const FPModule M = random_module(R, rng);
  const FPModule N = random_module(R, rng);
  const bool invertible = rng() % 6 == 0 && !a.is_zero_ideal();

  InstanceSpec spec;
  spec.ring = ring_text;
  spec.ideal = a.to_string();
  spec.module = invertible ? "R/(1 - (" + a.gens()[0].to_string() + "))" : M.to_literal();
  spec.module2 = N.to_literal();
  spec.s = static_cast<int>(rng() % (a.size() + 1));
  spec.seed = seed;
  return spec;
}

Instance materialize(const InstanceSpec& spec) {
  if (spec.backend != "polynomial") throw CapabilityError("materialize: polynomial backend only");
  const RingHandle R = parse_ring(spec.ring);
  IdealGens a = parse_ideal(R, spec.ideal.empty() ? "()" : spec.ideal);
  FPModule M = parse_module(R, spec.module.empty() ? "R" : spec.module);
  FPModule N = spec.module2.empty() ? FPModule::cyclic(a) : parse_module(R, spec.module2);
  return Instance{R, std::move(a), std::move(M), std::move(N), spec.s};
}

InstanceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("spec file: ") + e.what(), e.byte);
  }
  InstanceSpec spec;
  from_json(j, spec);
  return spec;
}

}  // namespace koszulkit::harness
