#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "koszulkit/harness/compute.hpp"
#include "koszulkit/harness/suites.hpp"

using namespace koszulkit;
using namespace koszulkit::harness;
using J = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(KOSZULKIT_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("random instances are reproducible") {
  J a, b;
  to_json(a, random_instance(0));
  to_json(b, random_instance(0));
  CHECK(a == b);
  const J golden = J::parse(slurp(std::string(KOSZULKIT_SOURCE_DIR) + "/tests/golden/random_instance_seed0.json"));
  CHECK(a == golden);

  J one, two;
  to_json(one, random_instance(1));
  to_json(two, random_instance(2));
  CHECK(one != two);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const InstanceSpec spec = random_instance(s, "xyz");
    CHECK(spec.ring.rfind("F101[x,y,z]", 0) == 0);
    const Instance in = materialize(spec);
    CHECK(in.ideal.size() >= 1);
    CHECK(in.ideal.size() <= 3);
    CHECK(in.s >= 0);
    CHECK(in.s <= static_cast<int>(in.ideal.size()));
  }
}

TEST_CASE("instance json round trip") {
  InstanceSpec spec = random_instance(5);
  spec.L = 4;
  spec.hilbert_degree = 9;
  J j;
  to_json(j, spec);
  InstanceSpec back;
  from_json(j, back);
  J again;
  to_json(again, back);
  CHECK(j == again);
}

TEST_CASE("suite reports are byte identical across runs and thread counts") {
  SuiteOptions opt;
  opt.seed = 7;
  opt.trials = 12;
  opt.threads = 1;
  const std::string first = render_text(run_suite("thm31", opt));
  opt.threads = 4;
  const std::string second = render_text(run_suite("thm31", opt));
  CHECK(first == second);
  CHECK(first.find("time") == std::string::npos);

  // A window of trials reproduces the corresponding records of the full run.
  SuiteOptions window = opt;
  window.first = 5;
  window.trials = 1;
  const SuiteReport part = run_suite("thm31", window);
  const SuiteReport full = run_suite("thm31", opt);
  REQUIRE(!part.records.empty());
  J a = to_json(part)["records"][0];
  const J full_json = to_json(full);
  J b;
  for (const auto& r : full_json["records"])
    if (r["index"] == 5) {
      b = r;
      break;
    }
  CHECK(a == b);
}

TEST_CASE("csv projection has one row per record") {
  SuiteOptions opt;
  opt.seed = 3;
  opt.trials = 4;
  const SuiteReport r = run_suite("thm33", opt);
  const std::string csv = render_csv(r);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == r.records.size() + 1);
  CHECK(csv.rfind("index,seed,pred,status", 0) == 0);
  CHECK(r.passed());
  CHECK(csv_field("zero") == "zero");
  CHECK(csv_field("supp:R/(x, y)") == "\"supp:R/(x, y)\"");
  CHECK(csv_field("{\"a\":1}") == "\"{\"\"a\"\":1}\"");
}

TEST_CASE("every suite runs a small window") {
  for (const std::string& id : suite_ids()) {
    CAPTURE(id);
    SuiteOptions opt;
    opt.seed = 11;
    opt.trials = 3;
    opt.bound = 16;
    opt.rings = {"Z/4"};
    const SuiteReport r = run_suite(id, opt);
    CHECK(r.passed());
    CHECK(!r.records.empty());
    CHECK(!suite_statement(id).empty());
  }
  SuiteOptions opt;
  CHECK_THROWS_AS(run_suite("nope", opt), ParseError);
}

TEST_CASE("compute targets against closed forms") {
  InstanceSpec spec;
  spec.ring = "F101[x,y,z] grevlex";
  spec.ideal = "(x, y, z)";
  const J depth = run_compute("depth", spec);
  CHECK(depth["result"] == "3");
  CHECK(depth["regular_sequence"].size() == 3);

  // H_0 of the Koszul complex on (x, y) over k[x, y] is the residue field.
  spec.ring = "F101[x,y] grevlex";
  spec.ideal = "(x, y)";
  const J k0 = run_compute("koszul", spec);
  CHECK(k0["result"]["length"] == 1);
  CHECK(k0["certificates"]["self_dual"] == true);
  spec.i = 2;
  const J k2 = run_compute("koszul", spec);
  CHECK(k2["result"]["zero"] == true);

  // Tor_1(R/(x), R/(x)) = R/(x) shifted by one: Hilbert function 1, 1, 1, ... from degree 1.
  spec.ideal = "(x)";
  spec.module = "module coker [x] over R;";
  spec.i = 1;
  const J t = run_compute("tor", spec);
  CHECK(t["result"]["hilbert_from"] == 1);
  CHECK(t["result"]["hilbert"][0] == 1);
  CHECK(t["result"]["hilbert"][3] == 1);

  // depth_(x)(R/(x)) = 0, width_(x)(R) = 0.
  spec.i = 0;
  CHECK(run_compute("depth", spec)["result"] == "0");
  spec.module = "R";
  CHECK(run_compute("width", spec)["result"] == "0");

  CHECK_THROWS_AS(run_compute("localhom", spec), CapabilityError);
  CHECK_THROWS_AS(run_compute("frobnicate", spec), ParseError);
}

TEST_CASE("finite compute") {
  InstanceSpec spec;
  spec.ring = "Z/8";
  spec.ideal = "(2)";
  spec.i = 1;
  // Z/8 is self-injective.
  CHECK(run_compute("ext", spec)["result"]["zero"] == true);
  spec.i = 0;
  CHECK(run_compute("ext", spec)["result"]["size"] == 2);
  const J lh = run_compute("localhom", spec);
  CHECK(lh["stable_power"]["ideal"] == "(0)");
  CHECK(lh["result"]["size"] == 8);
  CHECK(run_compute("depth", spec)["result"] == 0);
  CHECK_THROWS_AS(run_compute("socle", spec), CapabilityError);
}

TEST_CASE("cli exit codes") {
  CHECK(cli("compute depth --ring \"F101[x,y] grevlex\" --ideal \"(x, y)\"") == 0);
  CHECK(cli("suite thm31 --trials 2 --seed 1") == 0);
  CHECK(cli("compute localhom --ring \"F101[x,y] grevlex\" --ideal \"(x)\"") == 3);
  CHECK(cli("compute depth --ring \"F101[x,y grevlex\" --ideal \"(x)\"") == 3);
  CHECK(cli("suite nope") == 3);
  CHECK(cli("frobnicate") == 3);
}
