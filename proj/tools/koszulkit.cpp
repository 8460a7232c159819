#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "koszulkit/harness/compute.hpp"
#include "koszulkit/harness/suites.hpp"

using namespace koszulkit;
using namespace koszulkit::harness;

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitError = 3;

struct Flags {
  std::string ring, ideal, module, module2, pred, out, format = "text", spec_path, profile = "default";
  std::optional<int> s, i, L, tmax, hilbert_degree, trials;
  std::optional<std::uint64_t> seed, bound, first;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--ring", f.ring, "ring literal, e.g. \"F101[x,y] grevlex\" or Z/8");
  cmd->add_option("--ideal", f.ideal, "ideal literal, e.g. \"(x, y^2)\"");
  cmd->add_option("--module", f.module, "module literal (default R)");
  cmd->add_option("--module2", f.module2, "second module (Tor/Ext first argument; default R/a)");
  cmd->add_option("--pred", f.pred, "zero, finlen, noeth or supp:<module literal>");
  cmd->add_option("--s", f.s, "degree cutoff");
  cmd->add_option("--i", f.i, "homological degree");
  cmd->add_option("--trials", f.trials, "number of seeded trials");
  cmd->add_option("--seed", f.seed, "base seed");
  cmd->add_option("--bound", f.bound, "finite module size bound");
  cmd->add_option("--tmax", f.tmax, "socle tower length");
  cmd->add_option("--L", f.L, "resolution bound");
  cmd->add_option("--hilbert-degree", f.hilbert_degree, "Hilbert function span");
  cmd->add_option("--out", f.out, "write the report to this path");
  cmd->add_option("--format", f.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--spec", f.spec_path, "JSON file with the same keys as the flags");
}

InstanceSpec merged_spec(const Flags& f) {
  InstanceSpec spec = f.spec_path.empty() ? InstanceSpec{} : load_spec_file(f.spec_path);
  if (!f.ring.empty()) spec.ring = f.ring;
  if (!f.ideal.empty()) spec.ideal = f.ideal;
  if (!f.module.empty()) spec.module = f.module;
  if (!f.module2.empty()) spec.module2 = f.module2;
  if (!f.pred.empty()) spec.predicate = f.pred;
  if (f.s) spec.s = *f.s;
  if (f.i) spec.i = *f.i;
  if (f.L) spec.L = *f.L;
  if (f.tmax) spec.t_max = *f.tmax;
  if (f.hilbert_degree) spec.hilbert_degree = *f.hilbert_degree;
  if (f.seed) spec.seed = *f.seed;
  if (f.trials) spec.trials = *f.trials;
  if (f.bound) spec.bound = *f.bound;
  if (spec.s < 0) throw ParseError("--s must be non-negative", 0);
  return spec;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw Error("cannot write '" + f.out + "'");
  file << text;
}

std::string compute_csv(const nlohmann::ordered_json& j) {
  std::string out = "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
    out += csv_field(it.key()) + "," + csv_field(v) + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"koszulkit: Koszul, Tor, Ext and local (co)homology against Serre classes"};
  app.require_subcommand(1);

  Flags cf;
  std::string what;
  auto* compute = app.add_subcommand("compute", "run one computation");
  compute->add_option("what", what, "koszul, ext, tor, depth, width, pdepth, pwidth, socle or localhom")->required();
  add_common(compute, cf);

  Flags sf;
  std::string suite;
  auto* suite_cmd = app.add_subcommand("suite", "run a named suite over seeded instances");
  suite_cmd->add_option("id", suite, "suite id")->required();
  add_common(suite_cmd, sf);
  suite_cmd->add_option("--first", sf.first, "index of the first trial");
  suite_cmd->add_option("--profile", sf.profile, "instance profile: default, xy or xyz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (compute->parsed()) {
      const auto j = run_compute(what, merged_spec(cf));
      emit(cf, cf.format == "csv" ? compute_csv(j) : j.dump(2) + "\n");
      return 0;
    }
    const InstanceSpec spec = merged_spec(sf);
    SuiteOptions opt;
    opt.seed = spec.seed;
    opt.first = sf.first.value_or(0);
    opt.trials = sf.trials ? *sf.trials : (spec.trials > 0 ? spec.trials : 20);
    if (!sf.pred.empty()) opt.predicates = {sf.pred};
    opt.s = sf.s;
    opt.L = spec.L;
    opt.t_max = spec.t_max;
    opt.profile = sf.profile;
    if (!spec.ring.empty()) opt.rings = {spec.ring};
    opt.bound = spec.bound;
    opt.threads = threads_from_env();
    const SuiteReport report = run_suite(suite, opt);
    emit(sf, sf.format == "csv" ? render_csv(report) : render_text(report));
    if (!report.passed()) {
      for (const auto& c : report.counterexamples)
        std::cerr << "violation: trial " << c.index << " (" << c.assertion << "); rerun: " << c.rerun << "\n";
      return kExitViolation;
    }
    return 0;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
