#include "koszulkit/harness/suites.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "koszulkit/finite/verify.hpp"
#include "koszulkit/parallel.hpp"
#include "koszulkit/random.hpp"

namespace koszulkit::harness {

namespace {

constexpr const char* kFiniteStatement =
    "on finite rings: Koszul / Tor / Tor against some N / local homology agree, dually with Ext and local cohomology; "
    "torsion and completion conditions; vanishing of M/aM, H^a_0(M) and the completion agree";
constexpr const char* kDualityStatement =
    "|H_i(a; M*)| = |H_{n-i}(a; M)| with H_i(a; M*) isomorphic to H_{n-i}(a; M)*";

bool all_in(const SerrePredicate& P, const std::vector<FPModule>& mods, int lo, int hi) {
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(mods.size()); ++i)
    if (!P(mods[static_cast<std::size_t>(i)])) return false;
  return true;
}

bool all_zero(const std::vector<FPModule>& mods, int lo, int hi) {
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(mods.size()); ++i)
    if (!mods[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

bool same(std::initializer_list<bool> v) {
  for (bool b : v)
    if (b != *v.begin()) return false;
  return true;
}

std::string ext_string(const Extended& e) { return e.to_string(); }

// Everything one trial needs, computed on first use.
class Env {
 public:
  Env(Instance inst, std::uint64_t seed, std::optional<int> L, int t_max)
      : inst_(std::move(inst)), ctx_(inst_.ideal, inst_.module), aux_(derive_seed(seed, 1)), t_max_(t_max) {
    n_ = static_cast<int>(inst_.ideal.size());
    L_ = L ? *L : default_resolution_bound(inst_.ring);
    draw_test_modules();
  }

  const Instance& inst() const { return inst_; }
  InvariantContext& ctx() { return ctx_; }
  int n() const { return n_; }
  int L() const { return L_; }
  int t_max() const { return t_max_; }
  const std::vector<FPModule>& koszul() { return ctx_.koszul().homology; }
  const std::string& some_description() const { return some_text_; }

  // Tor/Ext against every module of the sampled family with Supp in V(a), up to `top`.
  std::vector<std::vector<FPModule>> tor_every(int top) { return ranges(every(), top, true); }
  std::vector<std::vector<FPModule>> ext_every(int top) { return ranges(every(), top, false); }
  // Tor/Ext against the module with Supp N = V(a).
  std::vector<FPModule> tor_some(int top) { return tor_range(some(), inst_.module, top); }
  std::vector<FPModule> ext_some(int top) { return ext_range(some(), inst_.module, top); }

 private:
  void draw_test_modules() {
    const RingHandle& R = inst_.ring;
    const IdealGens& a = inst_.ideal;
    const unsigned k = aux_() % 3 == 0 ? 2 : 1;
    std::vector<Poly> powers;
    std::vector<unsigned> exps;
    for (const Poly& g : a.gens()) {
      exps.push_back(1 + static_cast<unsigned>(aux_() % 2));
      powers.push_back(g.pow(exps.back()));
    }
    const IdealGens ak = ideal_power(a, k);
    const IdealGens J(R, powers);
    if (!same_radical(ak, a) || !same_radical(J, a))
      throw TheoremViolation("test module support certificate failed for " + a.to_string());
    some_module_ = direct_sum(FPModule::cyclic(ak), FPModule::cyclic(J));
    some_text_ = "R/" + ak.to_string() + " + R/" + J.to_string();
    const std::size_t v = aux_() % R->nvars();
    std::vector<Poly> bigger = a.gens();
    bigger.push_back(Poly::variable(R, v));
    every_modules_ = {FPModule::cyclic(a), FPModule::cyclic(IdealGens(R, bigger))};
  }

  const std::vector<FreeResolution>& every() {
    if (!every_) {
      every_.emplace();
      for (const FPModule& N : every_modules_) every_->push_back(free_resolution(N, L_));
    }
    return *every_;
  }
  const FreeResolution& some() {
    if (!some_) some_ = free_resolution(some_module_, L_);
    return *some_;
  }
  std::vector<std::vector<FPModule>> ranges(const std::vector<FreeResolution>& Fs, int top, bool is_tor) {
    std::vector<std::vector<FPModule>> out;
    for (const auto& F : Fs) out.push_back(is_tor ? tor_range(F, inst_.module, top) : ext_range(F, inst_.module, top));
    return out;
  }

  Instance inst_;
  InvariantContext ctx_;
  Rng aux_;
  int t_max_ = 8;
  int n_ = 0;
  int L_ = 0;
  FPModule some_module_;
  std::string some_text_;
  std::vector<FPModule> every_modules_;
  std::optional<std::vector<FreeResolution>> every_;
  std::optional<FreeResolution> some_;
};

using Body = std::function<void(Env&, const SerrePredicate&, int s, TrialRecord&)>;

struct SuiteDef {
  std::string statement;
  std::vector<std::string> default_predicates;
  bool predicate_fixed = false;  // vanishing statements: always the zero class
  Body body;
};

void check(TrialRecord& rec, const std::string& name, bool ok) { rec.assertions.emplace_back(name, ok); }
void cond(TrialRecord& rec, const std::string& name, bool v) { rec.conditions.emplace_back(name, v); }
void value(TrialRecord& rec, const std::string& name, std::string v) { rec.values.emplace_back(name, std::move(v)); }

// Koszul (i), Tor against every sampled N (ii), Tor against N with Supp N = V(a) (iii), degrees 0..s.
void tor_side(Env& e, const SerrePredicate& P, int s, TrialRecord& rec) {
  const bool i = all_in(P, e.koszul(), 0, s);
  bool ii = true;
  for (const auto& t : e.tor_every(s)) ii = ii && all_in(P, t, 0, s);
  const bool iii = all_in(P, e.tor_some(s), 0, s);
  cond(rec, "i_koszul", i);
  cond(rec, "ii_tor_every", ii);
  cond(rec, "iii_tor_some", iii);
  value(rec, "N", e.some_description());
  check(rec, "equivalent", same({i, ii, iii}));
}

// Koszul H_{n-i} (i), Ext against every sampled N (ii), Ext against N with Supp N = V(a) (iii).
void ext_side(Env& e, const SerrePredicate& P, int s, TrialRecord& rec) {
  const int n = e.n();
  const bool i = all_in(P, e.koszul(), n - s, n);
  bool ii = true;
  for (const auto& t : e.ext_every(s)) ii = ii && all_in(P, t, 0, s);
  const bool iii = all_in(P, e.ext_some(s), 0, s);
  cond(rec, "i_koszul_top", i);
  cond(rec, "ii_ext_every", ii);
  cond(rec, "iii_ext_some", iii);
  value(rec, "N", e.some_description());
  check(rec, "equivalent", same({i, ii, iii}));
}

void cor34(Env& e, const SerrePredicate& P, int, TrialRecord& rec) {
  const int n = e.n(), L = e.L();
  const bool i = all_in(P, e.koszul(), 0, n);
  bool ii = true, iv = true;
  for (const auto& t : e.tor_every(L)) ii = ii && all_in(P, t, 0, L);
  for (const auto& t : e.ext_every(L)) iv = iv && all_in(P, t, 0, L);
  const bool iii = all_in(P, e.tor_some(n), 0, n);
  const bool v = all_in(P, e.ext_some(n), 0, n);
  cond(rec, "i_koszul_all", i);
  cond(rec, "ii_tor_every_upto_L", ii);
  cond(rec, "iii_tor_some", iii);
  cond(rec, "iv_ext_every_upto_L", iv);
  cond(rec, "v_ext_some", v);
  value(rec, "L", std::to_string(L));
  check(rec, "equivalent", same({i, ii, iii, iv, v}));
}

void amplitude_values(const AmplitudeReport& a, TrialRecord& rec) {
  value(rec, "p_depth", ext_string(a.p_depth));
  value(rec, "p_width", ext_string(a.p_width));
  value(rec, "koszul_sup", ext_string(a.koszul_sup));
  value(rec, "n", std::to_string(a.n));
}

void cor35(Env& e, const SerrePredicate& P, int, TrialRecord& rec) {
  // p_depth and p_width inside the check compare the Ext/Tor scans with the Koszul formulas.
  const AmplitudeReport a = amplitude_identity_check(P, e.ctx());
  amplitude_values(a, rec);
  cond(rec, "p_depth_finite", a.p_depth.is_finite());
  cond(rec, "p_width_finite", a.p_width.is_finite());
  check(rec, "finiteness", a.finiteness_agrees);
  check(rec, "identity", a.identity_holds);
}

void cor36(Env& e, const SerrePredicate& P, int, TrialRecord& rec) {
  const AmplitudeReport a = amplitude_identity_check(P, e.ctx());
  amplitude_values(a, rec);
  cond(rec, "inequality_checked", a.inequality_checked);
  check(rec, "inequality", a.inequality_holds);
  if (!a.inequality_checked) rec.note = "predicate lacks a closure condition or P-depth is infinite";
}

void cor52(Env& e, const SerrePredicate&, int s, TrialRecord& rec) {
  const Instance& in = e.inst();
  const int L = e.L();
  const auto direct = tor_range(free_resolution(in.module2, std::max(L, s)), in.module, s);
  const auto via_ann = tor_range(free_resolution(FPModule::cyclic(annihilator(in.module2)), std::max(L, s)), in.module, s);
  const bool i = all_zero(direct, 0, s), ii = all_zero(via_ann, 0, s);
  cond(rec, "i_tor_N", i);
  cond(rec, "ii_tor_R_mod_ann", ii);
  check(rec, "equivalent", i == ii);
}

void cor58(Env& e, const SerrePredicate&, int s, TrialRecord& rec) {
  const Instance& in = e.inst();
  const int L = e.L();
  const auto direct = ext_range(free_resolution(in.module2, std::max(L, s)), in.module, s);
  const auto via_ann = ext_range(free_resolution(FPModule::cyclic(annihilator(in.module2)), std::max(L, s)), in.module, s);
  const bool i = all_zero(direct, 0, s), ii = all_zero(via_ann, 0, s);
  cond(rec, "i_ext_N", i);
  cond(rec, "ii_ext_R_mod_ann", ii);
  check(rec, "equivalent", i == ii);
}

void cor53(Env& e, const SerrePredicate&, int, TrialRecord& rec) {
  const Instance& in = e.inst();
  const FPModule T = tensor_module(in.module, in.module2);
  const IdealGens ann = annihilator(in.module2);
  const FPModule Q = quotient_by_ideal(in.module, ann).module;
  const bool i = T.is_zero(), ii = Q.is_zero();
  cond(rec, "i_tensor_zero", i);
  cond(rec, "ii_M_eq_annN_M", ii);
  check(rec, "equivalent", i == ii);
  check(rec, "support_formula", same_radical(annihilator(T), annihilator(Q)));
}

void cor59(Env& e, const SerrePredicate&, int, TrialRecord& rec) {
  const Instance& in = e.inst();
  const bool i = hom_module(in.module2, in.module).module.is_zero();
  const bool ii = colon_submodule(in.module, annihilator(in.module2)).module.is_zero();
  cond(rec, "i_hom_zero", i);
  cond(rec, "ii_colon_zero", ii);
  check(rec, "equivalent", i == ii);
}

void cor510(Env& e, const SerrePredicate&, int, TrialRecord& rec) {
  const DepthCertificate d = depth_triple(e.ctx());
  value(rec, "depth", ext_string(d.value));
  value(rec, "by_regular_sequence", ext_string(d.by_regular_sequence));
  value(rec, "by_koszul", ext_string(d.by_koszul));
  value(rec, "by_ext", ext_string(d.by_ext));
  check(rec, "three_methods", d.by_regular_sequence == d.by_koszul && d.by_koszul == d.by_ext);
  if (!d.value.is_finite()) {
    rec.note = "depth infinite; no edge degree";
    return;
  }
  const int depth = d.value.value();
  try {
    const SocleResult soc = local_cohomology_socle(e.inst().ideal, e.inst().module, depth, e.t_max());
    const FPModule& E = e.ctx().ext()[static_cast<std::size_t>(depth)];
    const IsoProxy proxy = iso_proxy(E, soc.socle);
    value(rec, "stage", std::to_string(soc.stage));
    cond(rec, "stabilized", true);
    check(rec, "edge_isomorphism", proxy.ok());
  } catch (const UnstabilizedError& err) {
    cond(rec, "stabilized", false);
    rec.status = TrialStatus::kSkipped;
    rec.note = std::string("unstabilized: ") + err.what();
  }
}

void cor511(Env& e, const SerrePredicate&, int, TrialRecord& rec) {
  const int n = e.n(), L = e.L();
  const InvariantReport inv = invariant_report(zero_class(), e.ctx());
  const int hd = inv.hd_upper, cd = inv.cd_upper;
  const auto& K = e.koszul();
  const bool i = all_zero(K, 0, n);
  const bool ii = all_zero(K, 0, hd);
  const bool iii = all_zero(K, n - cd, n);
  bool iv = true, vi = true;
  for (const auto& t : e.tor_every(L)) iv = iv && all_zero(t, 0, L);
  for (const auto& t : e.ext_every(L)) vi = vi && all_zero(t, 0, L);
  const bool v = all_zero(e.tor_some(hd), 0, hd);
  const bool vii = all_zero(e.ext_some(cd), 0, cd);
  cond(rec, "i", i);
  cond(rec, "ii", ii);
  cond(rec, "iii", iii);
  cond(rec, "iv", iv);
  cond(rec, "v", v);
  cond(rec, "vi", vi);
  cond(rec, "vii", vii);
  value(rec, "hd_upper", std::to_string(hd));
  value(rec, "cd_upper", std::to_string(cd));
  check(rec, "equivalent", same({i, ii, iii, iv, v, vi, vii}));
}

void cor512(Env& e, const SerrePredicate&, int, TrialRecord& rec) {
  const DepthCertificate d = depth_triple(e.ctx());
  const WidthCertificate w = width_pair(e.ctx());
  value(rec, "depth", ext_string(d.value));
  value(rec, "width", ext_string(w.value));
  value(rec, "ara_upper", std::to_string(e.n()));
  cond(rec, "depth_finite", d.value.is_finite());
  cond(rec, "width_finite", w.value.is_finite());
  check(rec, "finiteness", d.value.is_finite() == w.value.is_finite());
  if (d.value.is_finite() && w.value.is_finite()) check(rec, "inequality", d.value.value() + w.value.value() <= e.n());
}

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> defs = {
      {"thm31", {"Koszul H_i, Tor_i(N, M) and Tor_i against some N with Supp N = V(a) are in S together for i <= s",
                 {"zero", "finlen"}, false, tor_side}},
      {"thm33", {"Koszul H_{n-i}, Ext^i(N, M) and Ext^i against some N with Supp N = V(a) are in S together for i <= s",
                 {"zero", "finlen"}, false, ext_side}},
      {"cor34", {"all Koszul homology in S iff every Tor_i / Ext^i against N with Supp N in V(a) is in S",
                 {"zero", "finlen"}, false, cor34}},
      {"cor35", {"sup{i : H_i not in S} + P-depth = n, and P-depth finite iff P-width finite", {"zero", "finlen"}, false, cor35}},
      {"cor36", {"P-depth + P-width <= ara(a) <= n when P satisfies both closure conditions", {"zero", "finlen"}, false, cor36}},
      {"prop41", {"finitely generated Koszul homology, Tor and Tor against some N agree for i <= s",
                  {"noeth", "finlen"}, false, tor_side}},
      {"prop43", {"artinian Koszul H_{n-i}, Ext and Ext against some N agree for i <= s", {"finlen"}, false, ext_side}},
      {"prop51", {"vanishing of H_i, Tor_i(N, M) and Tor_i against some N agree for i <= s", {"zero"}, true, tor_side}},
      {"prop57", {"vanishing of H_{n-i}, Ext^i(N, M) and Ext^i against some N agree for i <= s", {"zero"}, true, ext_side}},
      {"cor52", {"Tor_i(N, M) = 0 for i <= s iff Tor_i(R/ann N, M) = 0 for i <= s", {"zero"}, true, cor52}},
      {"cor53", {"M (x) N = 0 iff M = ann(N) M; Supp(M (x) N) = Supp(M / ann(N) M)", {"zero"}, true, cor53}},
      {"cor58", {"Ext^i(N, M) = 0 for i <= s iff Ext^i(R/ann N, M) = 0 for i <= s", {"zero"}, true, cor58}},
      {"cor59", {"Hom(N, M) = 0 iff (0 :_M ann N) = 0", {"zero"}, true, cor59}},
      {"cor510", {"depth by regular sequence, Koszul and Ext agree; Ext^depth(R/a, M) matches the local cohomology socle",
                  {"zero"}, true, cor510}},
      {"cor511", {"the computable vanishing conditions for Koszul, Tor and Ext agree", {"zero"}, true, cor511}},
      {"cor512", {"depth finite iff width finite, and depth + width <= ara(a) <= n", {"zero"}, true, cor512}},
  };
  return defs;
}

std::string rerun_command(const std::string& id, const SuiteOptions& o, std::uint64_t index, const std::string& pred) {
  std::string cmd = "koszulkit suite " + id + " --seed " + std::to_string(o.seed) + " --first " + std::to_string(index) +
                    " --trials 1 --pred " + pred;
  if (o.s) cmd += " --s " + std::to_string(*o.s);
  if (o.L) cmd += " --L " + std::to_string(*o.L);
  if (o.profile != "default") cmd += " --profile " + o.profile;
  return cmd;
}

SuiteReport run_polynomial_suite(const std::string& id, const SuiteDef& def, const SuiteOptions& o) {
  SuiteReport report;
  report.suite = id;
  report.statement = def.statement;
  report.seed = o.seed;
  report.first = o.first;
  report.trials = o.trials;
  report.predicates = def.predicate_fixed || o.predicates.empty() ? def.default_predicates : o.predicates;
  if (o.trials < 0) throw ParseError("--trials must be non-negative", 0);

  const std::size_t count = static_cast<std::size_t>(o.trials);
  std::vector<std::vector<TrialRecord>> per_trial(count);
  parallel_for(count, o.threads, [&](std::size_t t) {
    const std::uint64_t index = o.first + t;
    const std::uint64_t seed = derive_seed(o.seed, index);
    InstanceSpec spec = random_instance(seed, o.profile);
    Instance inst = materialize(spec);
    const int n = static_cast<int>(inst.ideal.size());
    const int s = o.s ? std::clamp(*o.s, 0, n) : std::min(spec.s, n);
    spec.s = s;
    Env env(std::move(inst), seed, o.L, o.t_max);
    for (const std::string& name : report.predicates) {
      TrialRecord rec;
      rec.index = index;
      rec.seed = seed;
      rec.instance = spec;
      rec.instance.predicate = name;
      rec.predicate = name;
      const std::uint64_t before = certified_koszul_modules();
      try {
        const SerrePredicate P = predicate_by_name(env.inst().ring, name);
        def.body(env, P, s, rec);
      } catch (const TheoremViolation& err) {
        rec.assertions.emplace_back("theorem", false);
        rec.note = err.what();
      } catch (const ResolutionBoundExceeded& err) {
        rec.status = TrialStatus::kSkipped;
        rec.note = err.what();
      }
      rec.koszul_certified = certified_koszul_modules() - before;
      for (const auto& [k, ok] : rec.assertions)
        if (!ok) rec.status = TrialStatus::kViolation;
      per_trial[t].push_back(std::move(rec));
    }
  });

  for (auto& block : per_trial) {
    for (auto& rec : block) {
      if (rec.status == TrialStatus::kViolation) {
        std::string failed;
        for (const auto& [k, ok] : rec.assertions)
          if (!ok && failed.empty()) failed = k;
        report.counterexamples.push_back({rec.index, failed, rerun_command(id, o, rec.index, rec.predicate)});
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

SuiteReport run_finite_exhaustive(const SuiteOptions& o) {
  SuiteReport report;
  report.suite = "finitering-exhaustive";
  report.statement = kFiniteStatement;
  report.seed = o.seed;
  report.trials = o.trials;
  const auto& rings = o.rings.empty() ? default_finite_rings() : o.rings;
  std::uint64_t index = 0;
  for (const std::string& text : rings) {
    const auto R = finite::parse_finite_ring(text);
    finite::VerifyOptions vo;
    vo.module_bound = o.bound;
    vo.threads = o.threads;
    const finite::FiniteVerifyReport v = finite::exhaustive_verify(R, vo);
    const std::string rerun = "koszulkit suite finitering-exhaustive --ring " + text + " --bound " + std::to_string(o.bound);
    for (const auto& row : v.rows) {
      TrialRecord rec;
      rec.index = index++;
      rec.instance.backend = "finite";
      rec.instance.ring = text;
      rec.instance.module = "all modules of size <= " + std::to_string(o.bound);
      rec.instance.predicate = row.predicate;
      rec.predicate = row.predicate;
      value(rec, "check", row.check);
      value(rec, "cases", std::to_string(row.cases));
      value(rec, "agreements", std::to_string(row.agreements));
      check(rec, row.check, row.cases == row.agreements);
      if (row.cases != row.agreements) rec.status = TrialStatus::kViolation;
      report.records.push_back(std::move(rec));
    }
    TrialRecord extra;
    extra.index = index++;
    extra.instance.backend = "finite";
    extra.instance.ring = text;
    extra.predicate = "-";
    value(extra, "ideals", std::to_string(v.ideals));
    value(extra, "sequences", std::to_string(v.sequences));
    value(extra, "modules", std::to_string(v.modules));
    value(extra, "self_duality_checks", std::to_string(v.self_duality_checks));
    value(extra, "self_duality_unsearched", std::to_string(v.self_duality_unsearched));
    value(extra, "degeneracy_checks", std::to_string(v.degeneracy_checks));
    check(extra, "self_duality", v.self_duality_failures == 0);
    check(extra, "local_homology_degeneracy", v.degeneracy_failures == 0);
    if (v.self_duality_failures || v.degeneracy_failures) extra.status = TrialStatus::kViolation;
    report.records.push_back(std::move(extra));
    for (const auto& ce : v.counterexamples) {
      report.counterexamples.push_back({index, ce.check + " under " + ce.predicate + " at s = " + std::to_string(ce.s) +
                                                   " for " + ce.sequence + " on " + ce.module + ": " + ce.conditions,
                                        rerun});
    }
  }
  return report;
}

SuiteReport run_duality_sweep(const SuiteOptions& o) {
  SuiteReport report;
  report.suite = "duality-sweep";
  report.statement = kDualityStatement;
  report.seed = o.seed;
  report.trials = o.trials;
  const std::vector<std::string> rings = o.rings.empty() ? std::vector<std::string>{"Z/8"} : o.rings;
  std::uint64_t index = 0;
  for (const std::string& text : rings) {
    const auto R = finite::parse_finite_ring(text);
    const finite::DualityReport d = finite::duality_sweep(R, o.bound, o.threads);
    std::uint64_t pattern_failures = 0, iso_failures = 0;
    for (const auto& row : d.rows) {
      const bool pattern = row.dual_side == row.direct_side;
      const bool iso = row.isomorphic.value_or(true);
      pattern_failures += !pattern;
      iso_failures += !iso;
      if (!pattern || !iso) {
        report.counterexamples.push_back(
            {index, "H_" + std::to_string(row.i) + " of " + row.sequence + " on " + row.module,
             "koszulkit suite duality-sweep --ring " + text + " --bound " + std::to_string(o.bound)});
      }
    }
    TrialRecord rec;
    rec.index = index++;
    rec.instance.backend = "finite";
    rec.instance.ring = text;
    rec.instance.module = "all modules of size <= " + std::to_string(o.bound);
    rec.predicate = "-";
    value(rec, "rows", std::to_string(d.rows.size()));
    value(rec, "unsearched", std::to_string(d.unsearched));
    check(rec, "cardinality_pattern", pattern_failures == 0);
    check(rec, "isomorphism", iso_failures == 0);
    if (pattern_failures || iso_failures) rec.status = TrialStatus::kViolation;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"thm31",  "thm33",  "cor34",  "cor35",  "cor36", "prop51",
                                               "prop57", "cor52",  "cor53",  "cor58",  "cor59", "cor510",
                                               "cor511", "cor512", "prop41", "prop43", "finitering-exhaustive",
                                               "duality-sweep"};
  return ids;
}

const std::vector<std::string>& default_finite_rings() {
  static const std::vector<std::string> rings = {"Z/4", "Z/8", "Z/12", "F2[x]/x^3", "Z/4*F2"};
  return rings;
}

std::string suite_statement(const std::string& id) {
  if (id == "finitering-exhaustive") return kFiniteStatement;
  if (id == "duality-sweep") return kDualityStatement;
  const auto it = registry().find(id);
  if (it == registry().end()) throw ParseError("unknown suite '" + id + "'", 0);
  return it->second.statement;
}

SuiteReport run_suite(const std::string& id, const SuiteOptions& options) {
  if (id == "finitering-exhaustive") return run_finite_exhaustive(options);
  if (id == "duality-sweep") return run_duality_sweep(options);
  const auto it = registry().find(id);
  if (it == registry().end()) throw ParseError("unknown suite '" + id + "'", 0);
  return run_polynomial_suite(id, it->second, options);
}

std::size_t threads_from_env() {
  if (const char* env = std::getenv("KOSZULKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    return v >= 1 ? static_cast<std::size_t>(v) : 1;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace koszulkit::harness
