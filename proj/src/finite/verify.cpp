#include "koszulkit/finite/verify.hpp"

#include <algorithm>

#include "koszulkit/error.hpp"
#include "koszulkit/parallel.hpp"

namespace koszulkit::finite {

namespace {

std::string sequence_string(const FiniteRing& R, const std::vector<Elem>& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += R.element_to_string(a[i]);
  }
  return out + ")";
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] && !b[j]) return false;
  return true;
}

// Per ideal: stable power, resolutions of R/b and of the test modules N.
struct IdealData {
  FiniteIdeal ideal;
  std::vector<bool> locus;
  bool complete = false;  // b = 0
  FiniteIdeal stable;
  std::optional<FiniteResolution> stable_res;
  std::vector<FiniteResolution> tests;  // R/a first
  std::vector<bool> exact_support;      // Supp N = V(a)
};

using Supports = std::vector<std::vector<bool>>;  // indexed by homological degree

struct CaseData {
  Supports koszul, koszul_dual, lh, lc;
  std::vector<Supports> tors, exts;  // per test module
};

struct Partial {
  std::vector<std::uint64_t> cases, agreements;  // [check * classes + class]
  std::vector<Counterexample> counterexamples;
  std::uint64_t sd_checks = 0, sd_failures = 0, sd_unsearched = 0;
  std::uint64_t dg_checks = 0, dg_failures = 0;
};

constexpr std::size_t kChecks = 5;
constexpr std::uint64_t kSearchLimit = 256;

std::string flags(const std::vector<bool>& c) {
  static const char* names[] = {"i", "ii", "iii", "iv"};
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ' ';
    out += std::string(names[k]) + "=" + (c[k] ? "1" : "0");
  }
  return out;
}

bool all_same(const std::vector<bool>& c) {
  return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c.front(); });
}

}  // namespace

bool SupportClass::admits(const std::vector<bool>& support) const { return subset(support, allowed); }

std::vector<SupportClass> support_classes(const FiniteRingHandle& R) {
  const std::size_t m = R->primitive_idempotents().size();
  if (m > 16) throw CapabilityError("too many maximal ideals for support classes");
  std::vector<SupportClass> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    SupportClass c;
    c.allowed.assign(m, false);
    for (std::size_t j = 0; j < m; ++j) c.allowed[j] = (mask >> j) & 1U;
    if (mask == 0) {
      c.name = "zero";
    } else if (mask + 1 == (std::uint64_t{1} << m)) {
      c.name = "full";
    } else {
      c.name = "supp:";
      bool first = true;
      for (std::size_t j = 0; j < m; ++j) {
        if (!c.allowed[j]) continue;
        if (!first) c.name += ',';
        c.name += std::to_string(j);
        first = false;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(FiniteCheck c) {
  switch (c) {
    case FiniteCheck::kThm31: return "koszul-tor-localhom";
    case FiniteCheck::kThm33: return "koszul-ext-localcohom";
    case FiniteCheck::kDef27: return "torsion-condition";
    case FiniteCheck::kDef25: return "completion-condition";
    case FiniteCheck::kCor32: return "quotient-completion";
  }
  return "?";
}

std::vector<std::vector<Elem>> ideal_sequences(const FiniteIdeal& a) {
  const FiniteRing& R = *a.ring();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> gens = a.minimal_generators();
  out.push_back(gens);
  if (gens.empty()) {
    out.push_back({R.zero()});
  } else if (gens.size() == 1) {
    Elem extra = gens[0];
    for (Elem e : a.elements()) {
      if (e != R.zero() && e != gens[0]) {
        extra = e;
        break;
      }
    }
    out.push_back({gens[0], extra});
  }
  return out;
}

FiniteVerifyReport exhaustive_verify(const FiniteRingHandle& R, const VerifyOptions& options) {
  const std::vector<SupportClass> classes = support_classes(R);
  const std::size_t nc = classes.size();
  const std::vector<FiniteModule> modules = enumerate_modules(R, options.module_bound);
  const std::vector<FiniteModule> small = enumerate_modules(R, options.test_module_bound);
  const std::vector<FiniteIdeal> ideals = enumerate_ideals(R);

  FiniteVerifyReport report;
  report.ring = R->name();
  report.ideals = ideals.size();
  report.modules = modules.size();

  struct Job {
    std::size_t ideal;
    std::vector<Elem> seq;
    bool first;  // ideal-level checks run once per ideal
  };
  std::vector<Job> jobs;
  int max_len = 0;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    auto seqs = ideal_sequences(ideals[k]);
    for (std::size_t q = 0; q < seqs.size(); ++q) {
      max_len = std::max(max_len, static_cast<int>(seqs[q].size()));
      jobs.push_back({k, seqs[q], q == 0});
    }
  }
  report.sequences = jobs.size();

  std::vector<IdealData> data;
  for (const FiniteIdeal& a : ideals) {
    const StableIdealPower sp = stable_power(a);
    data.push_back(IdealData{a, a.zero_locus(), sp.stable.is_zero(), sp.stable, std::nullopt, {}, {}});
  }
  parallel_for(data.size(), options.threads, [&](std::size_t k) {
    IdealData& d = data[k];
    d.stable_res = resolve(FiniteModule::cyclic(d.stable), max_len);
    std::vector<FiniteModule> family{FiniteModule::cyclic(d.ideal)};
    for (const FiniteModule& N : small)
      if (subset(N.support(), d.locus)) family.push_back(N);
    for (const FiniteModule& N : family) {
      d.tests.push_back(resolve(N, max_len));
      d.exact_support.push_back(N.support() == d.locus);
    }
  });

  const std::size_t tasks = jobs.size() * modules.size();
  std::vector<Partial> partials(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t t) {
    const Job& job = jobs[t / modules.size()];
    const std::size_t mi = t % modules.size();
    const FiniteModule& M = modules[mi];
    const IdealData& d = data[job.ideal];
    const int n = static_cast<int>(job.seq.size());
    Partial& out = partials[t];
    out.cases.assign(kChecks * nc, 0);
    out.agreements.assign(kChecks * nc, 0);

    CaseData c;
    c.tors.resize(d.tests.size());
    c.exts.resize(d.tests.size());
    for (int i = 0; i <= n; ++i) {
      const FiniteModule K = koszul_homology(job.seq, M, i);
      const FiniteModule Kc = koszul_cohomology(job.seq, M, n - i);
      c.koszul.push_back(K.support());
      c.koszul_dual.push_back(Kc.support());
      ++out.sd_checks;
      const std::optional<bool> iso = isomorphic(K, Kc, kSearchLimit);
      if (!iso) ++out.sd_unsearched;
      else if (!*iso) ++out.sd_failures;
      const FiniteModule LH = tor(*d.stable_res, M, i);
      const FiniteModule LC = ext(*d.stable_res, M, i);
      c.lh.push_back(LH.support());
      c.lc.push_back(LC.support());
      if (i > 0) {
        ++out.dg_checks;
        if (!LH.is_zero() || !LC.is_zero()) ++out.dg_failures;
      }
      for (std::size_t q = 0; q < d.tests.size(); ++q) {
        c.tors[q].push_back(tor(d.tests[q], M, i).support());
        c.exts[q].push_back(ext(d.tests[q], M, i).support());
      }
    }

    const std::string seq_text = sequence_string(*R, job.seq);
    auto record = [&](FiniteCheck check, std::size_t p, int s, const std::vector<bool>& conds) {
      const std::size_t slot = static_cast<std::size_t>(check) * nc + p;
      ++out.cases[slot];
      if (all_same(conds)) {
        ++out.agreements[slot];
        return;
      }
      out.counterexamples.push_back(
          {to_string(check), R->name(), seq_text, "#" + std::to_string(mi) + " " + M.to_string(), classes[p].name, s, flags(conds)});
    };
    auto upto = [](const SupportClass& P, const Supports& sup, int s, bool reversed, int n_) {
      for (int i = 0; i <= s; ++i)
        if (!P.admits(sup[static_cast<std::size_t>(reversed ? n_ - i : i)])) return false;
      return true;
    };

    for (std::size_t p = 0; p < nc; ++p) {
      const SupportClass& P = classes[p];
      for (int s = 0; s <= n; ++s) {
        for (int side = 0; side < 2; ++side) {
          const auto& family = side == 0 ? c.tors : c.exts;
          bool every = true, some = false;
          for (std::size_t q = 0; q < family.size(); ++q) {
            const bool ok = upto(P, family[q], s, false, n);
            every = every && ok;
            if (d.exact_support[q]) some = some || ok;
          }
          const bool kos = side == 0 ? upto(P, c.koszul, s, false, n) : upto(P, c.koszul, s, true, n);
          const bool local = upto(P, side == 0 ? c.lh : c.lc, s, false, n);
          record(side == 0 ? FiniteCheck::kThm31 : FiniteCheck::kThm33, p, s, {kos, every, some, local});
        }
      }
    }

    if (!job.first) return;
    const std::vector<bool> ann = annihilated_submodule(d.ideal, M).support();
    const std::vector<bool> gamma = torsion_submodule(d.ideal, M).support();
    const std::vector<bool> quot = quotient_by_ideal(d.ideal, M).support();
    const std::vector<bool> completion = quotient_by_ideal(d.stable, M).support();
    for (std::size_t p = 0; p < nc; ++p) {
      const SupportClass& P = classes[p];
      if (P.admits(ann)) record(FiniteCheck::kDef27, p, 0, {true, P.admits(gamma)});
      if (d.complete && P.admits(quot)) record(FiniteCheck::kDef25, p, 0, {true, P.admits(c.lh[0])});
      record(FiniteCheck::kCor32, p, 0, {P.admits(quot), P.admits(c.lh[0]), P.admits(completion)});
    }
  });

  std::vector<std::uint64_t> cases(kChecks * nc, 0), agreements(kChecks * nc, 0);
  for (Partial& part : partials) {
    for (std::size_t k = 0; k < cases.size(); ++k) {
      cases[k] += part.cases[k];
      agreements[k] += part.agreements[k];
    }
    for (auto& ce : part.counterexamples) report.counterexamples.push_back(std::move(ce));
    report.self_duality_checks += part.sd_checks;
    report.self_duality_failures += part.sd_failures;
    report.self_duality_unsearched += part.sd_unsearched;
    report.degeneracy_checks += part.dg_checks;
    report.degeneracy_failures += part.dg_failures;
  }
  for (std::size_t k = 0; k < kChecks; ++k)
    for (std::size_t p = 0; p < nc; ++p)
      report.rows.push_back({to_string(static_cast<FiniteCheck>(k)), classes[p].name, cases[k * nc + p], agreements[k * nc + p]});
  return report;
}

DualityReport duality_sweep(const FiniteRingHandle& R, std::uint64_t module_bound, std::size_t threads) {
  const std::vector<FiniteModule> modules = enumerate_modules(R, module_bound);
  std::vector<std::vector<Elem>> seqs;
  for (const FiniteIdeal& a : enumerate_ideals(R))
    for (auto& s : ideal_sequences(a)) seqs.push_back(std::move(s));

  const std::size_t tasks = seqs.size() * modules.size();
  std::vector<std::vector<DualityRow>> rows(tasks);
  parallel_for(tasks, threads, [&](std::size_t t) {
    const auto& a = seqs[t / modules.size()];
    const std::size_t mi = t % modules.size();
    const FiniteModule& M = modules[mi];
    const FiniteModule D = matlis_dual(M);
    const int n = static_cast<int>(a.size());
    for (int i = 0; i <= n; ++i) {
      const FiniteModule lhs = koszul_homology(a, D, i);
      const FiniteModule rhs = koszul_homology(a, M, n - i);
      DualityRow row{sequence_string(*R, a), "#" + std::to_string(mi) + " " + M.to_string(), i, lhs.size(), rhs.size(), std::nullopt};
      row.isomorphic = isomorphic(lhs, matlis_dual(rhs), kSearchLimit);
      rows[t].push_back(std::move(row));
    }
  });

  DualityReport report;
  report.ring = R->name();
  for (auto& block : rows) {
    for (auto& row : block) {
      if (row.dual_side != row.direct_side || row.isomorphic == std::optional<bool>(false)) ++report.failures;
      if (!row.isomorphic) ++report.unsearched;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace koszulkit::finite
