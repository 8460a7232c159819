#include "koszulkit/harness/compute.hpp"

#include <algorithm>

#include "koszulkit/finite/homology.hpp"
#include "koszulkit/parse.hpp"

namespace koszulkit::harness {

namespace {

using J = nlohmann::ordered_json;

J describe(const FPModule& M, const InstanceSpec& spec) {
  const FPModule S = simplify(M);
  J out{{"literal", S.to_literal()}, {"zero", S.is_zero()}, {"rank", S.rank()}};
  if (S.is_zero()) return out;
  if (S.is_graded()) {
    const int lo = min_generator_degree(S);
    const int span = spec.hilbert_degree.value_or(6);
    out["hilbert_from"] = lo;
    out["hilbert"] = hilbert_values(S, lo, lo + span);
  }
  if (finite_length(S)) out["length"] = length(S);
  return out;
}

J describe(const finite::FiniteModule& M) {
  return J{{"module", M.to_string()}, {"size", M.size()}, {"invariant_factors", M.invariant_factors()}, {"zero", M.is_zero()}};
}

std::optional<finite::FiniteRingHandle> try_finite(const std::string& text) {
  try {
    return finite::parse_finite_ring(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

J compute_finite(const std::string& what, const InstanceSpec& spec, const finite::FiniteRingHandle& R) {
  const finite::FiniteIdeal a = finite::parse_finite_ideal(R, spec.ideal.empty() ? "(0)" : spec.ideal);
  const finite::FiniteModule M = finite::parse_finite_module(R, spec.module.empty() ? "R" : spec.module);
  const std::vector<finite::Elem>& seq = a.gens();
  const int n = static_cast<int>(seq.size());
  J out{{"what", what}, {"backend", "finite"}, {"ring", R->name()}, {"ideal", a.to_string()}, {"i", spec.i}};
  if (what == "koszul") {
    out["result"] = describe(finite::koszul_homology(seq, M, spec.i));
    const auto dual = finite::koszul_cohomology(seq, M, n - spec.i);
    const auto iso = finite::isomorphic(finite::koszul_homology(seq, M, spec.i), dual, 256);
    out["self_duality"] = iso ? J(*iso) : J("unsearched");
  } else if (what == "tor" || what == "ext") {
    const finite::FiniteModule N =
        spec.module2.empty() ? finite::FiniteModule::cyclic(a) : finite::parse_finite_module(R, spec.module2);
    const finite::FiniteResolution F = finite::resolve(N, std::max(spec.i, 0));
    out["result"] = describe(what == "tor" ? finite::tor(F, M, spec.i) : finite::ext(F, M, spec.i));
  } else if (what == "localhom") {
    const auto sp = finite::stable_power(a);
    out["stable_power"] = J{{"exponent", sp.exponent}, {"ideal", sp.stable.to_string()}};
    out["result"] = describe(finite::local_homology(a, M, spec.i));
  } else if (what == "depth" || what == "width") {
    // First nonvanishing Ext^i(R/a, M) (resp. Tor_i) against the Koszul formula.
    const bool depth = what == "depth";
    const finite::FiniteResolution F = finite::resolve(finite::FiniteModule::cyclic(a), n);
    J by_scan = "inf", by_koszul = "inf";
    for (int i = 0; i <= n; ++i) {
      const auto D = depth ? finite::ext(F, M, i) : finite::tor(F, M, i);
      if (!D.is_zero()) {
        by_scan = i;
        break;
      }
    }
    for (int i = 0; i <= n; ++i) {
      if (!finite::koszul_homology(seq, M, depth ? n - i : i).is_zero()) {
        by_koszul = i;
        break;
      }
    }
    if (by_scan != by_koszul) throw TheoremViolation(what + ": scan and Koszul formula disagree");
    out["result"] = by_scan;
    out["methods"] = J{{depth ? "ext_scan" : "tor_scan", by_scan}, {"koszul", by_koszul}};
  } else {
    throw CapabilityError(what + " is not available on the finite backend");
  }
  return out;
}

J compute_polynomial(const std::string& what, const InstanceSpec& spec) {
  if (what == "localhom")
    throw CapabilityError(
        "localhom is unsupported on the polynomial backend: local homology is only materialized on finite rings, where "
        "the completion is R/b for the stable power b; use a finite ring literal such as Z/8");
  const Instance in = materialize(spec);
  J out{{"what", what}, {"backend", "polynomial"}, {"ring", in.ring->header()}, {"ideal", in.ideal.to_string()}};
  const int n = static_cast<int>(in.ideal.size());
  InvariantContext ctx(in.ideal, in.module);
  if (what == "koszul") {
    out["i"] = spec.i;
    const KoszulProfile& K = ctx.koszul();
    out["result"] = spec.i >= 0 && spec.i <= n ? describe(K.homology[static_cast<std::size_t>(spec.i)], spec)
                                               : describe(FPModule::zero(in.ring), spec);
    out["certificates"] = J{{"self_dual", K.self_dual}, {"permutation_invariant", K.permutation_invariant}};
  } else if (what == "tor" || what == "ext") {
    out["i"] = spec.i;
    out["module2"] = in.module2.to_literal();
    out["result"] = describe(what == "tor" ? tor(spec.i, in.module2, in.module, spec.L)
                                           : ext(spec.i, in.module2, in.module, spec.L),
                             spec);
  } else if (what == "depth") {
    const DepthCertificate d = depth_triple(ctx);
    J seq = J::array();
    for (const Poly& f : d.regular_sequence) seq.push_back(f.to_string());
    out["result"] = d.value.to_string();
    out["methods"] = J{{"regular_sequence", d.by_regular_sequence.to_string()},
                       {"koszul", d.by_koszul.to_string()},
                       {"ext_scan", d.by_ext.to_string()}};
    out["regular_sequence"] = seq;
  } else if (what == "width") {
    const WidthCertificate w = width_pair(ctx);
    out["result"] = w.value.to_string();
    out["methods"] = J{{"koszul", w.by_koszul.to_string()}, {"tor_scan", w.by_tor.to_string()}};
  } else if (what == "pdepth" || what == "pwidth") {
    const SerrePredicate P = predicate_by_name(in.ring, spec.predicate);
    out["pred"] = P.name;
    out["result"] = (what == "pdepth" ? p_depth(P, ctx) : p_width(P, ctx)).to_string();
  } else if (what == "socle") {
    out["i"] = spec.i;
    try {
      const SocleResult soc = local_cohomology_socle(in.ideal, in.module, spec.i, spec.t_max);
      const FPModule E = ext(spec.i, FPModule::cyclic(in.ideal), in.module, spec.L);
      const IsoProxy proxy = iso_proxy(E, soc.socle);
      out["result"] = describe(soc.socle, spec);
      out["stage"] = soc.stage;
      out["ext_comparison"] = J{{"ext", describe(E, spec)}, {"same_annihilator", proxy.same_annihilator},
                                {"same_hilbert", proxy.same_hilbert}};
    } catch (const UnstabilizedError& e) {
      out["result"] = "unstabilized";
      out["t_max"] = e.t_max();
      J partial = J::array();
      for (const auto& s : e.socles()) partial.push_back(describe(s, spec));
      out["partial_socles"] = partial;
    }
  } else {
    throw ParseError("unknown compute target '" + what + "'", 0);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& compute_targets() {
  static const std::vector<std::string> t = {"koszul", "ext",    "tor",   "depth",   "width",
                                             "pdepth", "pwidth", "socle", "localhom"};
  return t;
}

nlohmann::ordered_json run_compute(const std::string& what, InstanceSpec spec) {
  if (std::find(compute_targets().begin(), compute_targets().end(), what) == compute_targets().end())
    throw ParseError("unknown compute target '" + what + "'", 0);
  if (spec.ring.empty()) throw ParseError("--ring is required", 0);
  if (auto R = try_finite(spec.ring)) {
    spec.backend = "finite";
    return compute_finite(what, spec, *R);
  }
  spec.backend = "polynomial";
  return compute_polynomial(what, spec);
}

}  // namespace koszulkit::harness
