#include "koszulkit/serre.hpp"

#include <numeric>

#include "koszulkit/parse.hpp"
#include "koszulkit/random.hpp"

namespace koszulkit {

int Extended::value() const {
  if (kind_ != Kind::kFinite) throw Error("value of an infinite quantity");
  return value_;
}

std::string Extended::to_string() const {
  switch (kind_) {
    case Kind::kPlus:
      return "inf";
    case Kind::kMinus:
      return "-inf";
    default:
      return std::to_string(value_);
  }
}

SerrePredicate zero_class() {
  return {"zero", [](const FPModule& M) { return M.rank() == 0 || M.is_zero(); }, true, true, true};
}

SerrePredicate finite_length_class() {
  // Artinian criterion gives C; D is not claimed.
  return {"finlen", [](const FPModule& M) { return M.rank() == 0 || finite_length(M); }, true, false, false};
}

SerrePredicate noetherian_class() {
  return {"noeth", [](const FPModule&) { return true; }, false, true, false};
}

SerrePredicate support_class(const FPModule& L, std::string label) {
  IdealGens annL = annihilator(L);
  auto member = [annL](const FPModule& M) {
    if (M.rank() == 0) return true;
    IdealGens annM = annihilator(M);
    for (const auto& g : annL.gens()) {
      if (!radical_membership(g, annM)) return false;
    }
    return true;
  };
  return {std::move(label), member, true, false, true};
}

std::optional<std::string> serre_self_test(const SerrePredicate& P, const RingHandle& ring, std::uint64_t seed,
                                           int trials) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
  const IdealGens m2 = ideal_power(IdealGens(ring, vars), 2);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    ShortExactSequence ses;
    switch (t % 3) {
      case 0:
        ses = random_short_exact_sequence(ring, rng);
        break;
      case 1: {
        // Finite-length middle term.
        FPModule B = quotient_by_ideal(random_module(ring, rng), m2).module;
        ses = sequence_from(B, {random_element(B, rng, 1)});
        break;
      }
      default: {
        FPModule A = random_module(ring, rng), C = random_module(ring, rng);
        if (rng() % 2) C = quotient_by_ideal(C, m2).module;
        ses = {A, direct_sum(A, C), C};
        break;
      }
    }
    const bool a = P(ses.A), b = P(ses.B), c = P(ses.C);
    if (b != (a && c)) {
      return "0 -> A -> B -> C -> 0 with A = " + ses.A.to_literal() + ", B = " + ses.B.to_literal() +
             ", C = " + ses.C.to_literal() + ": member(A) = " + std::to_string(a) +
             ", member(B) = " + std::to_string(b) + ", member(C) = " + std::to_string(c);
    }
  }
  return std::nullopt;
}

SerrePredicate register_predicate(SerrePredicate P, const RingHandle& ring, std::uint64_t seed) {
  if (auto v = serre_self_test(P, ring, seed)) throw Error("predicate " + P.name + " rejected: " + *v);
  return P;
}

std::vector<SerrePredicate> builtin_predicates(const RingHandle& ring, const std::optional<FPModule>& L) {
  std::vector<SerrePredicate> out;
  out.push_back(register_predicate(zero_class(), ring));
  out.push_back(register_predicate(finite_length_class(), ring));
  out.push_back(register_predicate(noetherian_class(), ring));
  if (L) out.push_back(register_predicate(support_class(*L, "supp:" + L->to_literal()), ring));
  return out;
}

SerrePredicate predicate_by_name(const RingHandle& ring, std::string_view name) {
  if (name == "zero") return zero_class();
  if (name == "finlen") return finite_length_class();
  if (name == "noeth") return noetherian_class();
  if (name.starts_with("supp:")) {
    FPModule L = parse_module(ring, name.substr(5));
    return support_class(L, std::string(name));
  }
  throw ParseError("unknown predicate '" + std::string(name) + "'", 0);
}

InvariantContext::InvariantContext(IdealGens a, FPModule M) : a_(std::move(a)), M_(std::move(M)) {
  require_same_ring(a_.ring(), M_.ring());
}

const KoszulProfile& InvariantContext::koszul() {
  if (!koszul_) koszul_ = certified_koszul(a_, M_);
  return *koszul_;
}

const FreeResolution& InvariantContext::resolution() {
  if (!resolution_) resolution_ = free_resolution(FPModule::cyclic(a_), n() + 1);
  return *resolution_;
}

const std::vector<FPModule>& InvariantContext::ext() {
  if (!ext_) ext_ = ext_range(resolution(), M_, n() + 1);
  return *ext_;
}

const std::vector<FPModule>& InvariantContext::tor() {
  if (!tor_) tor_ = tor_range(resolution(), M_, n() + 1);
  return *tor_;
}

namespace {

template <class Pred>
Extended first_index(int count, Pred failing) {
  for (int i = 0; i < count; ++i) {
    if (failing(i)) return Extended::finite(i);
  }
  return Extended::plus_infinity();
}

bool nonzero(const FPModule& M) { return M.rank() != 0 && !M.is_zero(); }

std::string where(InvariantContext& ctx) {
  return " for a = " + ctx.ideal().to_string() + ", M = " + ctx.module().to_literal();
}

// Homogeneous k-combination of powers of the generators; all summands have degree D.
Poly random_combination(const IdealGens& a, Rng& rng) {
  const RingHandle& R = a.ring();
  int D = 1;
  for (const auto& g : a.gens()) {
    if (!g.is_zero() && g.degree() > 0) D = std::lcm(D, g.degree());
  }
  Poly r = Poly::from_int(R, 0);
  for (const auto& g : a.gens()) {
    if (g.is_zero() || g.degree() <= 0) continue;
    Poly power = Poly::from_int(R, 1);
    for (int e = 0; e < D / g.degree(); ++e) power = power * g;
    Scalar c = R->field().from_int(static_cast<long long>(1 + rng() % 1000));
    if (R->field().is_zero(c)) c = R->field().one();
    r += power.scale(c);
  }
  return r;
}

}  // namespace

Extended p_depth(const SerrePredicate& P, InvariantContext& ctx) {
  const int n = ctx.n();
  const auto& E = ctx.ext();
  const auto& H = ctx.koszul().homology;
  Extended scan = first_index(n + 2, [&](int i) { return !P(E[static_cast<std::size_t>(i)]); });
  Extended kos = first_index(n + 1, [&](int i) { return !P(H[static_cast<std::size_t>(n - i)]); });
  if (!(scan == kos)) {
    throw TheoremViolation(P.name + "-depth: Ext scan gives " + scan.to_string() + ", Koszul gives " +
                           kos.to_string() + where(ctx));
  }
  return kos;
}

Extended p_depth(const SerrePredicate& P, const IdealGens& a, const FPModule& M) {
  InvariantContext ctx(a, M);
  return p_depth(P, ctx);
}

Extended p_width(const SerrePredicate& P, InvariantContext& ctx) {
  const int n = ctx.n();
  const auto& T = ctx.tor();
  const auto& H = ctx.koszul().homology;
  Extended scan = first_index(n + 2, [&](int i) { return !P(T[static_cast<std::size_t>(i)]); });
  Extended kos = first_index(n + 1, [&](int i) { return !P(H[static_cast<std::size_t>(i)]); });
  if (!(scan == kos)) {
    throw TheoremViolation(P.name + "-width: Tor scan gives " + scan.to_string() + ", Koszul gives " +
                           kos.to_string() + where(ctx));
  }
  return kos;
}

Extended p_width(const SerrePredicate& P, const IdealGens& a, const FPModule& M) {
  InvariantContext ctx(a, M);
  return p_width(P, ctx);
}

DepthCertificate depth_triple(InvariantContext& ctx) {
  const int n = ctx.n();
  const IdealGens& a = ctx.ideal();
  DepthCertificate out;
  const auto& H = ctx.koszul().homology;
  const auto& E = ctx.ext();
  out.by_koszul = first_index(n + 1, [&](int i) { return nonzero(H[static_cast<std::size_t>(n - i)]); });
  out.by_ext = first_index(n + 2, [&](int i) { return nonzero(E[static_cast<std::size_t>(i)]); });

  // Greedy regular sequence; the colon (0 :_M a) = 0 certifies that one exists.
  FPModule Mj = ctx.module();
  if (!nonzero(quotient_by_ideal(Mj, a).module)) {
    out.by_regular_sequence = Extended::plus_infinity();
  } else {
    Rng rng(0x5EEDULL);
    const std::size_t limit = a.ring()->nvars() + 1;
    while (out.regular_sequence.size() <= limit) {
      if (nonzero(colon_submodule(Mj, a).module)) break;
      std::optional<Poly> found;
      for (int attempt = 0; attempt < 25 && !found; ++attempt) {
        Poly r = random_combination(a, rng);
        if (r.is_zero()) continue;
        if (!nonzero(colon_submodule(Mj, IdealGens(a.ring(), {r})).module)) found = r;
      }
      if (!found) throw Error("no regular element found in 25 draws although (0 :_M a) = 0" + where(ctx));
      Mj = quotient_by_ideal(Mj, IdealGens(a.ring(), {*found})).module;
      out.regular_sequence.push_back(*found);
    }
    out.by_regular_sequence = Extended::finite(static_cast<int>(out.regular_sequence.size()));
  }
  if (!(out.by_koszul == out.by_ext) || !(out.by_koszul == out.by_regular_sequence)) {
    throw TheoremViolation("depth disagreement: regular sequence " + out.by_regular_sequence.to_string() +
                           ", Koszul " + out.by_koszul.to_string() + ", Ext " + out.by_ext.to_string() + where(ctx));
  }
  out.value = out.by_koszul;
  return out;
}

DepthCertificate depth_triple(const IdealGens& a, const FPModule& M) {
  InvariantContext ctx(a, M);
  return depth_triple(ctx);
}

WidthCertificate width_pair(InvariantContext& ctx) {
  const int n = ctx.n();
  WidthCertificate out;
  const auto& H = ctx.koszul().homology;
  const auto& T = ctx.tor();
  out.by_koszul = first_index(n + 1, [&](int i) { return nonzero(H[static_cast<std::size_t>(i)]); });
  out.by_tor = first_index(n + 2, [&](int i) { return nonzero(T[static_cast<std::size_t>(i)]); });
  if (!(out.by_koszul == out.by_tor)) {
    throw TheoremViolation("width disagreement: Koszul " + out.by_koszul.to_string() + ", Tor " +
                           out.by_tor.to_string() + where(ctx));
  }
  out.value = out.by_koszul;
  return out;
}

WidthCertificate width_pair(const IdealGens& a, const FPModule& M) {
  InvariantContext ctx(a, M);
  return width_pair(ctx);
}

AmplitudeReport amplitude_identity_check(const SerrePredicate& P, InvariantContext& ctx) {
  AmplitudeReport out;
  out.n = ctx.n();
  out.p_depth = p_depth(P, ctx);
  out.p_width = p_width(P, ctx);
  const auto& H = ctx.koszul().homology;
  for (int i = out.n; i >= 0; --i) {
    if (!P(H[static_cast<std::size_t>(i)])) {
      out.koszul_sup = Extended::finite(i);
      break;
    }
  }
  out.both_infinite = !out.p_depth.is_finite() && !out.p_width.is_finite();
  out.finiteness_agrees = out.p_depth.is_finite() == out.p_width.is_finite();
  if (out.p_depth.is_finite()) {
    out.identity_holds = out.koszul_sup.is_finite() && out.koszul_sup.value() + out.p_depth.value() == out.n;
    if (P.satisfies_C && P.satisfies_D && out.p_width.is_finite()) {
      out.inequality_checked = true;
      out.inequality_holds = out.p_depth.value() + out.p_width.value() <= out.n;
    }
  }
  if (!out.finiteness_agrees || !out.identity_holds || !out.inequality_holds) {
    throw TheoremViolation(P.name + " amplitude check failed: P-depth " + out.p_depth.to_string() + ", P-width " +
                           out.p_width.to_string() + ", sup " + out.koszul_sup.to_string() + ", n " +
                           std::to_string(out.n) + where(ctx));
  }
  return out;
}

AmplitudeReport amplitude_identity_check(const SerrePredicate& P, const IdealGens& a, const FPModule& M) {
  InvariantContext ctx(a, M);
  return amplitude_identity_check(P, ctx);
}

InvariantReport invariant_report(const SerrePredicate& P, InvariantContext& ctx) {
  InvariantReport out;
  out.depth = {depth_triple(ctx).value, "regular-sequence = koszul = ext-scan"};
  out.width = {width_pair(ctx).value, "koszul = tor-scan"};
  AmplitudeReport amp = amplitude_identity_check(P, ctx);
  out.p_depth = {amp.p_depth, "ext-scan = koszul"};
  out.p_width = {amp.p_width, "tor-scan = koszul"};
  out.koszul_amplitude_sup = {amp.koszul_sup, "koszul"};
  out.cd_upper = out.hd_upper = out.ara_upper = ctx.n();
  return out;
}

}  // namespace koszulkit
