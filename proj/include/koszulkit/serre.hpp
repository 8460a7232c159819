#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koszulkit/derived.hpp"

namespace koszulkit {

// Natural number, +inf, or -inf. Infinities are explicit states, never sentinels.
class Extended {
 public:
  static Extended finite(int v) { return Extended(Kind::kFinite, v); }
  static Extended plus_infinity() { return Extended(Kind::kPlus, 0); }
  static Extended minus_infinity() { return Extended(Kind::kMinus, 0); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_infinity() const { return kind_ == Kind::kPlus; }
  bool is_minus_infinity() const { return kind_ == Kind::kMinus; }
  // Throws Error for the infinities.
  int value() const;
  // "3", "inf", "-inf"
  std::string to_string() const;

  friend bool operator==(const Extended& a, const Extended& b) { return a.kind_ == b.kind_ && a.value_ == b.value_; }

 private:
  enum class Kind { kFinite, kPlus, kMinus };
  Extended(Kind k, int v) : kind_(k), value_(v) {}
  Kind kind_;
  int value_;
};

// Membership test for a Serre class with its closure flags.
struct SerrePredicate {
  std::string name;
  std::function<bool(const FPModule&)> member;
  bool satisfies_C = false;  // (0 :_M a) in S implies Gamma_a(M) in S
  bool satisfies_D = false;  // membership transfers to the a-adic completion
  bool closed_under_colimits = false;

  bool operator()(const FPModule& M) const { return member(M); }
};

SerrePredicate zero_class();
SerrePredicate finite_length_class();
// Every finitely presented module is noetherian.
SerrePredicate noetherian_class();
// T_L = { M : Supp M in Supp L }, decided by radical containment of annihilators.
SerrePredicate support_class(const FPModule& L, std::string label = "supp");

// Checks member(B) == member(A) && member(C) on `trials` seeded short exact
// sequences over `ring`; returns a description of the first violation.
std::optional<std::string> serre_self_test(const SerrePredicate& P, const RingHandle& ring, std::uint64_t seed,
                                           int trials = 100);
// Runs the self-test and throws Error with the violating sequence on failure.
SerrePredicate register_predicate(SerrePredicate P, const RingHandle& ring, std::uint64_t seed = 0);

// zero, finlen, noeth, and supp:L when `L` is given; each passes registration.
std::vector<SerrePredicate> builtin_predicates(const RingHandle& ring, const std::optional<FPModule>& L = std::nullopt);
// "zero", "finlen", "noeth", "supp:<module literal>". Throws ParseError on unknown names.
SerrePredicate predicate_by_name(const RingHandle& ring, std::string_view name);

// Koszul homology, Ext^i(R/a, M) and Tor_i(R/a, M) for 0 <= i <= n+1, computed
// on first use and shared between the invariant routines.
class InvariantContext {
 public:
  InvariantContext(IdealGens a, FPModule M);

  const IdealGens& ideal() const { return a_; }
  const FPModule& module() const { return M_; }
  int n() const { return static_cast<int>(a_.size()); }

  const KoszulProfile& koszul();  // certified
  const std::vector<FPModule>& ext();
  const std::vector<FPModule>& tor();
  const FreeResolution& resolution();

 private:
  IdealGens a_;
  FPModule M_;
  std::optional<KoszulProfile> koszul_;
  std::optional<FreeResolution> resolution_;
  std::optional<std::vector<FPModule>> ext_;
  std::optional<std::vector<FPModule>> tor_;
};

// inf { i : Ext^i(R/a, M) not in S }, cross-checked against inf { i : H_{n-i} not in S }.
Extended p_depth(const SerrePredicate& P, InvariantContext& ctx);
Extended p_depth(const SerrePredicate& P, const IdealGens& a, const FPModule& M);
// inf { i : Tor_i(R/a, M) not in S }, cross-checked against inf { i : H_i not in S }.
Extended p_width(const SerrePredicate& P, InvariantContext& ctx);
Extended p_width(const SerrePredicate& P, const IdealGens& a, const FPModule& M);

struct DepthCertificate {
  Extended value = Extended::plus_infinity();
  Extended by_regular_sequence = Extended::plus_infinity();
  Extended by_koszul = Extended::plus_infinity();
  Extended by_ext = Extended::plus_infinity();
  std::vector<Poly> regular_sequence;
};
// Three independent computations; throws TheoremViolation if any two differ.
DepthCertificate depth_triple(InvariantContext& ctx);
DepthCertificate depth_triple(const IdealGens& a, const FPModule& M);

struct WidthCertificate {
  Extended value = Extended::plus_infinity();
  Extended by_koszul = Extended::plus_infinity();
  Extended by_tor = Extended::plus_infinity();
};
WidthCertificate width_pair(InvariantContext& ctx);
WidthCertificate width_pair(const IdealGens& a, const FPModule& M);

struct AmplitudeReport {
  Extended p_depth = Extended::plus_infinity();
  Extended p_width = Extended::plus_infinity();
  // sup { i : H_i(a; M) not in S }, -inf when every H_i is a member.
  Extended koszul_sup = Extended::minus_infinity();
  int n = 0;
  bool both_infinite = false;
  bool finiteness_agrees = true;
  bool identity_holds = true;
  // P-depth + P-width <= n, checked when P satisfies both C and D.
  bool inequality_checked = false;
  bool inequality_holds = true;
};
// Throws TheoremViolation when the identity, the finiteness equivalence, or the inequality fails.
AmplitudeReport amplitude_identity_check(const SerrePredicate& P, InvariantContext& ctx);
AmplitudeReport amplitude_identity_check(const SerrePredicate& P, const IdealGens& a, const FPModule& M);

struct Tagged {
  Extended value = Extended::plus_infinity();
  std::string method;
};
// Everything the CLI prints for one (P, a, M).
struct InvariantReport {
  Tagged depth, width, p_depth, p_width, koszul_amplitude_sup;
  // cd(a, M), hd(a, M) and ara(a) are bounded by the number of generators.
  int cd_upper = 0;
  int hd_upper = 0;
  int ara_upper = 0;
};
InvariantReport invariant_report(const SerrePredicate& P, InvariantContext& ctx);

}  // namespace koszulkit
