#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulkit/finite/homology.hpp"

namespace koszulkit::finite {

// T_U = { M : Supp M in U } for a set U of maximal ideals. U empty is the zero
// class and U = Max R the class of all modules. Every Serre class closed under
// direct limits on a finite ring has this form.
struct SupportClass {
  std::string name;
  std::vector<bool> allowed;

  bool admits(const std::vector<bool>& support) const;
  bool operator()(const FiniteModule& M) const { return admits(M.support()); }
};
// Ordered by the bitmask of U: zero class first, full class last.
std::vector<SupportClass> support_classes(const FiniteRingHandle& R);

enum class FiniteCheck {
  kThm31,  // Koszul / Tor (every N) / Tor (some N) / local homology
  kThm33,  // Koszul H_{n-i} / Ext (every N) / Ext (some N) / local cohomology
  kDef27,  // (0 :_M a) in S implies Gamma_a(M) in S
  kDef25,  // R a-adically complete and M/aM in S imply H^a_0(M) in S
  kCor32,  // M/aM, H^a_0(M) and the completion are in S together
};
std::string to_string(FiniteCheck c);

// Generator sequences tried for an ideal: its minimal generators, plus one
// redundant two-element sequence (or (0) for the zero ideal).
std::vector<std::vector<Elem>> ideal_sequences(const FiniteIdeal& a);

struct VerifyOptions {
  std::uint64_t module_bound = 64;
  // Modules N of at most this size (with Supp N in V(a)) join R/a in conditions (ii) and (iii).
  std::uint64_t test_module_bound = 8;
  std::size_t threads = 1;
};

struct VerdictRow {
  std::string check;
  std::string predicate;
  std::uint64_t cases = 0;
  std::uint64_t agreements = 0;
};

struct Counterexample {
  std::string check;
  std::string ring;
  std::string sequence;
  std::string module;
  std::string predicate;
  int s = 0;
  // e.g. "i=1 ii=1 iii=1 iv=0"
  std::string conditions;
};

struct FiniteVerifyReport {
  std::string ring;
  std::uint64_t ideals = 0;
  std::uint64_t sequences = 0;
  std::uint64_t modules = 0;
  std::vector<VerdictRow> rows;
  std::vector<Counterexample> counterexamples;
  // H_i(K (x) M) against H^{n-i}(Hom(K, M)): equal sizes and isomorphic by search.
  std::uint64_t self_duality_checks = 0;
  std::uint64_t self_duality_failures = 0;
  std::uint64_t self_duality_unsearched = 0;
  // H^a_i(M) = 0 and H^i_a(M) = 0 for i > 0.
  std::uint64_t degeneracy_checks = 0;
  std::uint64_t degeneracy_failures = 0;

  bool all_agree() const {
    return counterexamples.empty() && self_duality_failures == 0 && degeneracy_failures == 0;
  }
};

// Every ideal, generator sequence, module up to the bound, s in 0..n and
// support class. Structured rings only (module enumeration).
FiniteVerifyReport exhaustive_verify(const FiniteRingHandle& R, const VerifyOptions& options = {});

struct DualityRow {
  std::string sequence;
  std::string module;
  int i = 0;
  std::uint64_t dual_side = 0;    // |H_i(a; M*)|
  std::uint64_t direct_side = 0;  // |H_{n-i}(a; M)|
  std::optional<bool> isomorphic; // H_i(a; M*) against H_{n-i}(a; M)*
};

struct DualityReport {
  std::string ring;
  std::vector<DualityRow> rows;
  std::uint64_t failures = 0;
  std::uint64_t unsearched = 0;
};

DualityReport duality_sweep(const FiniteRingHandle& R, std::uint64_t module_bound = 64, std::size_t threads = 1);

}  // namespace koszulkit::finite
