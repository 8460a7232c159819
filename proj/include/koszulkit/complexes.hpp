#pragma once

#include <string>
#include <vector>

#include "koszulkit/fpmod.hpp"

namespace koszulkit {

// Bounded complex of finite free modules C_lo..C_hi with d_i : C_i -> C_{i-1}.
class ChainComplex {
 public:
  // `degrees[k]` are the generator degrees of C_{lo+k}; `diffs[k]` is d_{lo+k+1}.
  // Throws Error unless every composite d_{i-1} d_i vanishes.
  ChainComplex(RingHandle ring, int lo, std::vector<std::vector<int>> degrees, std::vector<Matrix> diffs);

  const RingHandle& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(degrees_.size()) - 1; }
  std::size_t rank(int i) const;
  const std::vector<int>& degrees(int i) const;
  // Zero matrix of the right shape outside the range.
  Matrix differential(int i) const;

  // "C_1 -> C_0: [x, y]" lines, highest degree first.
  std::string to_string() const;

 private:
  RingHandle ring_;
  int lo_;
  std::vector<std::vector<int>> degrees_;
  std::vector<Matrix> diffs_;
};

// Degreewise maps f_i : C_i -> D_i, given for i in [lo, hi] of the source.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<Matrix> components;
};

// K(a_1..a_n): left-to-right tensor of Cone(R -a_i-> R) with the Koszul sign
// rule. Basis of K_i: i-subsets in lexicographic order; d(e_S) = sum_k (-1)^k a_{s_k} e_{S - s_k}.
ChainComplex koszul_complex(const IdealGens& a);
ChainComplex shift(const ChainComplex& C, int k);
ChainComplex cone(const ChainMap& f);

// Complex of finitely presented modules with differentials given on generators.
struct ModuleComplex {
  int lo = 0;
  std::vector<FPModule> modules;
  // diffs[k] : modules[k+1] -> modules[k] as a matrix on generators.
  std::vector<Matrix> diffs;

  int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
};

ModuleComplex tensor_with_module(const ChainComplex& C, const FPModule& M);
// Hom(C, M) as a chain complex: degree -i holds Hom(C_i, M) = M^rank(C_i).
ModuleComplex hom_into_module(const ChainComplex& C, const FPModule& M);

// ker d_i / im d_{i+1}, pruned; zero outside the range.
FPModule homology(const ModuleComplex& C, int i);

// Homology together with cycle representatives of its generators.
struct HomologyData {
  FPModule module;
  // Column k is a cycle in the ambient generators of C_i representing generator k.
  Matrix representatives;
  // C_i modulo its own relations and the boundaries.
  FPModule ambient_quotient;

  // Column k: coordinates of the class of cycles[k] on the generators of `module`.
  Matrix classes_of(const std::vector<Column>& cycles) const;
};
HomologyData homology_data(const ModuleComplex& C, int i);

enum class KoszulSide { kTensor, kHom };

// H_i(a; M). The Hom side returns H_{i-n}(Hom(K, M)) with generator degrees
// raised by the degree sum of a, so both sides are graded-isomorphic.
FPModule koszul_homology(const IdealGens& a, const FPModule& M, int i, KoszulSide side = KoszulSide::kTensor);

// All Koszul homology modules of (a; M) with the self-duality and permutation certificates.
struct KoszulProfile {
  std::vector<FPModule> homology;  // H_0..H_n, tensor side
  std::vector<bool> is_zero;
  bool certified = false;
  bool self_dual = true;
  bool permutation_invariant = true;
  std::string failure;
};
// With `certify`, each H_i is compared (iso proxy) against the Hom side and
// against H_i of the reversed sequence.
KoszulProfile koszul_profile(const IdealGens& a, const FPModule& M, bool certify = true);

// koszul_profile with certification; throws TheoremViolation naming the failing
// degree when self-duality or permutation invariance fails.
KoszulProfile certified_koszul(const IdealGens& a, const FPModule& M);

// Thread-local count of Koszul homology modules certified so far.
std::uint64_t certified_koszul_modules();

}  // namespace koszulkit
