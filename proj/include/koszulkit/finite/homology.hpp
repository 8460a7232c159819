#pragma once

#include <vector>

#include "koszulkit/finite/module.hpp"

namespace koszulkit::finite {

// Matrix with ring-element entries (row-major).
struct RingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> entries;

  Elem at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// F_0 <- F_1 <- ... over a finite ring, resolving `module`. differentials[i] : F_{i+1} -> F_i.
// Ranks beyond the computed range are zero when `finite` is set.
struct FiniteResolution {
  FiniteModule module;
  std::vector<std::size_t> ranks;
  std::vector<RingMatrix> differentials;
  bool finite = false;

  std::size_t rank(int i) const;
  // Zero matrix when i is past a terminated resolution; throws ResolutionBoundExceeded otherwise.
  RingMatrix differential(int i) const;
};

// Computes F_0 .. F_{length+1}, so Tor_i and Ext^i are exact for i <= length.
// Kernels are found by enumerating R^k; k is capped so |R|^k stays below 2^21.
FiniteResolution resolve(const FiniteModule& N, int length);

FiniteModule koszul_homology(const std::vector<Elem>& a, const FiniteModule& M, int i);
// H^j(Hom(K(a), M)); self-duality pairs it with H_{n-j}(a; M).
FiniteModule koszul_cohomology(const std::vector<Elem>& a, const FiniteModule& M, int j);
FiniteModule tor(const FiniteResolution& F, const FiniteModule& M, int i);
FiniteModule ext(const FiniteResolution& F, const FiniteModule& M, int i);

// colim_t Ext^i(R/a^t, M). The system is constant from the stable exponent t
// on (a^t = a^(t+1) makes every transition the identity), so this is Ext^i(R/b, M).
FiniteModule local_cohomology(const FiniteIdeal& a, const FiniteModule& M, int i);
// L_i of the a-adic completion. On a finite ring lim M/a^t M = M/bM = (R/b) (x) M,
// and its left derived functors are Tor_i(R/b, M).
FiniteModule local_homology(const FiniteIdeal& a, const FiniteModule& M, int i);

enum class HomologyKind { kKoszul, kTor, kExt, kLocalCohomology, kLocalHomology };
// Tor and Ext are taken against R/a.
FiniteModule brute_homology(HomologyKind kind, const std::vector<Elem>& a, const FiniteModule& M, int i);

// (0 :_M a)
FiniteModule annihilated_submodule(const FiniteIdeal& a, const FiniteModule& M);
// Gamma_a(M) = (0 :_M a^t) for the stable exponent t.
FiniteModule torsion_submodule(const FiniteIdeal& a, const FiniteModule& M);
// M / aM
FiniteModule quotient_by_ideal(const FiniteIdeal& a, const FiniteModule& M);

}  // namespace koszulkit::finite
