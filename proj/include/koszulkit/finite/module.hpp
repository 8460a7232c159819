#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koszulkit/finite/ring.hpp"

namespace koszulkit::finite {

// Finite R-module: the abelian group Z/c_1 + ... + Z/c_m (every c_i >= 2) with
// the action matrix of each ring generator. Elements are integer vectors, entry
// i reduced mod c_i. Normalized modules have c_1 | c_2 | ... (invariant factors);
// direct sums keep the concatenated decomposition so block formulas stay simple.
class FiniteModule {
 public:
  FiniteModule(FiniteRingHandle R, IntVec orders, std::vector<IntMatrix> generator_actions);

  static FiniteModule zero(const FiniteRingHandle& R);
  static FiniteModule regular(const FiniteRingHandle& R);
  static FiniteModule free(const FiniteRingHandle& R, std::size_t rank);
  // R/J in invariant-factor form.
  static FiniteModule cyclic(const FiniteIdeal& J);

  const FiniteRingHandle& ring() const { return ring_; }
  const IntVec& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t size() const { return size_; }
  bool is_zero() const { return size_ == 1; }

  const IntMatrix& generator_action(std::size_t i) const { return gen_actions_[i]; }
  // Matrix of multiplication by r, evaluated from the recipe of r and cached.
  const IntMatrix& action(Elem r) const;
  IntVec act(Elem r, const IntVec& x) const;
  IntVec reduce(IntVec x) const;
  IntVec add(const IntVec& x, const IntVec& y) const;
  bool is_zero_element(const IntVec& x) const;

  // Mixed-radix code in [0, size()).
  std::uint64_t code(const IntVec& x) const;
  IntVec element(std::uint64_t code) const;

  IntVec invariant_factors() const;
  // Entry j is true when the j-th primitive idempotent acts nontrivially.
  std::vector<bool> support() const;
  // Action respects addition, multiplication and 1 for every pair of ring elements.
  bool verify_action() const;
  // "Z/2 + Z/4", plus the generator matrices when the ring has generators.
  std::string to_string() const;

 private:
  struct Cache;
  FiniteRingHandle ring_;
  IntVec orders_;
  std::vector<IntMatrix> gen_actions_;
  std::uint64_t size_ = 1;
  std::shared_ptr<Cache> cache_;
};

FiniteModule direct_sum(const std::vector<FiniteModule>& summands);
// Same module in invariant-factor form.
FiniteModule normalize(const FiniteModule& M);

// T/S for subgroups S <= T of an ambient module, with T and S given by
// generating vectors. T and S must be submodules for the action to be defined.
class Subquotient {
 public:
  Subquotient(const FiniteModule& ambient, std::vector<IntVec> t_gens, std::vector<IntVec> s_gens);

  const FiniteModule& module() const { return *module_; }
  // Coordinates in module() of an element of T; throws Error for x outside T.
  IntVec coordinates(const IntVec& x) const;
  // Representative in the ambient module of a module() element.
  IntVec lift(const IntVec& q) const;

 private:
  FiniteModule ambient_;
  std::vector<IntVec> t_gens_;
  ColumnEchelon echelon_;
  IntMatrix to_quotient_;  // rows of U for the nontrivial invariant factors
  IntMatrix lifts_;        // ambient representatives of the new basis, as columns
  std::optional<FiniteModule> module_;
};

// F is a |N-rank| x |M-rank| integer matrix read as the group map M -> N.
bool is_homomorphism(const FiniteModule& M, const FiniteModule& N, const IntMatrix& F);
// Generators of ker(F) as vectors of M.
std::vector<IntVec> kernel_generators(const FiniteModule& M, const FiniteModule& N, const IntMatrix& F);

// Elements of M, in code order (requires size() <= limit).
std::vector<IntVec> elements(const FiniteModule& M, std::uint64_t limit = 1 << 20);

// Invariant-factor and kernel-size fingerprints first, then a backtracking
// search for an action-compatible bijection when both sides have at most
// `search_limit` elements. nullopt when the search was not run or gave up.
std::optional<bool> isomorphic(const FiniteModule& A, const FiniteModule& B, std::uint64_t search_limit = 64);

// Hom_Z(M, Q/Z) with (r.chi)(m) = chi(r m).
FiniteModule matlis_dual(const FiniteModule& M);

// One module per isomorphism class with at most `size_bound` elements, as sums
// of cyclic modules R/J with R/J local. Requires a structured ring (a product
// of chain rings); table-form rings throw CapabilityError.
std::vector<FiniteModule> enumerate_modules(const FiniteRingHandle& R, std::uint64_t size_bound = 256);

// Sum of terms joined by '+': "0", "R", "R^k", "R/(ideal)", "Z/d" (= R/(d)).
FiniteModule parse_finite_module(const FiniteRingHandle& R, std::string_view text);

}  // namespace koszulkit::finite
