#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koszulkit/groebner.hpp"
#include "koszulkit/ideal.hpp"
#include "koszulkit/matrix.hpp"

namespace koszulkit {

struct GbCache;

// M = coker(P : R^c -> R^r). Generator degrees are grading shifts; they only
// matter for Hilbert functions and are ignored by the algebra itself.
class FPModule {
 public:
  FPModule() = default;
  static FPModule coker(const Matrix& relations, std::vector<int> gen_degrees = {});
  static FPModule free(const RingHandle& ring, std::size_t rank, std::vector<int> gen_degrees = {});
  static FPModule zero(const RingHandle& ring) { return free(ring, 0); }
  // R / I.
  static FPModule cyclic(const IdealGens& I, int gen_degree = 0);

  const RingHandle& ring() const { return relations_.ring(); }
  std::size_t rank() const { return relations_.rows(); }
  const Matrix& relations() const { return relations_; }
  const std::vector<int>& gen_degrees() const { return degrees_; }
  // Relations are homogeneous with respect to the generator degrees.
  bool is_graded() const { return graded_; }
  // Degree of each relation column (graded modules only; zero columns get 0).
  std::vector<int> relation_degrees() const;

  // Decided with a Gröbner basis of the relations.
  bool is_zero() const;
  // Column `v` of R^rank represents zero in M.
  bool is_zero_element(const Column& v) const;
  // Shared Gröbner basis of the relation module.
  const ModuleGB& relation_basis() const;

  FPModule with_degrees(std::vector<int> degrees) const { return coker(relations_, std::move(degrees)); }

  // "module coker [x, y; 0, x^2] over R;"
  std::string to_literal() const;

 private:
  Matrix relations_;
  std::vector<int> degrees_;
  bool graded_ = true;
  std::shared_ptr<GbCache> cache_;
};

// Degrees making the columns of `P` homogeneous, if any assignment exists.
std::optional<std::vector<int>> infer_generator_degrees(const Matrix& P);

// A homomorphism given on generators: column j is the image of source generator j.
class ModuleMap {
 public:
  // Throws Error naming the first relation whose image is not a relation of the target.
  ModuleMap(FPModule source, FPModule target, Matrix matrix);
  // Skips the well-definedness check; for maps that hold by construction.
  static ModuleMap trusted(FPModule source, FPModule target, Matrix matrix);
  static ModuleMap identity(const FPModule& M);
  static ModuleMap zero(const FPModule& source, const FPModule& target);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  ModuleMap compose_after(const ModuleMap& first) const;  // this ∘ first
  // Every generator goes to zero in the target.
  bool is_zero() const;

 private:
  ModuleMap(FPModule s, FPModule t, Matrix m, bool) : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  FPModule source_;
  FPModule target_;
  Matrix matrix_;
};

// Submodule of an ambient module together with its inclusion map.
struct Subquotient {
  FPModule module;
  ModuleMap inclusion;
};

struct Quotient {
  FPModule module;
  ModuleMap projection;
};

// Presentation of the submodule of M generated by columns `gens` of R^rank(M).
Subquotient submodule(const FPModule& M, const std::vector<Column>& gens);

Subquotient kernel(const ModuleMap& f);
Subquotient image(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);
FPModule direct_sum(const FPModule& M, const FPModule& N);
FPModule direct_sum(const std::vector<FPModule>& parts, const RingHandle& ring);
Quotient quotient_by_ideal(const FPModule& M, const IdealGens& I);
// M^k with relations block-diagonal.
FPModule power(const FPModule& M, std::size_t k);

// Removes generators killed by unit entries. `to_pruned` sends old generators
// to the new ones, `from_pruned` is the inverse isomorphism on generators.
struct Pruned {
  FPModule module;
  Matrix to_pruned;
  Matrix from_pruned;
};
Pruned prune(const FPModule& M);
// Pruning, plus the canonical rank-0 zero module when M vanishes.
FPModule simplify(const FPModule& M);

struct HomModule {
  FPModule module;
  // Columns map Hom generators into N^rank(M): block i holds the image of generator i.
  Matrix embedding;
  FPModule source;
  FPModule target;
  // The homomorphism represented by a column of R^(rank(M) rank(N)) as a map M -> N.
  ModuleMap as_map(const Column& element) const;
  ModuleMap generator_map(std::size_t j) const { return as_map(embedding.column(j)); }
};
HomModule hom_module(const FPModule& M, const FPModule& N);
// Evaluation Hom(M, N) x M -> N on element representatives.
Column hom_evaluate(const HomModule& H, const Column& element, const Column& m);

FPModule tensor_module(const FPModule& M, const FPModule& N);

IdealGens annihilator(const FPModule& M);
// (0 :_M J) as a submodule of M.
Subquotient colon_submodule(const FPModule& M, const IdealGens& J);
// Γ_a(M) = union of (0 :_M a^t).
Subquotient torsion_submodule(const IdealGens& a, const FPModule& M);
// a M as a submodule of M.
Subquotient ideal_times_module(const IdealGens& a, const FPModule& M);

// Submodule containment within the same ambient module.
bool submodule_contains(const FPModule& M, const std::vector<Column>& big, const std::vector<Column>& small);

bool finite_length(const FPModule& M);
// k-dimension, counted as standard monomials of the relation module. Throws on infinite length.
std::size_t length(const FPModule& M);

// Hilbert function of a graded module at degree d.
long hilbert_function(const FPModule& M, int d);
// Values for degrees lo..hi inclusive.
std::vector<long> hilbert_values(const FPModule& M, int lo, int hi);
// Default certificate bound: sum of relation degrees + 4.
int default_hilbert_bound(const FPModule& M);
int min_generator_degree(const FPModule& M);

// Isomorphism proxy: equal annihilators, and equal Hilbert functions through
// `bound` when both are graded; otherwise equal zero-ness and, for finite
// length, equal k-dimension.
struct IsoProxy {
  bool same_annihilator = false;
  bool same_hilbert = false;
  bool graded = false;
  bool ok() const { return same_annihilator && same_hilbert; }
};
IsoProxy iso_proxy(const FPModule& A, const FPModule& B, std::optional<int> bound = std::nullopt);

struct FreeResolution {
  FPModule module;
  // Sends generators of F_0 to generators of the module.
  Matrix augmentation;
  // differentials[i] : F_{i+1} -> F_i, for i = 0..computed-1.
  std::vector<Matrix> differentials;
  // Generator degrees of F_0, F_1, ...
  std::vector<std::vector<int>> degrees;
  int bound = 0;
  // The resolution reached F_k = 0 within the bound.
  bool finite = false;

  std::size_t rank(std::size_t i) const;
  // d_i : F_i -> F_{i-1}; zero matrix of the right shape past the computed range.
  Matrix differential(std::size_t i) const;
};
// Computes F_0..F_{L+1} so that Tor_i and Ext^i are exact for i <= L.
FreeResolution free_resolution(const FPModule& M, int L);

// Module literals over `ring`: "module coker [x, y; 0, x^2] over R;", "coker [...]",
// "R", "R^3", "R/(x, y^2)", "0", and "sum(<literal>, <literal>, ...)".
FPModule parse_module(const RingHandle& ring, std::string_view text);

}  // namespace koszulkit
