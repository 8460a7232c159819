#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "koszulkit/ideal.hpp"
#include "koszulkit/poly.hpp"

namespace koszulkit {

// Dense coordinate vector of a free module element.
using Column = std::vector<Poly>;

// Generators of a submodule of R^rank.
struct SubmoduleGens {
  RingHandle ring;
  std::size_t rank = 0;
  std::vector<Column> gens;
};

// Term order on R^rank. Components below `split` form the upper block, which
// dominates the lower block; inside a block the ring order decides first and
// the smaller component index wins ties (term over position).
class ModuleOrder {
 public:
  static constexpr std::uint32_t kNoSplit = std::numeric_limits<std::uint32_t>::max();

  explicit ModuleOrder(MonomialOrder mono, std::uint32_t split = kNoSplit)
      : mono_(mono), split_(split) {}

  MonomialOrder mono() const { return mono_; }
  std::uint32_t split() const { return split_; }
  bool in_upper_block(std::uint32_t comp) const { return comp < split_; }

  std::strong_ordering cmp(const Monomial& a, std::uint32_t ca, const Monomial& b,
                           std::uint32_t cb) const {
    bool ua = ca < split_, ub = cb < split_;
    if (ua != ub) return ua ? std::strong_ordering::greater : std::strong_ordering::less;
    auto c = compare(a, b, mono_);
    if (c != std::strong_ordering::equal) return c;
    return cb <=> ca;
  }

 private:
  MonomialOrder mono_;
  std::uint32_t split_;
};

struct VecTerm {
  Monomial m;
  std::uint32_t comp;
  Scalar c;
};

// Sparse module element, terms strictly descending in a ModuleOrder.
using Vec = std::vector<VecTerm>;

Vec to_vec(const Column& col, std::uint32_t comp_offset, const ModuleOrder& order);
// Splits `v` into `rank` polynomials, keeping components [offset, offset + rank).
Column from_vec(const RingHandle& ring, const Vec& v, std::uint32_t offset, std::size_t rank);

// Gröbner basis of a submodule of a free module, computed by Buchberger's
// algorithm with the normal selection strategy and Gebauer-Möller pair
// criteria. The stored basis is reduced and sorted by ascending leading term.
class ModuleGB {
 public:
  ModuleGB(RingHandle ring, ModuleOrder order) : ring_(std::move(ring)), order_(order) {}

  static ModuleGB compute(RingHandle ring, ModuleOrder order, std::vector<Vec> gens,
                          bool single_component = false);

  const RingHandle& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec>& basis() const { return basis_; }

  // Full normal form.
  Vec reduce(Vec v) const;
  // Reduces only while the leading term sits in the upper block.
  Vec reduce_upper(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }

  // Every S-vector of basis pairs reduces to zero.
  bool satisfies_buchberger_criterion() const;

 private:
  const Vec* find_reducer(const VecTerm& t) const;
  Vec reduce_impl(Vec v, bool upper_only) const;
  void rebuild_index();

  RingHandle ring_;
  ModuleOrder order_;
  std::vector<Vec> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

// Rank-one Gröbner basis of an ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(const IdealGens& source, ModuleGB gb) : source_(source), gb_(std::move(gb)) {}

  const RingHandle& ring() const { return source_.ring(); }
  const IdealGens& source() const { return source_; }
  std::vector<Poly> polys() const;
  std::vector<Monomial> leading_monomials() const;
  const ModuleGB& module_basis() const { return gb_; }

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return gb_.basis().empty(); }
  // Reduced bases agree.
  bool same_ideal(const GroebnerBasis& o) const;

 private:
  IdealGens source_;
  ModuleGB gb_;
};

GroebnerBasis buchberger(const IdealGens& gens);
ModuleGB buchberger(const SubmoduleGens& gens);
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

// Kernel of R^k -> R^rank sending e_j to gens[j].
SubmoduleGens syzygies(const SubmoduleGens& vectors);
// Generators of { s in R^k : sum_j s_j a_j lies in the span of b }, a_j and b_l in R^rank.
std::vector<Column> relations_modulo(const RingHandle& ring, std::size_t rank,
                                     const std::vector<Column>& a, const std::vector<Column>& b);

// Solves sum_j s_j a_j = w modulo span(b); reuses one Gröbner basis across calls.
class Lifter {
 public:
  Lifter(RingHandle ring, std::size_t rank, const std::vector<Column>& a,
         const std::vector<Column>& b);
  std::optional<Column> lift(const Column& w) const;
  // w lies in span(a) + span(b).
  bool contains(const Column& w) const { return lift(w).has_value(); }

 private:
  RingHandle ring_;
  std::size_t rank_;
  std::size_t k_;
  ModuleGB gb_;
};

// Krull dimension of R/I from the leading-term ideal; nullopt for I = (1).
std::optional<int> krull_dim(const GroebnerBasis& gb);

enum class IdealOp { kColon, kSaturation, kSum, kProduct, kIntersection };

IdealGens ideal_ops(IdealOp op, const IdealGens& I, const IdealGens& J);
IdealGens ideal_colon(const IdealGens& I, const IdealGens& J);
IdealGens ideal_saturation(const IdealGens& I, const IdealGens& J);
IdealGens ideal_sum(const IdealGens& I, const IdealGens& J);
IdealGens ideal_product(const IdealGens& I, const IdealGens& J);
IdealGens ideal_intersection(const IdealGens& I, const IdealGens& J);
IdealGens ideal_power(const IdealGens& I, unsigned t);
// f in rad(I), decided through 1 in I + (1 - t f) over R[t].
bool radical_membership(const Poly& f, const IdealGens& I);
// rad(I) = rad(J), by two-sided radical membership of generators.
bool same_radical(const IdealGens& I, const IdealGens& J);
bool same_ideal(const IdealGens& I, const IdealGens& J);

// Thread-local count of reduction steps, used as a deterministic work measure.
std::uint64_t reduction_steps();

}  // namespace koszulkit
