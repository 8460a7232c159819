#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koszulkit/finite/intmat.hpp"

namespace koszulkit::finite {

// Ring elements are indices into the element table of their ring.
using Elem = std::uint32_t;

// Z/n (kind kIntegersMod, modulus n) or F_p[x]/(x^k) (kind kTruncated, modulus p, length k).
struct RingComponent {
  enum class Kind { kIntegersMod, kTruncated };
  Kind kind = Kind::kIntegersMod;
  int modulus = 2;
  int length = 1;

  std::size_t size() const;
  std::string to_string() const;
};

// An element as an integer polynomial in the ring generators: a sum of
// coefficient * product of generator indices (empty product = 1).
using Recipe = std::vector<std::pair<Int, std::vector<std::size_t>>>;

class FiniteRing;
using FiniteRingHandle = std::shared_ptr<const FiniteRing>;

// Commutative finite ring with identity, stored by addition and multiplication tables.
class FiniteRing {
 public:
  // Product of the components, with elements in mixed radix (component 0 least significant).
  static FiniteRingHandle structured(std::vector<RingComponent> components);
  // Table form; ring axioms are verified and violations throw Error.
  static FiniteRingHandle from_tables(std::string name, std::vector<std::vector<Elem>> add,
                                      std::vector<std::vector<Elem>> mul, Elem one);

  std::size_t size() const { return add_.size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a][b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a][neg_[b]]; }
  // n * 1
  Elem from_int(Int n) const;

  const std::string& name() const { return name_; }
  bool is_structured() const { return !components_.empty(); }
  const std::vector<RingComponent>& components() const { return components_; }
  std::string element_to_string(Elem e) const;

  // Generators used to act on modules, and each element's recipe in them.
  std::size_t generator_count() const { return generators_.size(); }
  Elem generator(std::size_t i) const { return generators_[i]; }
  const Recipe& recipe(Elem e) const { return recipes_[e]; }

  // Additive group of R as a cyclic decomposition: element e has coordinates
  // additive_coords(e) with respect to orders additive_orders().
  const IntVec& additive_orders() const { return additive_orders_; }
  IntVec additive_coords(Elem e) const;
  Elem from_additive_coords(const IntVec& c) const;

  // Minimal nonzero idempotents; their count is the number of maximal ideals.
  const std::vector<Elem>& primitive_idempotents() const { return idempotents_; }
  bool is_unit(Elem e) const;

 private:
  FiniteRing() = default;
  void finish();

  std::string name_;
  std::vector<RingComponent> components_;
  std::vector<std::vector<Elem>> add_;
  std::vector<std::vector<Elem>> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> generators_;
  std::vector<Recipe> recipes_;
  IntVec additive_orders_;
  std::vector<IntVec> coords_;  // table form only
  std::vector<Elem> idempotents_;
};

// "Z/8", "F2[x]/x^3", "F2[x]/(x^3)", "F3", "Z/4*F2".
FiniteRingHandle parse_finite_ring(std::string_view text);
// Integers (n * 1), polynomials in x for truncated components, "[e0, e1]" for products.
Elem parse_finite_element(const FiniteRing& R, std::string_view text);

class FiniteIdeal {
 public:
  static FiniteIdeal generated(const FiniteRingHandle& R, std::vector<Elem> gens);
  static FiniteIdeal zero(const FiniteRingHandle& R) { return generated(R, {}); }
  static FiniteIdeal unit(const FiniteRingHandle& R) { return generated(R, {R->one()}); }

  const FiniteRingHandle& ring() const { return ring_; }
  const std::vector<Elem>& gens() const { return gens_; }
  bool contains(Elem e) const { return members_[e]; }
  std::size_t size() const { return count_; }
  std::vector<Elem> elements() const;
  bool is_zero() const { return count_ == 1; }
  bool is_unit() const { return count_ == ring_->size(); }
  bool contains(const FiniteIdeal& other) const;
  FiniteIdeal operator*(const FiniteIdeal& other) const;
  FiniteIdeal operator+(const FiniteIdeal& other) const;
  // Smallest generating sequence, preferring low element indices.
  std::vector<Elem> minimal_generators() const;
  // Indices j of primitive idempotents e_j with e_j outside the ideal, i.e. V(a).
  std::vector<bool> zero_locus() const;
  // "(2)", "(x^2, x)", "0" for the zero ideal written "(0)".
  std::string to_string() const;

  friend bool operator==(const FiniteIdeal& a, const FiniteIdeal& b) { return a.members_ == b.members_; }

 private:
  FiniteRingHandle ring_;
  std::vector<Elem> gens_;
  std::vector<bool> members_;
  std::size_t count_ = 0;
};

// Every ideal, ordered by size and then by membership pattern.
std::vector<FiniteIdeal> enumerate_ideals(const FiniteRingHandle& R);
FiniteIdeal parse_finite_ideal(const FiniteRingHandle& R, std::string_view text);

// a^t = a^(t+1); b = a^t is idempotent, so R/b is projective.
struct StableIdealPower {
  FiniteIdeal ideal;
  int exponent = 1;
  FiniteIdeal stable;
};
StableIdealPower stable_power(const FiniteIdeal& a);

}  // namespace koszulkit::finite
