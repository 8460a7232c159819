#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "koszulkit/field.hpp"
#include "koszulkit/monomial.hpp"

namespace koszulkit {

class PolyRing;
using RingHandle = std::shared_ptr<const PolyRing>;

// k[x_1..x_m] with a fixed monomial order.
class PolyRing {
 public:
  // Throws Error on duplicate or empty variable names, or more than kMaxVars variables.
  static RingHandle make(Field field, std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::kGrevlex);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }

  // "ring F101[x,y] grevlex;"
  std::string header() const;
  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }
  RingHandle with_order(MonomialOrder order) const;
  RingHandle with_extra_variable(const std::string& name) const;

 private:
  PolyRing(Field f, std::vector<std::string> v, MonomialOrder o)
      : field_(f), vars_(std::move(v)), order_(o) {}
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

// Throws RingMismatch unless both handles denote the same ring.
void require_same_ring(const RingHandle& a, const RingHandle& b);

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse polynomial; terms strictly descending in the ring order, no zero coefficients.
// A default-constructed Poly is the zero element of a not-yet-known ring; arithmetic
// adopts the other operand's ring.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingHandle ring) : ring_(std::move(ring)) {}

  static Poly constant(RingHandle ring, const Scalar& c);
  static Poly from_int(RingHandle ring, long long v);
  static Poly variable(RingHandle ring, std::size_t index);
  static Poly monomial(RingHandle ring, const Monomial& m, const Scalar& c);
  // Sorts and merges arbitrary terms into canonical form.
  static Poly from_terms(RingHandle ring, std::vector<Term> terms);
  // Trusts that `terms` is already canonical.
  static Poly from_sorted(RingHandle ring, std::vector<Term> terms);

  const RingHandle& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  // Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  const Scalar& leading_coeff() const { return terms_.front().c; }
  // Total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const Scalar& c) const;
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);

  // `3*x^2*y - 1/2*z`; residues above p/2 print as negatives.
  std::string to_string() const;

 private:
  RingHandle ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { kAdd, kMul, kScalarMul };

// Front end over the arithmetic operators; for kScalarMul `q` must be constant.
Poly poly_arith(PolyOp op, const Poly& p, const Poly& q);

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

}  // namespace koszulkit
