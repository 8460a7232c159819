#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace koszulkit {

// Exact coefficient: a residue modulo p or an arbitrary-precision rational.
// The owning Field decides which alternative is live.
class Scalar {
 public:
  Scalar() = default;
  static Scalar residue(std::uint32_t v) {
    Scalar s;
    s.v_ = v;
    return s;
  }
  static Scalar rational(mpq_class q) {
    Scalar s;
    s.v_ = std::move(q);
    return s;
  }

  bool is_residue() const { return std::holds_alternative<std::uint32_t>(v_); }
  std::uint32_t residue_value() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
};

class Field {
 public:
  enum class Kind { kPrime, kRationals };

  // Throws Error unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::kRationals, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::kPrime; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // Rationals only, or a prime field when q's denominator is invertible.
  Scalar from_rational(const mpq_class& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws Error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const Scalar& a) const;
  // "F101" or "QQ".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace koszulkit
