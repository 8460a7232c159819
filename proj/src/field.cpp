#include "koszulkit/field.hpp"

#include "koszulkit/error.hpp"

namespace koszulkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(Kind::kPrime, p);
}

Scalar Field::zero() const {
  return kind_ == Kind::kPrime ? Scalar::residue(0) : Scalar::rational(mpq_class(0));
}

Scalar Field::one() const {
  return kind_ == Kind::kPrime ? Scalar::residue(1 % p_) : Scalar::rational(mpq_class(1));
}

Scalar Field::from_int(long long v) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint32_t>(r));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(q);
  mpz_class pz(p_);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den < 0) den += pz;
  if (den == 0) throw Error("denominator vanishes in " + name());
  Scalar n = Scalar::residue(static_cast<std::uint32_t>(num.get_ui()));
  Scalar d = Scalar::residue(static_cast<std::uint32_t>(den.get_ui()));
  return div(n, d);
}

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return a.residue_value() == 0;
  return sgn(a.rational_value()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return a.residue_value() == 1;
  return a.rational_value() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    std::uint64_t s = std::uint64_t{a.residue_value()} + b.residue_value();
    if (s >= p_) s -= p_;
    return Scalar::residue(static_cast<std::uint32_t>(s));
  }
  return Scalar::rational(a.rational_value() + b.rational_value());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    std::uint64_t s = std::uint64_t{a.residue_value()} + p_ - b.residue_value();
    if (s >= p_) s -= p_;
    return Scalar::residue(static_cast<std::uint32_t>(s));
  }
  return Scalar::rational(a.rational_value() - b.rational_value());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    return Scalar::residue(
        static_cast<std::uint32_t>(std::uint64_t{a.residue_value()} * b.residue_value() % p_));
  }
  return Scalar::rational(a.rational_value() * b.rational_value());
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::kPrime) {
    return Scalar::residue(a.residue_value() == 0 ? 0 : p_ - a.residue_value());
  }
  return Scalar::rational(-a.rational_value());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero in " + name());
  if (kind_ == Kind::kRationals) return Scalar::rational(1 / a.rational_value());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.residue_value();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Scalar::residue(static_cast<std::uint32_t>(t));
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return std::to_string(a.residue_value());
  return a.rational_value().get_str();
}

std::string Field::name() const {
  return kind_ == Kind::kPrime ? "F" + std::to_string(p_) : "QQ";
}

}  // namespace koszulkit
