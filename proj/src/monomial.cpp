#include "koszulkit/monomial.hpp"

#include <limits>
#include <string>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

constexpr int kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

}  // namespace

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) {
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent) throw Error("exponent out of range");
    exp_[i] = static_cast<Exponent>(exps[i]);
    degree_ += static_cast<std::uint32_t>(exps[i]);
  }
}

Monomial Monomial::variable(std::size_t index, int power) {
  if (index >= kMaxVars) throw Error("variable index out of range");
  if (power < 0 || power > kMaxExponent) throw Error("exponent out of range");
  Monomial m;
  m.exp_[index] = static_cast<Exponent>(power);
  m.degree_ = static_cast<std::uint32_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = int{exp_[i]} + int{o.exp_[i]};
    if (e > kMaxExponent) throw Error("exponent overflow in monomial product");
    r.exp_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > o.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(o.exp_[i] - exp_[i]);
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = exp_[i] > o.exp_[i] ? exp_[i] : o.exp_[i];
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering monomial_cmp(std::span<const int> u, std::span<const int> v,
                                  MonomialOrder order) {
  if (u.size() != v.size()) throw Error("exponent vectors have different lengths");
  return compare(Monomial(u), Monomial(v), order);
}

}  // namespace koszulkit
