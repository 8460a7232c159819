#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace koszulkit {

inline constexpr std::size_t kMaxVars = 8;

enum class MonomialOrder { kGrevlex, kLex };

// Exponent vector over at most kMaxVars variables with cached total degree.
// Unused trailing slots stay zero, so comparisons ignore the variable count.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  // Throws Error if `exps` is longer than kMaxVars or an entry overflows.
  explicit Monomial(std::span<const int> exps);
  static Monomial variable(std::size_t index, int power = 1);

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  // Checked product; throws Error when an exponent would leave the 16-bit range.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Precondition: divides(o). Returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

// Total order on monomials; grevlex breaks degree ties by the reversed
// last-nonzero rule, lex compares exponents left to right.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::kGrevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Raw exponent-vector comparison; throws Error on length mismatch.
std::strong_ordering monomial_cmp(std::span<const int> u, std::span<const int> v,
                                  MonomialOrder order);

}  // namespace koszulkit
