#pragma once

#include <string>
#include <string_view>

#include "koszulkit/ideal.hpp"
#include "koszulkit/poly.hpp"

namespace koszulkit {

// Character cursor shared by the literal parsers; errors carry byte offsets.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws();
  bool at_end();
  char peek();
  // Consumes `c` if it is next (after whitespace).
  bool accept(char c);
  bool accept_word(std::string_view word);
  void expect(char c);
  std::string identifier();
  std::string digits();
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const;
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Accepts "ring F101[x,y,z] grevlex;" as well as the bare "F101[x,y] lex" / "QQ[x]".
RingHandle parse_ring(std::string_view text);
// `3*x^2*y - 1/2*z`, with parentheses and integer powers of subexpressions.
Poly parse_poly(const RingHandle& ring, std::string_view text);
Poly parse_poly(const RingHandle& ring, Scanner& in);
// "(x, y^2)"; "()" or "(0)" is the zero ideal.
IdealGens parse_ideal(const RingHandle& ring, std::string_view text);
IdealGens parse_ideal(const RingHandle& ring, Scanner& in);

}  // namespace koszulkit
