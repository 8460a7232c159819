#include "koszulkit/parse.hpp"

#include <cctype>

#include "koszulkit/error.hpp"

namespace koszulkit {

void Scanner::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::accept(char c) {
  if (peek() == c && !at_end()) {
    ++pos_;
    return true;
  }
  return false;
}

bool Scanner::accept_word(std::string_view word) {
  skip_ws();
  if (text_.substr(pos_, word.size()) != word) return false;
  std::size_t end = pos_ + word.size();
  if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
    return false;
  }
  pos_ = end;
  return true;
}

void Scanner::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

std::string Scanner::identifier() {
  skip_ws();
  std::size_t start = pos_;
  if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
  }
  if (start == pos_) fail("expected identifier");
  return std::string(text_.substr(start, pos_ - start));
}

std::string Scanner::digits() {
  skip_ws();
  std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (start == pos_) fail("expected integer");
  return std::string(text_.substr(start, pos_ - start));
}

void Scanner::fail(const std::string& what) const { throw ParseError(what, pos_); }

RingHandle parse_ring(std::string_view text) {
  Scanner in(text);
  in.accept_word("ring");
  std::string fname = in.identifier();
  Field field = Field::rationals();
  if (fname == "QQ" || fname == "Q") {
    field = Field::rationals();
  } else if (fname.size() > 1 && fname[0] == 'F' &&
             fname.find_first_not_of("0123456789", 1) == std::string::npos) {
    try {
      field = Field::prime(static_cast<std::uint32_t>(std::stoul(fname.substr(1))));
    } catch (const std::exception& e) {
      in.fail(e.what());
    }
  } else {
    in.fail("unknown coefficient field '" + fname + "'");
  }
  in.expect('[');
  std::vector<std::string> vars;
  if (!in.accept(']')) {
    do {
      vars.push_back(in.identifier());
    } while (in.accept(','));
    in.expect(']');
  }
  MonomialOrder order = MonomialOrder::kGrevlex;
  if (in.accept_word("grevlex")) {
    order = MonomialOrder::kGrevlex;
  } else if (in.accept_word("lex")) {
    order = MonomialOrder::kLex;
  }
  in.accept(';');
  if (!in.at_end()) in.fail("unexpected trailing text");
  try {
    return PolyRing::make(field, std::move(vars), order);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

namespace {

Poly parse_expr(const RingHandle& ring, Scanner& in);

Poly parse_atom(const RingHandle& ring, Scanner& in) {
  char c = in.peek();
  if (c == '(') {
    in.expect('(');
    Poly p = parse_expr(ring, in);
    in.expect(')');
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    mpq_class q(mpz_class(in.digits()));
    if (in.accept('/')) {
      mpz_class den(in.digits());
      if (den == 0) in.fail("zero denominator");
      q /= den;
    }
    try {
      return Poly::constant(ring, ring->field().from_rational(q));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  std::string name = in.identifier();
  const auto& vars = ring->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return Poly::variable(ring, i);
  }
  in.fail("unknown variable '" + name + "'");
}

Poly parse_power(const RingHandle& ring, Scanner& in) {
  Poly base = parse_atom(ring, in);
  if (in.accept('^')) {
    std::string e = in.digits();
    if (e.size() > 5) in.fail("exponent too large");
    try {
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      in.fail(err.what());
    }
  }
  return base;
}

Poly parse_term(const RingHandle& ring, Scanner& in) {
  Poly p = parse_power(ring, in);
  while (in.accept('*')) p = p * parse_power(ring, in);
  return p;
}

Poly parse_expr(const RingHandle& ring, Scanner& in) {
  bool negate = false;
  if (in.accept('-')) {
    negate = true;
  } else {
    in.accept('+');
  }
  Poly p = parse_term(ring, in);
  if (negate) p = -p;
  while (true) {
    if (in.accept('+')) {
      p = p + parse_term(ring, in);
    } else if (in.accept('-')) {
      p = p - parse_term(ring, in);
    } else {
      break;
    }
  }
  return p;
}

}  // namespace

Poly parse_poly(const RingHandle& ring, Scanner& in) { return parse_expr(ring, in); }

Poly parse_poly(const RingHandle& ring, std::string_view text) {
  Scanner in(text);
  Poly p = parse_expr(ring, in);
  if (!in.at_end()) in.fail("unexpected trailing text");
  return p;
}

IdealGens parse_ideal(const RingHandle& ring, Scanner& in) {
  in.expect('(');
  std::vector<Poly> gens;
  if (!in.accept(')')) {
    do {
      gens.push_back(parse_expr(ring, in));
    } while (in.accept(','));
    in.expect(')');
  }
  return IdealGens(ring, std::move(gens));
}

IdealGens parse_ideal(const RingHandle& ring, std::string_view text) {
  Scanner in(text);
  IdealGens I = parse_ideal(ring, in);
  if (!in.at_end()) in.fail("unexpected trailing text");
  return I;
}

}  // namespace koszulkit
