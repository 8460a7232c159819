#include "koszulkit/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "koszulkit/error.hpp"

namespace koszulkit {

RingHandle PolyRing::make(Field field, std::vector<std::string> variables, MonomialOrder order) {
  if (variables.size() > kMaxVars) {
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  return RingHandle(new PolyRing(field, std::move(variables), order));
}

std::string PolyRing::header() const {
  std::ostringstream out;
  out << "ring " << field_.name() << "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) out << (i ? "," : "") << vars_[i];
  out << "] " << (order_ == MonomialOrder::kGrevlex ? "grevlex" : "lex") << ";";
  return out.str();
}

RingHandle PolyRing::with_order(MonomialOrder order) const { return make(field_, vars_, order); }

RingHandle PolyRing::with_extra_variable(const std::string& name) const {
  auto v = vars_;
  v.push_back(name);
  return make(field_, std::move(v), order_);
}

void require_same_ring(const RingHandle& a, const RingHandle& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) {
    throw RingMismatch("operands live in different rings: " + (a ? a->header() : "<none>") +
                       " vs " + (b ? b->header() : "<none>"));
  }
}

namespace {

const RingHandle& common_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  require_same_ring(a.ring(), b.ring());
  return a.ring();
}

bool term_greater(const Term& a, const Term& b, MonomialOrder ord) {
  return compare(a.m, b.m, ord) == std::strong_ordering::greater;
}

}  // namespace

Poly Poly::constant(RingHandle ring, const Scalar& c) {
  Poly p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::from_int(RingHandle ring, long long v) {
  auto c = ring->field().from_int(v);
  return constant(std::move(ring), c);
}

Poly Poly::variable(RingHandle ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  auto one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Poly Poly::monomial(RingHandle ring, const Monomial& m, const Scalar& c) {
  Poly p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingHandle ring, std::vector<Term> terms) {
  const auto ord = ring->order();
  const auto& f = ring->field();
  std::sort(terms.begin(), terms.end(),
            [ord](const Term& a, const Term& b) { return term_greater(a, b, ord); });
  Poly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = f.add(p.terms_.back().c, t.c);
      if (f.is_zero(p.terms_.back().c)) p.terms_.pop_back();
    } else if (!f.is_zero(t.c)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(RingHandle ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.degree() != terms_.front().m.degree()) return false;
  }
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  const auto& ring = common_ring(*this, o);
  if (terms_.empty()) return o.ring_ ? o : Poly(ring);
  if (o.terms_.empty()) return *this;
  const auto ord = ring->order();
  const auto& f = ring->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = compare(terms_[i].m, o.terms_[j].m, ord);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(o.terms_[j++]);
    } else {
      auto s = f.add(terms_[i].c, o.terms_[j].c);
      if (!f.is_zero(s)) out.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted(ring, std::move(out));
}

Poly Poly::operator-() const {
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, ring_->field().neg(t.c)});
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  const auto& ring = common_ring(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Poly(ring);
  const auto& f = ring->field();
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) out.push_back({a.m * b.m, f.mul(a.c, b.c)});
  }
  return from_terms(ring, std::move(out));
}

Poly Poly::scale(const Scalar& c) const {
  if (terms_.empty()) return *this;
  const auto& f = ring_->field();
  if (f.is_zero(c)) return Poly(ring_);
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, f.mul(t.c, c)});
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  if (terms_.empty()) return *this;
  const auto& f = ring_->field();
  if (f.is_zero(c)) return Poly(ring_);
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, f.mul(t.c, c)});
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result = from_int(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scale(ring_->field().inv(terms_.front().c));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  }
  return true;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = ring_->field();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool negative = false;
    std::string mag;
    if (f.is_prime_field()) {
      std::uint32_t v = t.c.residue_value();
      std::uint32_t p = f.characteristic();
      if (p > 2 && v > p / 2) {
        negative = true;
        v = p - v;
      }
      mag = std::to_string(v);
    } else {
      mpq_class q = t.c.rational_value();
      if (q < 0) {
        negative = true;
        q = -q;
      }
      mag = q.get_str();
    }
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_to_string(*ring_, t.m);
    if (t.m.is_one()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

Poly poly_arith(PolyOp op, const Poly& p, const Poly& q) {
  switch (op) {
    case PolyOp::kAdd:
      return p + q;
    case PolyOp::kMul:
      return p * q;
    case PolyOp::kScalarMul:
      if (!q.is_constant()) throw Error("scalar_mul expects a constant second operand");
      if (q.ring() && p.ring()) require_same_ring(p.ring(), q.ring());
      return q.is_zero() ? Poly(p.ring()) : p.scale(q.leading_coeff());
  }
  throw Error("unknown polynomial operation");
}

}  // namespace koszulkit
