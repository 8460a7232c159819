#include "koszulkit/finite/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "koszulkit/error.hpp"

namespace koszulkit::finite {

namespace {

constexpr std::size_t kMaxRingSize = 256;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Digits of a mixed-radix code.
std::vector<std::size_t> split_code(std::size_t code, const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> out(radix.size());
  for (std::size_t j = 0; j < radix.size(); ++j) {
    out[j] = code % radix[j];
    code /= radix[j];
  }
  return out;
}

std::size_t join_code(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  std::size_t code = 0;
  for (std::size_t j = radix.size(); j-- > 0;) code = code * radix[j] + digits[j];
  return code;
}

std::size_t component_add(const RingComponent& c, std::size_t a, std::size_t b) {
  if (c.kind == RingComponent::Kind::kIntegersMod) return (a + b) % static_cast<std::size_t>(c.modulus);
  const std::size_t p = static_cast<std::size_t>(c.modulus);
  std::size_t out = 0, w = 1;
  for (int i = 0; i < c.length; ++i) {
    out += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return out;
}

std::size_t component_mul(const RingComponent& c, std::size_t a, std::size_t b) {
  if (c.kind == RingComponent::Kind::kIntegersMod) return (a * b) % static_cast<std::size_t>(c.modulus);
  const std::size_t p = static_cast<std::size_t>(c.modulus);
  const std::size_t k = static_cast<std::size_t>(c.length);
  std::vector<std::size_t> da(k), db(k), dc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; i + j < k; ++j) dc[i + j] = (dc[i + j] + da[i] * db[j]) % p;
  }
  std::size_t out = 0;
  for (std::size_t i = k; i-- > 0;) out = out * p + dc[i];
  return out;
}

std::string component_element(const RingComponent& c, std::size_t code) {
  if (c.kind == RingComponent::Kind::kIntegersMod) return std::to_string(code);
  const std::size_t p = static_cast<std::size_t>(c.modulus);
  std::string s;
  for (int i = 0; i < c.length; ++i) {
    const std::size_t d = code % p;
    code /= p;
    if (d == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(d);
    } else {
      term = (d == 1 ? "" : std::to_string(d) + "*") + "x" + (i == 1 ? "" : "^" + std::to_string(i));
    }
    s = s.empty() ? term : term + " + " + s;
  }
  return s.empty() ? "0" : s;
}

std::string strip(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  return s;
}

// Splits on `sep` outside brackets and parentheses.
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, char sep, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
      continue;
    }
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
  }
  return out;
}

long long parse_int(const std::string& s, std::size_t& i, std::size_t base) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected integer", base + i);
  long long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000000LL) throw ParseError("integer too large", base + i);
    ++i;
  }
  return v;
}

// Element of one component, as its component code.
std::size_t parse_component_element(const RingComponent& c, const std::string& s, std::size_t base) {
  if (s.empty()) throw ParseError("empty element", base);
  const long long p = c.modulus;
  const std::size_t k = static_cast<std::size_t>(c.length);
  std::vector<long long> coef(c.kind == RingComponent::Kind::kIntegersMod ? 1 : k, 0);
  std::size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-'", base + i);
    }
    long long value = 1;
    bool has_number = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = parse_int(s, i, base);
      has_number = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t e = 0;
    if (i < s.size() && s[i] == 'x') {
      if (c.kind == RingComponent::Kind::kIntegersMod) throw ParseError("no variable in Z/n", base + i);
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = static_cast<std::size_t>(parse_int(s, i, base));
      }
    } else if (!has_number) {
      throw ParseError("expected a term", base + i);
    }
    if (e < coef.size()) {
      const long long m = c.kind == RingComponent::Kind::kIntegersMod ? c.modulus : p;
      coef[e] = ((coef[e] + sign * (value % m)) % m + m) % m;
    }
  }
  if (c.kind == RingComponent::Kind::kIntegersMod) return static_cast<std::size_t>(coef[0]);
  std::size_t code = 0;
  for (std::size_t d = k; d-- > 0;) code = code * static_cast<std::size_t>(p) + static_cast<std::size_t>(coef[d]);
  return code;
}

}  // namespace

std::size_t RingComponent::size() const {
  std::size_t s = 1;
  if (kind == Kind::kIntegersMod) return static_cast<std::size_t>(modulus);
  for (int i = 0; i < length; ++i) s *= static_cast<std::size_t>(modulus);
  return s;
}

std::string RingComponent::to_string() const {
  if (kind == Kind::kIntegersMod) return "Z/" + std::to_string(modulus);
  return "F" + std::to_string(modulus) + "[x]/x^" + std::to_string(length);
}

FiniteRingHandle FiniteRing::structured(std::vector<RingComponent> components) {
  if (components.empty()) throw Error("a structured ring needs at least one component");
  auto R = std::shared_ptr<FiniteRing>(new FiniteRing());
  std::vector<std::size_t> radix;
  std::size_t n = 1;
  for (const auto& c : components) {
    if (c.kind == RingComponent::Kind::kIntegersMod && c.modulus < 2) throw Error("Z/n needs n >= 2");
    if (c.kind == RingComponent::Kind::kTruncated && (!is_prime(c.modulus) || c.length < 1)) {
      throw Error("F_p[x]/x^k needs p prime and k >= 1");
    }
    radix.push_back(c.size());
    n *= c.size();
    if (n > kMaxRingSize) throw CapabilityError("finite rings are limited to " + std::to_string(kMaxRingSize) + " elements");
  }
  R->components_ = components;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j) R->name_ += "*";
    R->name_ += components[j].to_string();
  }
  R->add_.assign(n, std::vector<Elem>(n));
  R->mul_.assign(n, std::vector<Elem>(n));
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t e = 0; e < n; ++e) digits[e] = split_code(e, radix);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> s(radix.size()), p(radix.size());
      for (std::size_t j = 0; j < radix.size(); ++j) {
        s[j] = component_add(components[j], digits[a][j], digits[b][j]);
        p[j] = component_mul(components[j], digits[a][j], digits[b][j]);
      }
      R->add_[a][b] = static_cast<Elem>(join_code(s, radix));
      R->mul_[a][b] = static_cast<Elem>(join_code(p, radix));
    }
  }
  R->zero_ = 0;
  std::vector<std::size_t> ones(radix.size(), 1);
  R->one_ = static_cast<Elem>(join_code(ones, radix));

  // Generators: component idempotents (products only) and the component variables.
  const bool product = components.size() > 1;
  std::vector<std::size_t> idem_gen(components.size()), var_gen(components.size(), SIZE_MAX);
  for (std::size_t j = 0; j < components.size(); ++j) {
    std::vector<std::size_t> d(radix.size(), 0);
    if (product) {
      d[j] = 1;
      idem_gen[j] = R->generators_.size();
      R->generators_.push_back(static_cast<Elem>(join_code(d, radix)));
    }
    if (components[j].kind == RingComponent::Kind::kTruncated && components[j].length > 1) {
      d.assign(radix.size(), 0);
      d[j] = static_cast<std::size_t>(components[j].modulus);  // the digit pattern of x
      var_gen[j] = R->generators_.size();
      R->generators_.push_back(static_cast<Elem>(join_code(d, radix)));
    }
  }
  R->recipes_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    Recipe rec;
    for (std::size_t j = 0; j < components.size(); ++j) {
      const auto& c = components[j];
      std::vector<std::size_t> unit;
      if (product) unit.push_back(idem_gen[j]);
      if (c.kind == RingComponent::Kind::kIntegersMod) {
        if (digits[e][j] != 0) rec.push_back({static_cast<Int>(digits[e][j]), unit});
        continue;
      }
      std::size_t code = digits[e][j];
      const std::size_t p = static_cast<std::size_t>(c.modulus);
      for (int i = 0; i < c.length; ++i) {
        const std::size_t d = code % p;
        code /= p;
        if (d == 0) continue;
        if (i == 0) {
          rec.push_back({static_cast<Int>(d), unit});
        } else {
          rec.push_back({static_cast<Int>(d), std::vector<std::size_t>(static_cast<std::size_t>(i), var_gen[j])});
        }
      }
    }
    R->recipes_[e] = std::move(rec);
  }
  for (const auto& c : components) {
    if (c.kind == RingComponent::Kind::kIntegersMod) {
      R->additive_orders_.push_back(c.modulus);
    } else {
      for (int i = 0; i < c.length; ++i) R->additive_orders_.push_back(c.modulus);
    }
  }
  R->finish();
  return R;
}

FiniteRingHandle FiniteRing::from_tables(std::string name, std::vector<std::vector<Elem>> add,
                                         std::vector<std::vector<Elem>> mul, Elem one) {
  const std::size_t n = add.size();
  if (n == 0 || n > 64 || mul.size() != n || one >= n) throw Error("table-form rings need 1..64 elements");
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a].size() != n || mul[a].size() != n) throw Error("ring tables must be square");
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] >= n || mul[a][b] >= n) throw Error("ring table entry out of range");
    }
  }
  Elem zero = static_cast<Elem>(n);
  for (std::size_t z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = add[z][a] == a;
    if (ok) zero = static_cast<Elem>(z);
  }
  if (zero == n) throw Error("ring table: no additive identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a] || mul[a][b] != mul[b][a]) throw Error("ring table: not commutative");
      if (add[a][b] == zero) has_neg = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) throw Error("ring table: addition not associative");
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw Error("ring table: multiplication not associative");
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) throw Error("ring table: not distributive");
      }
    }
    if (!has_neg) throw Error("ring table: missing additive inverse");
    if (mul[one][a] != a) throw Error("ring table: the given one is not an identity");
  }
  auto R = std::shared_ptr<FiniteRing>(new FiniteRing());
  R->name_ = std::move(name);
  R->add_ = std::move(add);
  R->mul_ = std::move(mul);
  R->zero_ = zero;
  R->one_ = one;
  R->recipes_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    R->generators_.push_back(static_cast<Elem>(e));
    if (e != zero) R->recipes_[e] = {{1, {e}}};
  }
  // Additive group from the presentation <g_e | g_a + g_b = g_(a+b)>.
  IntMatrix rel(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = a * n + b;
      rel(a, col) += 1;
      rel(b, col) += 1;
      rel(R->add_[a][b], col) -= 1;
    }
  }
  SmithForm sf = smith_form(rel);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    const Int d = i < sf.diagonal.size() ? sf.diagonal[i] : 0;
    if (d == 0) throw Error("ring table: additive group is not finite");
    if (d != 1) keep.push_back(i);
  }
  for (std::size_t i : keep) R->additive_orders_.push_back(sf.diagonal[i]);
  R->coords_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    IntVec c;
    for (std::size_t k = 0; k < keep.size(); ++k) c.push_back(mod(sf.U(keep[k], e), R->additive_orders_[k]));
    R->coords_[e] = c;
  }
  R->finish();
  return R;
}

void FiniteRing::finish() {
  const std::size_t n = size();
  neg_.assign(n, zero_);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b] == zero_) neg_[a] = static_cast<Elem>(b);
    }
  }
  std::vector<Elem> idem;
  for (std::size_t e = 0; e < n; ++e) {
    if (e != zero_ && mul_[e][e] == e) idem.push_back(static_cast<Elem>(e));
  }
  for (Elem e : idem) {
    bool primitive = true;
    for (Elem f : idem) {
      if (f != e && mul_[f][e] == f) primitive = false;
    }
    if (primitive) idempotents_.push_back(e);
  }
}

Elem FiniteRing::from_int(Int n) const {
  Elem base = n >= 0 ? one_ : neg_[one_];
  Int k = n >= 0 ? n : -n;
  // Reduce by the additive order of 1.
  Int order = 1;
  for (Elem x = one_; x != zero_; x = add_[x][one_]) ++order;
  k %= order;
  Elem out = zero_;
  for (Int i = 0; i < k; ++i) out = add_[out][base];
  return out;
}

std::string FiniteRing::element_to_string(Elem e) const {
  if (!is_structured()) return "#" + std::to_string(e);
  std::vector<std::size_t> radix;
  for (const auto& c : components_) radix.push_back(c.size());
  auto d = split_code(e, radix);
  if (components_.size() == 1) return component_element(components_[0], d[0]);
  std::string s = "[";
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) s += ", ";
    s += component_element(components_[j], d[j]);
  }
  return s + "]";
}

IntVec FiniteRing::additive_coords(Elem e) const {
  if (!is_structured()) return coords_[e];
  IntVec out;
  std::size_t code = e;
  for (const auto& c : components_) {
    const std::size_t s = c.size();
    std::size_t digit = code % s;
    code /= s;
    if (c.kind == RingComponent::Kind::kIntegersMod) {
      out.push_back(static_cast<Int>(digit));
    } else {
      for (int i = 0; i < c.length; ++i) {
        out.push_back(static_cast<Int>(digit % static_cast<std::size_t>(c.modulus)));
        digit /= static_cast<std::size_t>(c.modulus);
      }
    }
  }
  return out;
}

Elem FiniteRing::from_additive_coords(const IntVec& c) const {
  if (c.size() != additive_orders_.size()) throw Error("additive coordinate length mismatch");
  if (!is_structured()) {
    IntVec r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = mod(c[i], additive_orders_[i]);
    for (std::size_t e = 0; e < coords_.size(); ++e) {
      if (coords_[e] == r) return static_cast<Elem>(e);
    }
    throw Error("coordinates do not name a ring element");
  }
  // Mixed radix with the same digit order as the coordinates.
  std::size_t code = 0, weight = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    code += static_cast<std::size_t>(mod(c[i], additive_orders_[i])) * weight;
    weight *= static_cast<std::size_t>(additive_orders_[i]);
  }
  return static_cast<Elem>(code);
}

bool FiniteRing::is_unit(Elem e) const {
  for (std::size_t f = 0; f < size(); ++f) {
    if (mul_[e][f] == one_) return true;
  }
  return false;
}

FiniteRingHandle parse_finite_ring(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty ring literal", 0);
  std::vector<RingComponent> comps;
  for (const auto& [f, base] : split_top(s, '*', 0)) {
    std::size_t i = 0;
    RingComponent c;
    if (f.rfind("Z/", 0) == 0) {
      i = 2;
      c.modulus = static_cast<int>(parse_int(f, i, base));
      if (c.modulus < 2) throw ParseError("Z/n needs n >= 2", base);
    } else if (!f.empty() && f[0] == 'F') {
      i = 1;
      const int p = static_cast<int>(parse_int(f, i, base));
      if (!is_prime(p)) throw ParseError("F_p needs a prime p", base + 1);
      c.modulus = p;
      if (i < f.size()) {
        const std::string rest = f.substr(i);
        std::size_t j = 0;
        std::string tail;
        if (rest.rfind("[x]/x^", 0) == 0) {
          j = 6;
        } else if (rest.rfind("[x]/(x^", 0) == 0) {
          j = 7;
          tail = ")";
        } else {
          throw ParseError("expected [x]/x^k", base + i);
        }
        const int k = static_cast<int>(parse_int(rest, j, base + i));
        if (rest.substr(j) != tail) throw ParseError("unexpected trailing text", base + i + j);
        if (k < 1) throw ParseError("x^k needs k >= 1", base + i + j);
        if (k > 1) {
          c.kind = RingComponent::Kind::kTruncated;
          c.length = k;
        }
      }
      i = f.size();
    } else {
      throw ParseError("expected Z/n or F_p[x]/x^k", base);
    }
    if (i != f.size()) throw ParseError("unexpected trailing text", base + i);
    comps.push_back(c);
  }
  return FiniteRing::structured(comps);
}

Elem parse_finite_element(const FiniteRing& R, std::string_view text) {
  const std::string s = strip(text);
  if (!R.is_structured()) {
    if (!s.empty() && s[0] == '#') {
      std::size_t i = 1;
      const long long v = parse_int(s, i, 0);
      if (i != s.size() || static_cast<std::size_t>(v) >= R.size()) throw ParseError("bad element index", 0);
      return static_cast<Elem>(v);
    }
    std::size_t i = s[0] == '-' ? 1 : 0;
    const long long v = parse_int(s, i, 0);
    if (i != s.size()) throw ParseError("unexpected trailing text", i);
    return R.from_int(s[0] == '-' ? -v : v);
  }
  const auto& comps = R.components();
  std::vector<std::size_t> radix;
  for (const auto& c : comps) radix.push_back(c.size());
  if (comps.size() == 1) return static_cast<Elem>(parse_component_element(comps[0], s, 0));
  if (s.empty() || s[0] != '[') {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    const long long v = parse_int(s, i, 0);
    if (i != s.size()) throw ParseError("expected an integer or [component, ...]", i);
    return R.from_int(s[0] == '-' ? -v : v);
  }
  if (s.back() != ']') throw ParseError("missing ']'", s.size());
  auto parts = split_top(s.substr(1, s.size() - 2), ',', 1);
  if (parts.size() != comps.size()) throw ParseError("component count mismatch", 0);
  std::vector<std::size_t> digits;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    digits.push_back(parse_component_element(comps[j], parts[j].first, parts[j].second));
  }
  return static_cast<Elem>(join_code(digits, radix));
}

FiniteIdeal FiniteIdeal::generated(const FiniteRingHandle& R, std::vector<Elem> gens) {
  FiniteIdeal I;
  I.ring_ = R;
  I.gens_ = std::move(gens);
  const std::size_t n = R->size();
  I.members_.assign(n, false);
  I.members_[R->zero()] = true;
  std::vector<Elem> span{R->zero()};
  for (Elem g : I.gens_) {
    if (g >= n) throw Error("ideal generator out of range");
    std::vector<Elem> next = span;
    for (Elem s : span) {
      for (std::size_t r = 0; r < n; ++r) {
        const Elem x = R->add(s, R->mul(static_cast<Elem>(r), g));
        if (!I.members_[x]) {
          I.members_[x] = true;
          next.push_back(x);
        }
      }
    }
    span = std::move(next);
  }
  I.count_ = span.size();
  return I;
}

std::vector<Elem> FiniteIdeal::elements() const {
  std::vector<Elem> out;
  for (std::size_t e = 0; e < members_.size(); ++e) {
    if (members_[e]) out.push_back(static_cast<Elem>(e));
  }
  return out;
}

bool FiniteIdeal::contains(const FiniteIdeal& other) const {
  for (std::size_t e = 0; e < members_.size(); ++e) {
    if (other.members_[e] && !members_[e]) return false;
  }
  return true;
}

FiniteIdeal FiniteIdeal::operator*(const FiniteIdeal& other) const {
  std::vector<Elem> gens;
  for (Elem a : gens_) {
    for (Elem b : other.gens_) gens.push_back(ring_->mul(a, b));
  }
  FiniteIdeal P = generated(ring_, gens);
  return generated(ring_, P.minimal_generators());
}

FiniteIdeal FiniteIdeal::operator+(const FiniteIdeal& other) const {
  std::vector<Elem> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  FiniteIdeal S = generated(ring_, gens);
  return generated(ring_, S.minimal_generators());
}

std::vector<Elem> FiniteIdeal::minimal_generators() const {
  if (is_zero()) return {};
  for (Elem e : elements()) {
    if (generated(ring_, {e}) == *this) return {e};
  }
  const auto elems = elements();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (generated(ring_, {elems[a], elems[b]}) == *this) return {elems[a], elems[b]};
    }
  }
  std::vector<Elem> gens;
  FiniteIdeal span = generated(ring_, {});
  for (Elem e : elems) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generated(ring_, gens);
  }
  return gens;
}

std::vector<bool> FiniteIdeal::zero_locus() const {
  std::vector<bool> v;
  for (Elem e : ring_->primitive_idempotents()) v.push_back(!contains(e));
  return v;
}

std::string FiniteIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += ring_->element_to_string(gens_[i]);
  }
  return s + ")";
}

std::vector<FiniteIdeal> enumerate_ideals(const FiniteRingHandle& R) {
  std::map<std::vector<bool>, FiniteIdeal> found;
  std::vector<FiniteIdeal> frontier;
  for (std::size_t e = 0; e < R->size(); ++e) {
    FiniteIdeal I = FiniteIdeal::generated(R, {static_cast<Elem>(e)});
    std::vector<bool> key(R->size());
    for (Elem x : I.elements()) key[x] = true;
    if (found.emplace(key, I).second) frontier.push_back(I);
  }
  // Close under sums.
  while (!frontier.empty()) {
    std::vector<FiniteIdeal> next;
    std::vector<FiniteIdeal> all;
    for (const auto& [k, I] : found) all.push_back(I);
    for (const auto& A : frontier) {
      for (const auto& B : all) {
        FiniteIdeal S = A + B;
        std::vector<bool> key(R->size());
        for (Elem x : S.elements()) key[x] = true;
        if (found.emplace(key, S).second) next.push_back(S);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<bool>, FiniteIdeal>> items(found.begin(), found.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first > y.first;
  });
  std::vector<FiniteIdeal> out;
  for (auto& [k, I] : items) out.push_back(FiniteIdeal::generated(R, I.minimal_generators()));
  return out;
}

FiniteIdeal parse_finite_ideal(const FiniteRingHandle& R, std::string_view text) {
  const std::string s = strip(text);
  if (s == "0" || s == "(0)" || s == "()") return FiniteIdeal::zero(R);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("ideal literal must be (g1, ..., gk)", 0);
  std::vector<Elem> gens;
  for (const auto& [part, base] : split_top(s.substr(1, s.size() - 2), ',', 1)) {
    try {
      gens.push_back(parse_finite_element(*R, part));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in ideal generator: ") + e.what(), base + e.position());
    }
  }
  return FiniteIdeal::generated(R, gens);
}

StableIdealPower stable_power(const FiniteIdeal& a) {
  FiniteIdeal P = a;
  int t = 1;
  while (true) {
    FiniteIdeal Q = P * a;
    if (Q == P) return {a, t, P};
    P = Q;
    ++t;
  }
}

}  // namespace koszulkit::finite
