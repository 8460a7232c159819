#include "koszulkit/finite/module.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "koszulkit/error.hpp"

namespace koszulkit::finite {

struct FiniteModule::Cache {
  std::mutex mu;
  std::vector<std::unique_ptr<IntMatrix>> actions;
};

namespace {

IntMatrix reduce_rows(IntMatrix A, const IntVec& orders) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = mod(A(i, j), orders[i]);
  }
  return A;
}

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

FiniteModule::FiniteModule(FiniteRingHandle R, IntVec orders, std::vector<IntMatrix> generator_actions)
    : ring_(std::move(R)), orders_(std::move(orders)), gen_actions_(std::move(generator_actions)),
      cache_(std::make_shared<Cache>()) {
  if (gen_actions_.size() != ring_->generator_count()) throw Error("one action matrix per ring generator is required");
  for (Int c : orders_) {
    if (c < 2) throw Error("cyclic orders must be at least 2");
    if (size_ > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(c)) throw CapabilityError("finite module too large");
    size_ *= static_cast<std::uint64_t>(c);
  }
  for (auto& G : gen_actions_) {
    if (G.rows() != orders_.size() || G.cols() != orders_.size()) throw Error("action matrix has the wrong shape");
    G = reduce_rows(std::move(G), orders_);
  }
  cache_->actions.resize(ring_->size());
}

FiniteModule FiniteModule::zero(const FiniteRingHandle& R) {
  return FiniteModule(R, {}, std::vector<IntMatrix>(R->generator_count(), IntMatrix(0, 0)));
}

FiniteModule FiniteModule::regular(const FiniteRingHandle& R) {
  const IntVec& orders = R->additive_orders();
  const std::size_t m = orders.size();
  std::vector<Elem> basis;
  for (std::size_t j = 0; j < m; ++j) basis.push_back(R->from_additive_coords(unit_vector(m, j)));
  std::vector<IntMatrix> acts;
  for (std::size_t g = 0; g < R->generator_count(); ++g) {
    IntMatrix A(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const IntVec c = R->additive_coords(R->mul(R->generator(g), basis[j]));
      for (std::size_t i = 0; i < m; ++i) A(i, j) = c[i];
    }
    acts.push_back(A);
  }
  return FiniteModule(R, orders, acts);
}

FiniteModule FiniteModule::free(const FiniteRingHandle& R, std::size_t rank) {
  return direct_sum(std::vector<FiniteModule>(rank, regular(R)));
}

FiniteModule FiniteModule::cyclic(const FiniteIdeal& J) {
  const FiniteRingHandle& R = J.ring();
  FiniteModule reg = regular(R);
  std::vector<IntVec> all, sub;
  for (std::size_t i = 0; i < reg.rank(); ++i) all.push_back(unit_vector(reg.rank(), i));
  for (Elem e : J.elements()) {
    if (e != R->zero()) sub.push_back(R->additive_coords(e));
  }
  return Subquotient(reg, all, sub).module();
}

const IntMatrix& FiniteModule::action(Elem r) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->actions.at(r);
  if (slot) return *slot;
  const std::size_t m = rank();
  IntMatrix A(m, m);
  for (const auto& [coef, word] : ring_->recipe(r)) {
    IntMatrix T = IntMatrix::identity(m);
    for (std::size_t g : word) T = reduce_rows(gen_actions_[g] * T, orders_);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) A(i, j) = mod(A(i, j) + coef * T(i, j), orders_[i]);
    }
  }
  slot = std::make_unique<IntMatrix>(std::move(A));
  return *slot;
}

IntVec FiniteModule::act(Elem r, const IntVec& x) const { return reduce(action(r).apply(x)); }

IntVec FiniteModule::reduce(IntVec x) const {
  if (x.size() != orders_.size()) throw Error("module element has the wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], orders_[i]);
  return x;
}

IntVec FiniteModule::add(const IntVec& x, const IntVec& y) const {
  IntVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod(x[i] + y[i], orders_[i]);
  return z;
}

bool FiniteModule::is_zero_element(const IntVec& x) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mod(x[i], orders_[i]) != 0) return false;
  }
  return true;
}

std::uint64_t FiniteModule::code(const IntVec& x) const {
  std::uint64_t c = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c = c * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(mod(x[i], orders_[i]));
  }
  return c;
}

IntVec FiniteModule::element(std::uint64_t c) const {
  IntVec x(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    x[i] = static_cast<Int>(c % static_cast<std::uint64_t>(orders_[i]));
    c /= static_cast<std::uint64_t>(orders_[i]);
  }
  return x;
}

IntVec FiniteModule::invariant_factors() const {
  if (orders_.empty()) return {};
  SmithForm sf = smith_form(IntMatrix::diagonal(orders_));
  IntVec out;
  for (Int d : sf.diagonal) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

std::vector<bool> FiniteModule::support() const {
  std::vector<bool> s;
  for (Elem e : ring_->primitive_idempotents()) s.push_back(!action(e).is_zero());
  return s;
}

bool FiniteModule::verify_action() const {
  const std::size_t m = rank();
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& G : gen_actions_) {
      IntVec col = G.column(j);
      for (auto& v : col) v *= orders_[j];
      if (!is_zero_element(col)) return false;
    }
  }
  if (!(action(ring_->one()) == IntMatrix::identity(m))) return false;
  const std::size_t n = ring_->size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const IntMatrix& A = action(static_cast<Elem>(a));
      const IntMatrix& B = action(static_cast<Elem>(b));
      if (!(reduce_rows(A + B, orders_) == action(ring_->add(static_cast<Elem>(a), static_cast<Elem>(b))))) return false;
      if (!(reduce_rows(A * B, orders_) == action(ring_->mul(static_cast<Elem>(a), static_cast<Elem>(b))))) return false;
      if (!(reduce_rows(A * B, orders_) == reduce_rows(B * A, orders_))) return false;
    }
  }
  return true;
}

std::string FiniteModule::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + std::to_string(orders_[i]);
  }
  for (std::size_t g = 0; g < gen_actions_.size(); ++g) {
    s += g == 0 ? " {" : ", ";
    s += ring_->element_to_string(ring_->generator(g)) + ": " + gen_actions_[g].to_string();
    if (g + 1 == gen_actions_.size()) s += "}";
  }
  return s;
}

FiniteModule direct_sum(const std::vector<FiniteModule>& summands) {
  if (summands.empty()) throw Error("direct_sum needs at least one summand");
  const FiniteRingHandle& R = summands[0].ring();
  IntVec orders;
  for (const auto& M : summands) {
    if (M.ring() != R) throw Error("direct_sum: modules over different rings");
    orders.insert(orders.end(), M.orders().begin(), M.orders().end());
  }
  std::vector<IntMatrix> acts;
  for (std::size_t g = 0; g < R->generator_count(); ++g) {
    IntMatrix A(orders.size(), orders.size());
    std::size_t off = 0;
    for (const auto& M : summands) {
      const IntMatrix& G = M.generator_action(g);
      for (std::size_t i = 0; i < M.rank(); ++i) {
        for (std::size_t j = 0; j < M.rank(); ++j) A(off + i, off + j) = G(i, j);
      }
      off += M.rank();
    }
    acts.push_back(A);
  }
  return FiniteModule(R, orders, acts);
}

FiniteModule normalize(const FiniteModule& M) {
  std::vector<IntVec> all;
  for (std::size_t i = 0; i < M.rank(); ++i) all.push_back(unit_vector(M.rank(), i));
  return Subquotient(M, all, {}).module();
}

Subquotient::Subquotient(const FiniteModule& ambient, std::vector<IntVec> t_gens, std::vector<IntVec> s_gens)
    : ambient_(ambient), t_gens_(std::move(t_gens)) {
  const std::size_t m = ambient.rank();
  const std::size_t a = t_gens_.size();
  for (auto& t : t_gens_) t = ambient.reduce(t);
  IntMatrix X = IntMatrix::from_columns(m, t_gens_);
  for (auto& s : s_gens) s = ambient.reduce(s);
  X = X.hconcat(IntMatrix::from_columns(m, s_gens)).hconcat(IntMatrix::diagonal(ambient.orders()));
  echelon_ = column_echelon(X);
  const FiniteRingHandle& R = ambient.ring();
  if (a == 0) {
    to_quotient_ = IntMatrix(0, 0);
    lifts_ = IntMatrix(m, 0);
    module_ = FiniteModule::zero(R);
    return;
  }
  std::vector<IntVec> rel;
  for (const auto& k : echelon_.kernel()) {
    IntVec w(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a));
    if (std::any_of(w.begin(), w.end(), [](Int v) { return v != 0; })) rel.push_back(w);
  }
  SmithForm sf = smith_form(IntMatrix::from_columns(a, rel));
  std::vector<std::size_t> keep;
  IntVec orders;
  for (std::size_t i = 0; i < a; ++i) {
    const Int d = i < sf.diagonal.size() ? sf.diagonal[i] : 0;
    if (d == 0) throw Error("subquotient is not finite");
    if (d != 1) {
      keep.push_back(i);
      orders.push_back(d);
    }
  }
  to_quotient_ = IntMatrix(keep.size(), a);
  const IntMatrix T = IntMatrix::from_columns(m, t_gens_);
  std::vector<IntVec> lift_cols;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t j = 0; j < a; ++j) to_quotient_(k, j) = sf.U(keep[k], j);
    lift_cols.push_back(ambient.reduce(T.apply(sf.U_inverse.column(keep[k]))));
  }
  lifts_ = IntMatrix::from_columns(m, lift_cols);
  // Provisional module so coordinates() can reduce; actions filled below.
  std::vector<IntMatrix> acts;
  for (std::size_t g = 0; g < R->generator_count(); ++g) {
    IntMatrix A(keep.size(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const IntVec img = ambient.reduce(ambient.generator_action(g).apply(lift_cols[k]));
      auto sol = echelon_.solve(img);
      if (!sol) throw Error("subquotient: T is not closed under the ring action");
      IntVec w(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(a));
      const IntVec q = to_quotient_.apply(w);
      for (std::size_t i = 0; i < keep.size(); ++i) A(i, k) = mod(q[i], orders[i]);
    }
    acts.push_back(A);
  }
  module_ = FiniteModule(R, orders, acts);
}

IntVec Subquotient::coordinates(const IntVec& x) const {
  auto sol = echelon_.solve(ambient_.reduce(x));
  if (!sol) throw Error("element is not in the subgroup T");
  IntVec w(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(t_gens_.size()));
  if (module_->rank() == 0) return {};
  return module_->reduce(to_quotient_.apply(w));
}

IntVec Subquotient::lift(const IntVec& q) const { return ambient_.reduce(lifts_.apply(module_->reduce(q))); }

bool is_homomorphism(const FiniteModule& M, const FiniteModule& N, const IntMatrix& F) {
  if (F.rows() != N.rank() || F.cols() != M.rank()) return false;
  for (std::size_t j = 0; j < M.rank(); ++j) {
    IntVec col = F.column(j);
    for (auto& v : col) v = checked_mul(v, M.orders()[j]);
    if (!N.is_zero_element(col)) return false;
  }
  for (std::size_t g = 0; g < M.ring()->generator_count(); ++g) {
    for (std::size_t j = 0; j < M.rank(); ++j) {
      const IntVec x = unit_vector(M.rank(), j);
      const IntVec lhs = N.reduce(F.apply(M.reduce(M.generator_action(g).apply(x))));
      const IntVec rhs = N.reduce(N.generator_action(g).apply(N.reduce(F.apply(x))));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<IntVec> kernel_generators(const FiniteModule& M, const FiniteModule& N, const IntMatrix& F) {
  const std::size_t m = M.rank();
  if (N.rank() == 0) {
    std::vector<IntVec> all;
    for (std::size_t i = 0; i < m; ++i) all.push_back(unit_vector(m, i));
    return all;
  }
  ColumnEchelon ce = column_echelon(F.hconcat(IntMatrix::diagonal(N.orders())));
  std::vector<IntVec> out;
  for (const auto& k : ce.kernel()) {
    IntVec x = M.reduce(IntVec(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m)));
    if (!M.is_zero_element(x)) out.push_back(x);
  }
  return out;
}

std::vector<IntVec> elements(const FiniteModule& M, std::uint64_t limit) {
  if (M.size() > limit) throw CapabilityError("module too large to enumerate: " + std::to_string(M.size()));
  std::vector<IntVec> out;
  out.reserve(M.size());
  for (std::uint64_t c = 0; c < M.size(); ++c) out.push_back(M.element(c));
  return out;
}

namespace {

// Cardinality of the kernel of multiplication by r.
std::uint64_t kernel_size(const FiniteModule& M, Elem r) {
  auto gens = kernel_generators(M, M, M.action(r));
  return Subquotient(M, gens, {}).module().size();
}

struct Tables {
  std::vector<std::vector<std::uint32_t>> act;  // [r][x]
  std::vector<std::vector<std::uint32_t>> add;  // [x][y]
};

Tables tables_of(const FiniteModule& M) {
  const auto els = elements(M);
  const std::size_t n = els.size();
  const std::size_t nr = M.ring()->size();
  Tables t;
  t.act.assign(nr, std::vector<std::uint32_t>(n));
  t.add.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t x = 0; x < n; ++x) t.act[r][x] = static_cast<std::uint32_t>(M.code(M.act(static_cast<Elem>(r), els[x])));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t.add[x][y] = static_cast<std::uint32_t>(M.code(M.add(els[x], els[y])));
  }
  return t;
}

std::vector<bool> annihilator(const Tables& t, std::uint32_t x) {
  std::vector<bool> ann(t.act.size());
  for (std::size_t r = 0; r < t.act.size(); ++r) ann[r] = t.act[r][x] == 0;
  return ann;
}

}  // namespace

std::optional<bool> isomorphic(const FiniteModule& A, const FiniteModule& B, std::uint64_t search_limit) {
  if (A.ring() != B.ring()) throw Error("isomorphic: modules over different rings");
  if (A.size() != B.size()) return false;
  if (A.invariant_factors() != B.invariant_factors()) return false;
  if (A.size() == 1) return true;
  const FiniteRingHandle& R = A.ring();
  for (std::size_t r = 0; r < R->size(); ++r) {
    if (kernel_size(A, static_cast<Elem>(r)) != kernel_size(B, static_cast<Elem>(r))) return false;
  }
  if (A.size() > search_limit) return std::nullopt;

  const Tables ta = tables_of(A);
  const Tables tb = tables_of(B);
  const std::size_t n = static_cast<std::size_t>(A.size());
  const std::size_t nr = R->size();
  // Greedy R-generators of A, largest cyclic submodule first.
  std::vector<std::uint32_t> order(n);
  std::vector<std::size_t> cyc(n);
  for (std::size_t x = 0; x < n; ++x) {
    order[x] = static_cast<std::uint32_t>(x);
    std::vector<bool> seen(n);
    for (std::size_t r = 0; r < nr; ++r) seen[ta.act[r][x]] = true;
    cyc[x] = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
  }
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return cyc[x] > cyc[y]; });
  std::vector<std::uint32_t> gens;
  std::vector<bool> in_span(n);
  in_span[0] = true;
  std::vector<std::uint32_t> span{0};
  for (std::uint32_t g : order) {
    if (in_span[g]) continue;
    gens.push_back(g);
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : span) {
      for (std::size_t r = 0; r < nr; ++r) {
        const std::uint32_t y = ta.add[s][ta.act[r][g]];
        if (!in_span[y]) {
          in_span[y] = true;
          next.push_back(y);
        }
      }
    }
    span.insert(span.end(), next.begin(), next.end());
    if (span.size() == n) break;
  }

  std::vector<std::vector<bool>> ann_b(n);
  for (std::size_t y = 0; y < n; ++y) ann_b[y] = annihilator(tb, static_cast<std::uint32_t>(y));
  std::vector<std::int64_t> img(n, -1);
  std::vector<bool> used(n, false);
  img[0] = 0;
  used[0] = true;
  std::vector<std::uint32_t> domain{0};
  long budget = 2000000;
  bool gave_up = false;

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    const std::uint32_t g = gens[k];
    const auto ann_g = annihilator(ta, g);
    for (std::size_t h = 1; h < n; ++h) {
      if (ann_b[h] != ann_g) continue;
      if (--budget < 0) {
        gave_up = true;
        return false;
      }
      std::vector<std::uint32_t> assigned;
      bool ok = true;
      const std::size_t dsize = domain.size();
      for (std::size_t di = 0; di < dsize && ok; ++di) {
        const std::uint32_t s = domain[di];
        for (std::size_t r = 0; r < nr && ok; ++r) {
          const std::uint32_t x = ta.add[s][ta.act[r][g]];
          const std::uint32_t y = tb.add[static_cast<std::uint32_t>(img[s])][tb.act[r][h]];
          if (img[x] >= 0) {
            ok = img[x] == y;
          } else if (used[y]) {
            ok = false;
          } else {
            img[x] = y;
            used[y] = true;
            assigned.push_back(x);
            domain.push_back(x);
          }
        }
      }
      if (ok && extend(k + 1)) return true;
      for (std::uint32_t x : assigned) {
        used[static_cast<std::size_t>(img[x])] = false;
        img[x] = -1;
      }
      domain.resize(dsize);
      if (gave_up) return false;
    }
    return false;
  };
  if (extend(0)) return true;
  if (gave_up) return std::nullopt;
  return false;
}

FiniteModule matlis_dual(const FiniteModule& M) {
  const IntVec& c = M.orders();
  const std::size_t m = c.size();
  std::vector<IntMatrix> acts;
  for (std::size_t g = 0; g < M.ring()->generator_count(); ++g) {
    const IntMatrix& G = M.generator_action(g);
    IntMatrix D(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Int num = checked_mul(c[j], G(i, j));
        if (num % c[i] != 0) throw Error("matlis_dual: action matrix is not a group endomorphism");
        D(j, i) = num / c[i];
      }
    }
    acts.push_back(D);
  }
  return FiniteModule(M.ring(), c, acts);
}

std::vector<FiniteModule> enumerate_modules(const FiniteRingHandle& R, std::uint64_t size_bound) {
  if (!R->is_structured()) {
    throw CapabilityError("module enumeration needs a structured ring (Z/n, F_p[x]/x^k, or products)");
  }
  struct Piece {
    FiniteModule module;
    std::uint64_t size;
  };
  std::vector<Piece> pieces;
  for (const auto& J : enumerate_ideals(R)) {
    const auto locus = J.zero_locus();
    if (std::count(locus.begin(), locus.end(), true) != 1) continue;
    FiniteModule C = FiniteModule::cyclic(J);
    pieces.push_back({C, C.size()});
  }
  struct Entry {
    std::uint64_t size;
    std::vector<std::size_t> parts;
  };
  std::vector<Entry> entries;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t size) {
    entries.push_back({size, cur});
    for (std::size_t i = start; i < pieces.size(); ++i) {
      if (size * pieces[i].size > size_bound) continue;
      cur.push_back(i);
      rec(i, size * pieces[i].size);
      cur.pop_back();
    }
  };
  rec(0, 1);
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.parts < b.parts;
  });
  std::vector<FiniteModule> out;
  for (const auto& e : entries) {
    if (e.parts.empty()) {
      out.push_back(FiniteModule::zero(R));
      continue;
    }
    std::vector<FiniteModule> sum;
    for (std::size_t i : e.parts) sum.push_back(pieces[i].module);
    out.push_back(normalize(direct_sum(sum)));
  }
  return out;
}

FiniteModule parse_finite_module(const FiniteRingHandle& R, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.empty()) throw ParseError("empty module literal", 0);
  std::vector<FiniteModule> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '(' || s[i] == '[')) ++depth;
    if (i < s.size() && (s[i] == ')' || s[i] == ']')) --depth;
    if (i < s.size() && !(s[i] == '+' && depth == 0)) continue;
    const std::string t = s.substr(start, i - start);
    const std::size_t base = start;
    start = i + 1;
    if (t == "0") continue;
    if (t == "R") {
      terms.push_back(FiniteModule::regular(R));
    } else if (t.rfind("R^", 0) == 0) {
      std::size_t k = 0;
      for (std::size_t j = 2; j < t.size(); ++j) {
        if (t[j] < '0' || t[j] > '9') throw ParseError("expected R^k", base + j);
        k = k * 10 + static_cast<std::size_t>(t[j] - '0');
      }
      if (t.size() == 2 || k > 16) throw ParseError("expected R^k with 0 <= k <= 16", base);
      for (std::size_t j = 0; j < k; ++j) terms.push_back(FiniteModule::regular(R));
    } else if (t.rfind("R/", 0) == 0) {
      try {
        terms.push_back(FiniteModule::cyclic(parse_finite_ideal(R, t.substr(2))));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in module term: ") + e.what(), base + 2 + e.position());
      }
    } else if (t.rfind("Z/", 0) == 0) {
      std::size_t j = 2;
      Int d = 0;
      while (j < t.size() && t[j] >= '0' && t[j] <= '9') d = d * 10 + (t[j++] - '0');
      if (j == 2 || j != t.size()) throw ParseError("expected Z/d", base);
      terms.push_back(FiniteModule::cyclic(FiniteIdeal::generated(R, {R->from_int(d)})));
    } else {
      throw ParseError("expected 0, R, R^k, R/(ideal) or Z/d", base);
    }
  }
  if (terms.empty()) return FiniteModule::zero(R);
  return normalize(direct_sum(terms));
}

}  // namespace koszulkit::finite
