#include "koszulkit/groebner.hpp"

#include <algorithm>
#include <bit>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

thread_local std::uint64_t g_steps = 0;

// v[from..] - c * m * g[1..]; the leading terms are assumed to cancel.
Vec sub_mul(const Field& F, const ModuleOrder& ord, const Vec& v, std::size_t from,
            const Scalar& c, const Monomial& m, const Vec& g) {
  Vec out;
  out.reserve(v.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (j < g.size()) {
    Monomial gm = m * g[j].m;
    std::uint32_t gc = g[j].comp;
    while (i < v.size() && ord.cmp(v[i].m, v[i].comp, gm, gc) > 0) out.push_back(v[i++]);
    if (i < v.size() && v[i].comp == gc && v[i].m == gm) {
      Scalar s = F.sub(v[i].c, F.mul(c, g[j].c));
      if (!F.is_zero(s)) out.push_back({gm, gc, std::move(s)});
      ++i;
    } else {
      out.push_back({gm, gc, F.neg(F.mul(c, g[j].c))});
    }
    ++j;
  }
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
  return out;
}

Vec make_monic(const Field& F, Vec v) {
  if (v.empty() || F.is_one(v[0].c)) return v;
  Scalar inv = F.inv(v[0].c);
  for (auto& t : v) t.c = F.mul(t.c, inv);
  return v;
}

// Monic S-vector of two monic elements sharing a leading component.
Vec s_vector(const Field& F, const ModuleOrder& ord, const Vec& f, const Vec& g) {
  Monomial l = f[0].m.lcm(g[0].m);
  Monomial mf = f[0].m.quotient_of(l);
  Monomial mg = g[0].m.quotient_of(l);
  Vec lhs;
  lhs.reserve(f.size());
  for (std::size_t i = 1; i < f.size(); ++i) lhs.push_back({mf * f[i].m, f[i].comp, f[i].c});
  // lhs has no leading term of its own; prepend a dummy that cancels against g's.
  Vec padded;
  padded.reserve(lhs.size() + 1);
  padded.push_back({l, g[0].comp, F.one()});
  padded.insert(padded.end(), lhs.begin(), lhs.end());
  return sub_mul(F, ord, padded, 1, F.one(), mg, g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

}  // namespace

std::uint64_t reduction_steps() { return g_steps; }

Vec to_vec(const Column& col, std::uint32_t comp_offset, const ModuleOrder& order) {
  Vec v;
  for (std::size_t k = 0; k < col.size(); ++k) {
    for (const auto& t : col[k].terms()) {
      v.push_back({t.m, static_cast<std::uint32_t>(comp_offset + k), t.c});
    }
  }
  std::sort(v.begin(), v.end(), [&](const VecTerm& a, const VecTerm& b) {
    return order.cmp(a.m, a.comp, b.m, b.comp) > 0;
  });
  return v;
}

Column from_vec(const RingHandle& ring, const Vec& v, std::uint32_t offset, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + rank) continue;
    parts[t.comp - offset].push_back({t.m, t.c});
  }
  Column col;
  col.reserve(rank);
  for (auto& p : parts) col.push_back(Poly::from_sorted(ring, std::move(p)));
  return col;
}

const Vec* ModuleGB::find_reducer(const VecTerm& t) const {
  if (t.comp >= by_comp_.size()) return nullptr;
  for (std::size_t k : by_comp_[t.comp]) {
    if (basis_[k][0].m.divides(t.m)) return &basis_[k];
  }
  return nullptr;
}

Vec ModuleGB::reduce_impl(Vec v, bool upper_only) const {
  const Field& F = ring_->field();
  Vec rem;
  std::size_t pos = 0;
  while (pos < v.size()) {
    if (upper_only && !order_.in_upper_block(v[pos].comp)) break;
    const Vec* g = find_reducer(v[pos]);
    if (!g) {
      rem.push_back(std::move(v[pos]));
      ++pos;
      continue;
    }
    ++g_steps;
    Scalar c = v[pos].c;
    Monomial m = (*g)[0].m.quotient_of(v[pos].m);
    v = sub_mul(F, order_, v, pos + 1, c, m, *g);
    pos = 0;
  }
  rem.insert(rem.end(), std::make_move_iterator(v.begin() + static_cast<std::ptrdiff_t>(pos)),
             std::make_move_iterator(v.end()));
  return rem;
}

Vec ModuleGB::reduce(Vec v) const { return reduce_impl(std::move(v), false); }
Vec ModuleGB::reduce_upper(Vec v) const { return reduce_impl(std::move(v), true); }

void ModuleGB::rebuild_index() {
  by_comp_.clear();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::uint32_t c = basis_[k][0].comp;
    if (by_comp_.size() <= c) by_comp_.resize(c + 1);
    by_comp_[c].push_back(k);
  }
}

ModuleGB ModuleGB::compute(RingHandle ring, ModuleOrder order, std::vector<Vec> gens,
                           bool single_component) {
  if (order.mono() != ring->order()) throw Error("module order disagrees with the ring order");
  ModuleGB gb(ring, order);
  const Field& F = ring->field();
  std::vector<Pair> pairs;

  auto update = [&](Vec h) {
    std::size_t hi = gb.basis_.size();
    const Monomial lh = h[0].m;
    const std::uint32_t comp = h[0].comp;
    gb.basis_.push_back(std::move(h));
    if (gb.by_comp_.size() <= comp) gb.by_comp_.resize(comp + 1);
    auto& active = gb.by_comp_[comp];

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i : active) {
      const Monomial& li = gb.basis_[i][0].m;
      cands.push_back({i, li.lcm(lh), single_component && li.coprime(lh)});
    }
    std::vector<Cand> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const Cand& c = cands[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < cands.size() && keep; ++k2) {
          if (cands[k2].lcm.divides(c.lcm)) keep = false;
        }
        for (const auto& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }

    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      if (p.comp == comp && lh.divides(p.lcm)) {
        const Monomial& li = gb.basis_[p.i][0].m;
        const Monomial& lj = gb.basis_[p.j][0].m;
        if (!(li.lcm(lh) == p.lcm) && !(lj.lcm(lh) == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (const auto& c : kept) {
      if (!c.coprime) next.push_back({c.i, hi, c.lcm, comp});
    }
    pairs = std::move(next);

    std::erase_if(active, [&](std::size_t i) { return lh.divides(gb.basis_[i][0].m); });
    active.push_back(hi);
  };

  std::sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return !a.empty() < !b.empty();
    return order.cmp(a[0].m, a[0].comp, b[0].m, b[0].comp) < 0;
  });
  for (auto& g : gens) {
    Vec h = gb.reduce(std::move(g));
    if (!h.empty()) update(make_monic(F, std::move(h)));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (order.cmp(pairs[k].lcm, pairs[k].comp, pairs[best].lcm, pairs[best].comp) < 0) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    Vec h = gb.reduce(s_vector(F, order, gb.basis_[p.i], gb.basis_[p.j]));
    if (!h.empty()) update(make_monic(F, std::move(h)));
  }

  // Keep the minimal (active) elements and tail-reduce them.
  std::vector<Vec> minimal;
  for (const auto& list : gb.by_comp_) {
    for (std::size_t k : list) minimal.push_back(gb.basis_[k]);
  }
  gb.basis_ = std::move(minimal);
  gb.rebuild_index();
  std::vector<Vec> reduced;
  reduced.reserve(gb.basis_.size());
  for (const auto& g : gb.basis_) {
    Vec tail(g.begin() + 1, g.end());
    Vec r = gb.reduce(std::move(tail));
    Vec full;
    full.reserve(r.size() + 1);
    full.push_back(g[0]);
    full.insert(full.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Vec& a, const Vec& b) {
    return order.cmp(a[0].m, a[0].comp, b[0].m, b[0].comp) < 0;
  });
  gb.basis_ = std::move(reduced);
  gb.rebuild_index();
  return gb;
}

bool ModuleGB::satisfies_buchberger_criterion() const {
  const Field& F = ring_->field();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i][0].comp != basis_[j][0].comp) continue;
      if (!reduce(s_vector(F, order_, basis_[i], basis_[j])).empty()) return false;
    }
  }
  return true;
}

std::vector<Poly> GroebnerBasis::polys() const {
  std::vector<Poly> out;
  for (const auto& v : gb_.basis()) out.push_back(from_vec(ring(), v, 0, 1)[0]);
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& v : gb_.basis()) out.push_back(v[0].m);
  return out;
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  if (p.is_zero()) return Poly(ring());
  require_same_ring(ring(), p.ring());
  return from_vec(ring(), gb_.reduce(to_vec({p}, 0, gb_.order())), 0, 1)[0];
}

bool GroebnerBasis::is_unit_ideal() const {
  return !gb_.basis().empty() && gb_.basis()[0][0].m.is_one();
}

bool GroebnerBasis::same_ideal(const GroebnerBasis& o) const {
  require_same_ring(ring(), o.ring());
  return polys() == o.polys();
}

GroebnerBasis buchberger(const IdealGens& gens) {
  ModuleOrder order(gens.ring()->order());
  std::vector<Vec> vs;
  for (const auto& g : gens.gens()) vs.push_back(to_vec({g}, 0, order));
  return GroebnerBasis(gens, ModuleGB::compute(gens.ring(), order, std::move(vs), true));
}

ModuleGB buchberger(const SubmoduleGens& gens) {
  ModuleOrder order(gens.ring->order());
  std::vector<Vec> vs;
  for (const auto& g : gens.gens) {
    if (g.size() != gens.rank) throw Error("generator length differs from the module rank");
    vs.push_back(to_vec(g, 0, order));
  }
  return ModuleGB::compute(gens.ring, order, std::move(vs), gens.rank == 1);
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

namespace {

ModuleGB tracked_basis(const RingHandle& ring, std::size_t rank, const std::vector<Column>& a,
                       const std::vector<Column>& b) {
  ModuleOrder order(ring->order(), static_cast<std::uint32_t>(rank));
  const Field& F = ring->field();
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].size() != rank) throw Error("column length differs from the module rank");
    Vec v = to_vec(a[j], 0, order);
    v.push_back({Monomial(), static_cast<std::uint32_t>(rank + j), F.one()});
    vs.push_back(std::move(v));
  }
  for (const auto& col : b) {
    if (col.size() != rank) throw Error("column length differs from the module rank");
    vs.push_back(to_vec(col, 0, order));
  }
  return ModuleGB::compute(ring, order, std::move(vs));
}

}  // namespace

std::vector<Column> relations_modulo(const RingHandle& ring, std::size_t rank,
                                     const std::vector<Column>& a, const std::vector<Column>& b) {
  if (a.empty()) return {};
  ModuleGB gb = tracked_basis(ring, rank, a, b);
  std::vector<Column> out;
  for (const auto& v : gb.basis()) {
    if (v[0].comp >= rank) out.push_back(from_vec(ring, v, static_cast<std::uint32_t>(rank), a.size()));
  }
  return out;
}

SubmoduleGens syzygies(const SubmoduleGens& vectors) {
  return {vectors.ring, vectors.gens.size(),
          relations_modulo(vectors.ring, vectors.rank, vectors.gens, {})};
}

Lifter::Lifter(RingHandle ring, std::size_t rank, const std::vector<Column>& a,
               const std::vector<Column>& b)
    : ring_(ring), rank_(rank), k_(a.size()), gb_(tracked_basis(ring, rank, a, b)) {}

std::optional<Column> Lifter::lift(const Column& w) const {
  if (w.size() != rank_) throw Error("vector length differs from the module rank");
  Vec r = gb_.reduce_upper(to_vec(w, 0, gb_.order()));
  if (!r.empty() && r[0].comp < rank_) return std::nullopt;
  Column s = from_vec(ring_, r, static_cast<std::uint32_t>(rank_), k_);
  for (auto& p : s) p = -p;
  return s;
}

std::optional<int> krull_dim(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return std::nullopt;
  const std::size_t n = gb.ring()->nvars();
  std::vector<unsigned> supports;
  for (const auto& m : gb.leading_monomials()) {
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i]) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned set = 0; set < (1u << n); ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](unsigned s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

namespace {

IdealGens canonical(const RingHandle& ring, std::vector<Poly> gens) {
  return IdealGens(ring, buchberger(IdealGens(ring, std::move(gens))).polys());
}

std::vector<Column> as_columns(const IdealGens& I) {
  std::vector<Column> out;
  for (const auto& g : I.gens()) out.push_back({g});
  return out;
}

}  // namespace

IdealGens ideal_sum(const IdealGens& I, const IdealGens& J) {
  require_same_ring(I.ring(), J.ring());
  auto gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return IdealGens(I.ring(), std::move(gens));
}

IdealGens ideal_product(const IdealGens& I, const IdealGens& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Poly> gens;
  for (const auto& f : I.gens()) {
    for (const auto& g : J.gens()) gens.push_back(f * g);
  }
  return IdealGens(I.ring(), std::move(gens));
}

IdealGens ideal_power(const IdealGens& I, unsigned t) {
  const RingHandle& ring = I.ring();
  if (t == 0) return IdealGens(ring, {Poly::from_int(ring, 1)});
  // Products over multisets of generators of size t.
  std::vector<Poly> out;
  std::vector<std::size_t> idx(t, 0);
  const std::size_t n = I.size();
  if (n == 0) return IdealGens(ring);
  while (true) {
    Poly p = Poly::from_int(ring, 1);
    for (std::size_t k : idx) p = p * I.gens()[k];
    out.push_back(std::move(p));
    std::size_t pos = t;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < t; ++k) idx[k] = idx[pos - 1];
  }
  return IdealGens(ring, std::move(out));
}

IdealGens ideal_intersection(const IdealGens& I, const IdealGens& J) {
  require_same_ring(I.ring(), J.ring());
  const RingHandle& ring = I.ring();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return IdealGens(ring);
  Poly one = Poly::from_int(ring, 1);
  Poly zero(ring);
  std::vector<Column> b;
  for (const auto& f : I.gens()) b.push_back({f, zero});
  for (const auto& g : J.gens()) b.push_back({zero, g});
  std::vector<Poly> gens;
  for (auto& col : relations_modulo(ring, 2, {{one, one}}, b)) gens.push_back(std::move(col[0]));
  return canonical(ring, std::move(gens));
}

IdealGens ideal_colon(const IdealGens& I, const IdealGens& J) {
  require_same_ring(I.ring(), J.ring());
  const RingHandle& ring = I.ring();
  std::optional<IdealGens> acc;
  for (const auto& g : J.gens()) {
    std::vector<Poly> gens;
    for (auto& col : relations_modulo(ring, 1, {{g}}, as_columns(I))) gens.push_back(std::move(col[0]));
    IdealGens q(ring, std::move(gens));
    acc = acc ? ideal_intersection(*acc, q) : canonical(ring, q.gens());
  }
  if (!acc) return IdealGens(ring, {Poly::from_int(ring, 1)});
  return *acc;
}

IdealGens ideal_saturation(const IdealGens& I, const IdealGens& J) {
  IdealGens cur = canonical(I.ring(), I.gens());
  while (true) {
    IdealGens next = ideal_colon(cur, J);
    if (next.gens() == cur.gens()) return cur;
    cur = std::move(next);
  }
}

IdealGens ideal_ops(IdealOp op, const IdealGens& I, const IdealGens& J) {
  switch (op) {
    case IdealOp::kColon: return ideal_colon(I, J);
    case IdealOp::kSaturation: return ideal_saturation(I, J);
    case IdealOp::kSum: return ideal_sum(I, J);
    case IdealOp::kProduct: return ideal_product(I, J);
    case IdealOp::kIntersection: return ideal_intersection(I, J);
  }
  throw Error("unknown ideal operation");
}

bool radical_membership(const Poly& f, const IdealGens& I) {
  const RingHandle& ring = I.ring();
  if (f.is_zero()) return true;
  require_same_ring(ring, f.ring());
  if (ring->nvars() >= kMaxVars) {
    // No room for an extra variable: f is in rad(I) iff (I : f^inf) = (1).
    IdealGens sat = ideal_saturation(I, IdealGens(ring, {f}));
    return buchberger(sat).is_unit_ideal();
  }
  std::string name = "t_";
  while (std::find(ring->variables().begin(), ring->variables().end(), name) !=
         ring->variables().end()) {
    name += "_";
  }
  RingHandle big = ring->with_extra_variable(name);
  auto embed = [&](const Poly& p) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    return Poly::from_terms(big, std::move(terms));
  };
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(embed(g));
  Poly t = Poly::variable(big, ring->nvars());
  gens.push_back(Poly::from_int(big, 1) - t * embed(f));
  return buchberger(IdealGens(big, std::move(gens))).is_unit_ideal();
}

bool same_radical(const IdealGens& I, const IdealGens& J) {
  for (const auto& g : J.gens()) {
    if (!radical_membership(g, I)) return false;
  }
  for (const auto& g : I.gens()) {
    if (!radical_membership(g, J)) return false;
  }
  return true;
}

bool same_ideal(const IdealGens& I, const IdealGens& J) {
  require_same_ring(I.ring(), J.ring());
  return buchberger(I).same_ideal(buchberger(J));
}

}  // namespace koszulkit
