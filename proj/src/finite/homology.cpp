#include "koszulkit/finite/homology.hpp"

#include <algorithm>

#include "koszulkit/error.hpp"

namespace koszulkit::finite {

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 21;

FiniteModule power(const FiniteModule& M, std::size_t k) {
  if (k == 0 || M.rank() == 0) return FiniteModule::zero(M.ring());
  return direct_sum(std::vector<FiniteModule>(k, M));
}

// Block matrix whose (p, q) block is sign * (action of entry), for entries given by `entry`.
template <typename F>
IntMatrix block_matrix(const FiniteModule& M, std::size_t row_blocks, std::size_t col_blocks, F entry) {
  const std::size_t m = M.rank();
  IntMatrix B(m * row_blocks, m * col_blocks);
  if (m == 0) return B;
  for (std::size_t p = 0; p < row_blocks; ++p) {
    for (std::size_t q = 0; q < col_blocks; ++q) {
      auto [e, sign] = entry(p, q);
      if (sign == 0 || e == M.ring()->zero()) continue;
      const IntMatrix& A = M.action(e);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) B(p * m + i, q * m + j) = sign * A(i, j);
      }
    }
  }
  return B;
}

// ker(d_out) / im(d_in) inside C.
FiniteModule homology_at(const FiniteModule& C, const FiniteModule& target, const IntMatrix& d_out,
                         const IntMatrix& d_in) {
  if (C.rank() == 0) return FiniteModule::zero(C.ring());
  std::vector<IntVec> ker;
  if (target.rank() == 0) {
    for (std::size_t i = 0; i < C.rank(); ++i) {
      IntVec v(C.rank(), 0);
      v[i] = 1;
      ker.push_back(v);
    }
  } else {
    ker = kernel_generators(C, target, d_out);
  }
  std::vector<IntVec> img;
  for (std::size_t j = 0; j < d_in.cols(); ++j) img.push_back(d_in.column(j));
  return Subquotient(C, ker, img).module();
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Koszul differential K_i -> K_{i-1} as (target index, generator position, sign) per source subset.
struct KoszulBlock {
  std::size_t row;
  std::size_t col;
  std::size_t gen;
  Int sign;
};

std::vector<KoszulBlock> koszul_blocks(std::size_t n, std::size_t i) {
  std::vector<KoszulBlock> out;
  if (i == 0 || i > n) return out;
  const auto src = subsets(n, i);
  const auto dst = subsets(n, i - 1);
  for (std::size_t q = 0; q < src.size(); ++q) {
    for (std::size_t pos = 0; pos < src[q].size(); ++pos) {
      auto T = src[q];
      T.erase(T.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t p = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), T) - dst.begin());
      out.push_back({p, q, src[q][pos], pos % 2 == 0 ? Int{1} : Int{-1}});
    }
  }
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntMatrix koszul_matrix(const std::vector<Elem>& a, const FiniteModule& M, std::size_t i, bool transpose) {
  const std::size_t n = a.size();
  const std::size_t m = M.rank();
  const std::size_t rows = binom(n, i - 1), cols = binom(n, i);
  IntMatrix B = transpose ? IntMatrix(m * cols, m * rows) : IntMatrix(m * rows, m * cols);
  for (const auto& b : koszul_blocks(n, i)) {
    const IntMatrix& A = M.action(a[b.gen]);
    const std::size_t r0 = (transpose ? b.col : b.row) * m;
    const std::size_t c0 = (transpose ? b.row : b.col) * m;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) B(r0 + x, c0 + y) = b.sign * A(x, y);
    }
  }
  return B;
}

struct FreeCoder {
  std::size_t base;
  std::size_t k;

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < k; ++i) t *= base;
    return t;
  }
  std::vector<Elem> decode(std::uint64_t c) const {
    std::vector<Elem> v(k);
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = static_cast<Elem>(c % base);
      c /= base;
    }
    return v;
  }
  std::uint64_t encode(const std::vector<Elem>& v) const {
    std::uint64_t c = 0;
    for (std::size_t i = k; i-- > 0;) c = c * base + v[i];
    return c;
  }
};

// Minimal generating set of a submodule K, given by the codes of its elements in
// a group whose elements are coded by 0..total-1 (code 0 is zero). On each local
// factor e_j K, elements are picked outside (chosen span + m_j e_j K), so their
// images form a basis of e_j K / m_j e_j K (Nakayama). The i-th generators of all
// factors are then added together; the count is max_j mu(e_j K).
template <typename Act, typename Add>
std::vector<std::uint64_t> minimal_generators(const FiniteRing& R, std::uint64_t total,
                                              const std::vector<std::uint64_t>& members, Act act, Add add) {
  const std::size_t n = R.size();
  // Smallest submodule containing `seed` and the set already marked in `in`.
  auto close = [&](std::vector<bool>& in, std::vector<std::uint64_t>& list, const std::vector<std::uint64_t>& seeds) {
    std::vector<std::uint64_t> frontier;
    for (std::uint64_t c : seeds) {
      if (!in[c]) {
        in[c] = true;
        list.push_back(c);
        frontier.push_back(c);
      }
    }
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t f : frontier) {
        for (std::size_t k = 0; k < list.size(); ++k) {
          const std::uint64_t y = add(list[k], f);
          if (!in[y]) {
            in[y] = true;
            list.push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
  };

  std::vector<std::vector<std::uint64_t>> per_factor;
  for (Elem e : R.primitive_idempotents()) {
    std::vector<bool> in_factor(total, false);
    std::vector<std::uint64_t> factor;
    for (std::uint64_t c : members) {
      const std::uint64_t y = act(e, c);
      if (!in_factor[y]) {
        in_factor[y] = true;
        factor.push_back(y);
      }
    }
    std::sort(factor.begin(), factor.end());
    // m_j = { r : r e_j is not a unit of e_j R }.
    std::vector<Elem> maximal;
    for (std::size_t r = 0; r < n; ++r) {
      const Elem re = R.mul(static_cast<Elem>(r), e);
      bool unit = false;
      for (std::size_t t = 0; t < n && !unit; ++t) unit = R.mul(static_cast<Elem>(t), re) == e;
      if (!unit) maximal.push_back(static_cast<Elem>(r));
    }
    std::vector<bool> in(total, false);
    in[0] = true;
    std::vector<std::uint64_t> span{0};
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t c : factor)
      for (Elem r : maximal) seeds.push_back(act(r, c));
    close(in, span, seeds);
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t c : factor) {
      if (in[c]) continue;
      chosen.push_back(c);
      std::vector<std::uint64_t> orbit;
      for (std::size_t r = 0; r < n; ++r) orbit.push_back(act(static_cast<Elem>(r), c));
      close(in, span, orbit);
    }
    per_factor.push_back(std::move(chosen));
  }
  std::size_t count = 0;
  for (const auto& f : per_factor) count = std::max(count, f.size());
  std::vector<std::uint64_t> gens(count, 0);
  for (const auto& f : per_factor)
    for (std::size_t i = 0; i < f.size(); ++i) gens[i] = add(gens[i], f[i]);
  return gens;
}

std::vector<std::vector<Elem>> submodule_generators(const FiniteRing& R, const FreeCoder& fc,
                                                    const std::vector<std::uint64_t>& members) {
  auto act = [&](Elem r, std::uint64_t c) {
    auto x = fc.decode(c);
    for (auto& v : x) v = R.mul(r, v);
    return fc.encode(x);
  };
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    auto x = fc.decode(a);
    const auto y = fc.decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = R.add(x[i], y[i]);
    return fc.encode(x);
  };
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t c : minimal_generators(R, fc.total(), members, act, add)) out.push_back(fc.decode(c));
  return out;
}

FreeCoder coder(const FiniteRing& R, std::size_t k) {
  FreeCoder fc{R.size(), k};
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < k; ++i) {
    t *= R.size();
    if (t > kMaxEnumeration) throw CapabilityError("free module R^" + std::to_string(k) + " is too large to enumerate");
  }
  return fc;
}

}  // namespace

std::size_t FiniteResolution::rank(int i) const {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) < ranks.size()) return ranks[static_cast<std::size_t>(i)];
  if (finite) return 0;
  throw ResolutionBoundExceeded(i, static_cast<int>(ranks.size()) - 2);
}

RingMatrix FiniteResolution::differential(int i) const {
  if (i >= 0 && static_cast<std::size_t>(i) < differentials.size()) return differentials[static_cast<std::size_t>(i)];
  if (i < 0 || finite) {
    RingMatrix z;
    z.rows = rank(i);
    z.cols = rank(i + 1);
    z.entries.assign(z.rows * z.cols, module.ring()->zero());
    return z;
  }
  throw ResolutionBoundExceeded(i + 1, static_cast<int>(ranks.size()) - 2);
}

FiniteResolution resolve(const FiniteModule& N, int length) {
  const FiniteRingHandle& Rh = N.ring();
  const FiniteRing& R = *Rh;
  FiniteResolution res{N, {}, {}, false};
  if (N.is_zero()) {
    res.ranks = {0};
    res.finite = true;
    return res;
  }
  const auto els = elements(N, kMaxEnumeration);
  std::vector<std::uint64_t> all(els.size());
  for (std::uint64_t c = 0; c < all.size(); ++c) all[c] = c;
  std::vector<IntVec> gens;
  for (std::uint64_t c : minimal_generators(
           R, els.size(), all, [&](Elem r, std::uint64_t x) { return N.code(N.act(r, els[x])); },
           [&](std::uint64_t x, std::uint64_t y) { return N.code(N.add(els[x], els[y])); }))
    gens.push_back(els[c]);
  res.ranks.push_back(gens.size());

  // Kernel of the augmentation R^k0 -> N.
  FreeCoder fc = coder(R, gens.size());
  std::vector<std::uint64_t> kernel;
  for (std::uint64_t c = 0; c < fc.total(); ++c) {
    const auto x = fc.decode(c);
    IntVec s(N.rank(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) s = N.add(s, N.act(x[j], gens[j]));
    if (N.is_zero_element(s)) kernel.push_back(c);
  }
  for (int level = 1; level <= length + 1; ++level) {
    if (kernel.size() == 1) {
      res.finite = true;
      return res;
    }
    const auto kg = submodule_generators(R, fc, kernel);
    RingMatrix D;
    D.rows = fc.k;
    D.cols = kg.size();
    D.entries.assign(D.rows * D.cols, R.zero());
    for (std::size_t q = 0; q < kg.size(); ++q) {
      for (std::size_t p = 0; p < fc.k; ++p) D.entries[p * D.cols + q] = kg[q][p];
    }
    res.differentials.push_back(D);
    res.ranks.push_back(kg.size());
    if (level == length + 1) break;
    fc = coder(R, kg.size());
    kernel.clear();
    for (std::uint64_t c = 0; c < fc.total(); ++c) {
      const auto x = fc.decode(c);
      bool zero = true;
      for (std::size_t p = 0; p < D.rows && zero; ++p) {
        Elem s = R.zero();
        for (std::size_t q = 0; q < D.cols; ++q) s = R.add(s, R.mul(D.at(p, q), x[q]));
        zero = s == R.zero();
      }
      if (zero) kernel.push_back(c);
    }
  }
  return res;
}

FiniteModule koszul_homology(const std::vector<Elem>& a, const FiniteModule& M, int i) {
  const std::size_t n = a.size();
  if (i < 0 || static_cast<std::size_t>(i) > n) return FiniteModule::zero(M.ring());
  const auto ui = static_cast<std::size_t>(i);
  const FiniteModule C = power(M, binom(n, ui));
  const FiniteModule T = ui == 0 ? FiniteModule::zero(M.ring()) : power(M, binom(n, ui - 1));
  const IntMatrix d_out = ui == 0 ? IntMatrix(0, C.rank()) : koszul_matrix(a, M, ui, false);
  const IntMatrix d_in = ui == n ? IntMatrix(C.rank(), 0) : koszul_matrix(a, M, ui + 1, false);
  return homology_at(C, T, d_out, d_in);
}

FiniteModule koszul_cohomology(const std::vector<Elem>& a, const FiniteModule& M, int j) {
  const std::size_t n = a.size();
  if (j < 0 || static_cast<std::size_t>(j) > n) return FiniteModule::zero(M.ring());
  const auto uj = static_cast<std::size_t>(j);
  const FiniteModule C = power(M, binom(n, uj));
  const FiniteModule T = uj == n ? FiniteModule::zero(M.ring()) : power(M, binom(n, uj + 1));
  const IntMatrix d_out = uj == n ? IntMatrix(0, C.rank()) : koszul_matrix(a, M, uj + 1, true);
  const IntMatrix d_in = uj == 0 ? IntMatrix(C.rank(), 0) : koszul_matrix(a, M, uj, true);
  return homology_at(C, T, d_out, d_in);
}

FiniteModule tor(const FiniteResolution& F, const FiniteModule& M, int i) {
  if (i < 0) return FiniteModule::zero(M.ring());
  const FiniteModule C = power(M, F.rank(i));
  const FiniteModule T = power(M, F.rank(i - 1));
  const RingMatrix out = F.differential(i - 1);
  const RingMatrix in = F.differential(i);
  const IntMatrix d_out =
      i == 0 ? IntMatrix(0, C.rank())
             : block_matrix(M, out.rows, out.cols, [&](std::size_t p, std::size_t q) { return std::pair{out.at(p, q), Int{1}}; });
  const IntMatrix d_in =
      block_matrix(M, in.rows, in.cols, [&](std::size_t p, std::size_t q) { return std::pair{in.at(p, q), Int{1}}; });
  return homology_at(C, T, d_out, d_in);
}

FiniteModule ext(const FiniteResolution& F, const FiniteModule& M, int i) {
  if (i < 0) return FiniteModule::zero(M.ring());
  const FiniteModule C = power(M, F.rank(i));
  const FiniteModule T = power(M, F.rank(i + 1));
  const RingMatrix out = F.differential(i);     // F_{i+1} -> F_i
  const RingMatrix in = F.differential(i - 1);  // F_i -> F_{i-1}
  const IntMatrix d_out =
      block_matrix(M, out.cols, out.rows, [&](std::size_t p, std::size_t q) { return std::pair{out.at(q, p), Int{1}}; });
  const IntMatrix d_in =
      i == 0 ? IntMatrix(C.rank(), 0)
             : block_matrix(M, in.cols, in.rows, [&](std::size_t p, std::size_t q) { return std::pair{in.at(q, p), Int{1}}; });
  return homology_at(C, T, d_out, d_in);
}

FiniteModule local_cohomology(const FiniteIdeal& a, const FiniteModule& M, int i) {
  const StableIdealPower sp = stable_power(a);
  return ext(resolve(FiniteModule::cyclic(sp.stable), std::max(i, 0)), M, i);
}

FiniteModule local_homology(const FiniteIdeal& a, const FiniteModule& M, int i) {
  const StableIdealPower sp = stable_power(a);
  return tor(resolve(FiniteModule::cyclic(sp.stable), std::max(i, 0)), M, i);
}

FiniteModule brute_homology(HomologyKind kind, const std::vector<Elem>& a, const FiniteModule& M, int i) {
  const FiniteIdeal I = FiniteIdeal::generated(M.ring(), a);
  switch (kind) {
    case HomologyKind::kKoszul:
      return koszul_homology(a, M, i);
    case HomologyKind::kTor:
      return tor(resolve(FiniteModule::cyclic(I), std::max(i, 0)), M, i);
    case HomologyKind::kExt:
      return ext(resolve(FiniteModule::cyclic(I), std::max(i, 0)), M, i);
    case HomologyKind::kLocalCohomology:
      return local_cohomology(I, M, i);
    case HomologyKind::kLocalHomology:
      return local_homology(I, M, i);
  }
  throw Error("unknown homology kind");
}

FiniteModule annihilated_submodule(const FiniteIdeal& a, const FiniteModule& M) {
  if (M.rank() == 0 || a.gens().empty()) return M;
  const auto& g = a.gens();
  const FiniteModule T = power(M, g.size());
  const IntMatrix F =
      block_matrix(M, g.size(), 1, [&](std::size_t p, std::size_t) { return std::pair{g[p], Int{1}}; });
  return Subquotient(M, kernel_generators(M, T, F), {}).module();
}

FiniteModule torsion_submodule(const FiniteIdeal& a, const FiniteModule& M) {
  return annihilated_submodule(stable_power(a).stable, M);
}

FiniteModule quotient_by_ideal(const FiniteIdeal& a, const FiniteModule& M) {
  std::vector<IntVec> all, sub;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    IntVec e(M.rank(), 0);
    e[i] = 1;
    all.push_back(e);
    for (Elem g : a.gens()) sub.push_back(M.act(g, e));
  }
  return Subquotient(M, all, sub).module();
}

}  // namespace koszulkit::finite
