#pragma once

// Reference computations for tests. Everything here works degree by degree
// with dense linear algebra over F_p and never touches a Gröbner basis.

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <vector>

#include "koszulkit/fpmod.hpp"
#include "koszulkit/parse.hpp"

namespace oracle {

using namespace koszulkit;

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t iv = inv_mod(rows[rank][col], p);
    for (auto& x : rows[rank]) x = x * iv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = (rows[r][c] + p - f * rows[rank][c] % p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  std::vector<int> e(n, 0);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline std::vector<int> key_of(const Monomial& m, std::size_t n) {
  std::vector<int> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = m[i];
  return k;
}

// dim_k M_d for graded M = coker(P) over F_p: generators minus the rank of all
// monomial multiples of relations landing in degree d.
inline long hilbert(const FPModule& M, int d) {
  const std::size_t n = M.ring()->nvars();
  const std::uint64_t p = M.ring()->field().characteristic();
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    for (const auto& m : monomials_of_degree(n, d - M.gen_degrees()[i])) {
      std::size_t k = index.size();
      index[{i, key_of(m, n)}] = k;
    }
  }
  std::vector<std::vector<std::uint64_t>> rows;
  auto degs = M.relation_degrees();
  for (std::size_t j = 0; j < M.relations().cols(); ++j) {
    const Column& c = M.relations().column(j);
    for (const auto& m : monomials_of_degree(n, d - degs[j])) {
      std::vector<std::uint64_t> row(index.size(), 0);
      bool any = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& t : c[i].terms()) {
          auto it = index.find({i, key_of(t.m * m, n)});
          if (it == index.end()) continue;
          row[it->second] = (row[it->second] + t.c.residue_value()) % p;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(index.size() - rank_mod_p(std::move(rows), p));
}

inline Poly random_homogeneous(const RingHandle& R, std::mt19937_64& rng, int deg, int terms) {
  auto mons = monomials_of_degree(R->nvars(), deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    out.push_back({mons[rng() % mons.size()], R->field().from_int(static_cast<long long>(1 + rng() % 100))});
  }
  return Poly::from_terms(R, std::move(out));
}

// Random graded module with generators in degree 0 and 1..3 relations.
inline FPModule random_graded_module(const RingHandle& R, std::mt19937_64& rng, std::size_t max_rank = 2) {
  std::size_t r = 1 + rng() % max_rank;
  std::vector<int> degs(r);
  for (auto& d : degs) d = static_cast<int>(rng() % 2);
  std::size_t c = 1 + rng() % 3;
  Matrix P(R, r, c);
  for (std::size_t j = 0; j < c; ++j) {
    int cd = 1 + *std::max_element(degs.begin(), degs.end()) + static_cast<int>(rng() % 2);
    for (std::size_t i = 0; i < r; ++i) {
      if (rng() % 3 == 0) continue;
      P.set(i, j, oracle::random_homogeneous(R, rng, cd - degs[i], 1 + static_cast<int>(rng() % 2)));
    }
  }
  return FPModule::coker(P, degs);
}

inline std::vector<long> hilbert_values(const FPModule& M, int lo, int hi) {
  std::vector<long> out;
  for (int d = lo; d <= hi; ++d) out.push_back(hilbert(M, d));
  return out;
}


// Degree-e piece of a graded module as (generator, monomial) coordinates plus
// the spanning rows of relation multiples.
struct GradedPiece {
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> relations;  // sparse rows
};

inline GradedPiece graded_piece(const FPModule& M, int e) {
  const std::size_t n = M.ring()->nvars();
  const std::uint64_t p = M.ring()->field().characteristic();
  GradedPiece out;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    for (const auto& m : monomials_of_degree(n, e - M.gen_degrees()[i])) {
      std::size_t k = out.index.size();
      out.index[{i, key_of(m, n)}] = k;
    }
  }
  auto degs = M.relation_degrees();
  for (std::size_t j = 0; j < M.relations().cols(); ++j) {
    const Column& c = M.relations().column(j);
    for (const auto& m : monomials_of_degree(n, e - degs[j])) {
      std::map<std::size_t, std::uint64_t> row;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& t : c[i].terms()) {
          auto it = out.index.find({i, key_of(t.m * m, n)});
          if (it != out.index.end()) row[it->second] = (row[it->second] + t.c.residue_value()) % p;
        }
      }
      out.relations.emplace_back(row.begin(), row.end());
    }
  }
  return out;
}

// dim_k H_i(a; M)_d from the Koszul complex written out degree by degree.
// Uses the same basis and sign convention as the library only through the
// definition d(e_S) = sum_k (-1)^k a_{s_k} e_{S - s_k}.
inline long koszul_dim(const std::vector<Poly>& a, const FPModule& M, int i, int d) {
  const std::size_t n = a.size();
  if (i < 0 || static_cast<std::size_t>(i) > n) return 0;
  const std::uint64_t p = M.ring()->field().characteristic();
  const std::size_t nv = M.ring()->nvars();
  auto subsets = [&](std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      std::vector<std::size_t> S;
      for (std::size_t s = 0; s < n; ++s) {
        if (mask >> s & 1u) S.push_back(s);
      }
      out.push_back(S);
    }
    return out;
  };
  auto deg_of = [&](const std::vector<std::size_t>& S) {
    int t = 0;
    for (auto s : S) t += a[s].degree();
    return t;
  };
  struct Space {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<GradedPiece> pieces;
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
  };
  auto space = [&](int k) {
    Space sp;
    if (k < 0 || static_cast<std::size_t>(k) > n) return sp;
    sp.sets = subsets(static_cast<std::size_t>(k));
    for (const auto& S : sp.sets) {
      sp.pieces.push_back(graded_piece(M, d - deg_of(S)));
      sp.offset.push_back(sp.dim);
      sp.dim += sp.pieces.back().index.size();
    }
    return sp;
  };
  auto relation_rows = [&](const Space& sp) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t b = 0; b < sp.sets.size(); ++b) {
      for (const auto& r : sp.pieces[b].relations) {
        std::vector<std::uint64_t> row(sp.dim, 0);
        for (auto [c, v] : r) row[sp.offset[b] + c] = v;
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };
  // Rank of the induced map on quotients A/W_A -> B/W_B.
  auto induced_rank = [&](const Space& A, const Space& B) -> std::size_t {
    if (A.dim == 0 || B.dim == 0) return 0;
    auto WB = relation_rows(B);
    std::size_t base = rank_mod_p(WB, p);
    auto rows = WB;
    for (std::size_t b = 0; b < A.sets.size(); ++b) {
      const auto& S = A.sets[b];
      for (const auto& [key, col] : A.pieces[b].index) {
        std::vector<std::uint64_t> row(B.dim, 0);
        for (std::size_t pos = 0; pos < S.size(); ++pos) {
          auto face = S;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
          std::size_t fb = static_cast<std::size_t>(std::find(B.sets.begin(), B.sets.end(), face) - B.sets.begin());
          for (const auto& t : a[S[pos]].terms()) {
            auto mono = t.m * Monomial(key.second);
            auto it = B.pieces[fb].index.find({key.first, key_of(mono, nv)});
            if (it == B.pieces[fb].index.end()) continue;
            std::uint64_t v = t.c.residue_value() % p;
            if (pos % 2 == 1) v = (p - v) % p;
            auto& slot = row[B.offset[fb] + it->second];
            slot = (slot + v) % p;
          }
        }
        rows.push_back(std::move(row));
      }
    }
    return rank_mod_p(std::move(rows), p) - base;
  };
  Space Ai = space(i), Aprev = space(i - 1), Anext = space(i + 1);
  long quotient_dim = static_cast<long>(Ai.dim - rank_mod_p(relation_rows(Ai), p));
  return quotient_dim - static_cast<long>(induced_rank(Ai, Aprev)) - static_cast<long>(induced_rank(Anext, Ai));
}

}  // namespace oracle
