#include <map>
#include <random>

#include "doctest.h"
#include "koszulkit/error.hpp"
#include "koszulkit/groebner.hpp"
#include "koszulkit/parse.hpp"

using namespace koszulkit;

namespace {

// Dense rank over F_p by Gaussian elimination.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  auto inv = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t iv = inv(rows[rank][col]);
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

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
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

// dim_k (R/I)_d for homogeneous I, by linear algebra on {m * f}: no Gröbner bases involved.
std::size_t hilbert_oracle(const IdealGens& I, int d) {
  const std::size_t n = I.ring()->nvars();
  auto mons = monomials_of_degree(n, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    std::vector<int> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = mons[k][i];
    index[key] = k;
  }
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& f : I.gens()) {
    if (f.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - f.degree())) {
      std::vector<std::uint64_t> row(mons.size(), 0);
      for (const auto& t : f.terms()) {
        Monomial mm = t.m * m;
        std::vector<int> key(n);
        for (std::size_t i = 0; i < n; ++i) key[i] = mm[i];
        row[index.at(key)] = t.c.residue_value();
      }
      rows.push_back(std::move(row));
    }
  }
  return mons.size() - rank_mod_p(std::move(rows), I.ring()->field().characteristic());
}

std::size_t hilbert_from_gb(const GroebnerBasis& gb, int d) {
  auto lead = gb.leading_monomials();
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(gb.ring()->nvars(), d)) {
    bool in = false;
    for (const auto& l : lead) in = in || l.divides(m);
    if (!in) ++count;
  }
  return count;
}

Poly random_homogeneous(const RingHandle& R, std::mt19937_64& rng, int deg, int terms) {
  auto mons = monomials_of_degree(R->nvars(), deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    out.push_back({mons[rng() % mons.size()], R->field().from_int(static_cast<long long>(rng() % 101))});
  }
  return Poly::from_terms(R, std::move(out));
}

}  // namespace

TEST_CASE("reduced basis of (x^2+y^2, xy)") {
  auto R = parse_ring("F101[x,y]");
  auto gb = buchberger(parse_ideal(R, "(x^2+y^2, x*y)"));
  auto polys = gb.polys();
  REQUIRE(polys.size() == 3);
  CHECK(polys[0] == parse_poly(R, "x*y"));
  CHECK(polys[1] == parse_poly(R, "x^2+y^2"));
  CHECK(polys[2] == parse_poly(R, "y^3"));
  CHECK(gb.normal_form(parse_poly(R, "y^3+1")) == parse_poly(R, "1"));
  CHECK(gb.normal_form(parse_poly(R, "x^3")) == parse_poly(R, "0"));
  CHECK(gb.module_basis().satisfies_buchberger_criterion());
  CHECK(krull_dim(gb) == 0);
}

TEST_CASE("syzygies of (x, y)") {
  auto R = parse_ring("QQ[x,y]");
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  auto syz = syzygies({R, 1, {{x}, {y}}});
  REQUIRE(syz.gens.size() == 1);
  CHECK(syz.gens[0][0] * x + syz.gens[0][1] * y == Poly(R));
  CHECK(((syz.gens[0][0] == -y && syz.gens[0][1] == x) || (syz.gens[0][0] == y && syz.gens[0][1] == -x)));
}

TEST_CASE("krull dimension") {
  auto R = parse_ring("F101[x,y,z]");
  CHECK(krull_dim(buchberger(parse_ideal(R, "()"))) == 3);
  CHECK(krull_dim(buchberger(parse_ideal(R, "(x*y, x*z)"))) == 2);
  CHECK(krull_dim(buchberger(parse_ideal(R, "(x, y)"))) == 1);
  CHECK(krull_dim(buchberger(parse_ideal(R, "(x^2, y^3, z)"))) == 0);
  CHECK_FALSE(krull_dim(buchberger(parse_ideal(R, "(x, x+1)"))).has_value());
  // Order independence.
  auto L = R->with_order(MonomialOrder::kLex);
  for (const char* s : {"(x*y - z^2, x^2 - y)", "(x*y*z, x+y+z)", "(x^2 - y*z)"}) {
    CHECK(krull_dim(buchberger(parse_ideal(R, s))) == krull_dim(buchberger(parse_ideal(L, s))));
  }
}

TEST_CASE("ideal operations") {
  auto R = parse_ring("F101[x,y]");
  auto I = parse_ideal(R, "(x^2*y, x*y^2)");
  CHECK(same_ideal(ideal_colon(I, parse_ideal(R, "(x)")), parse_ideal(R, "(x*y, y^2)")));
  CHECK(same_ideal(ideal_saturation(I, parse_ideal(R, "(x, y)")), parse_ideal(R, "(x*y)")));
  CHECK(same_ideal(ideal_intersection(parse_ideal(R, "(x)"), parse_ideal(R, "(y)")), parse_ideal(R, "(x*y)")));
  CHECK(same_ideal(ideal_product(parse_ideal(R, "(x, y)"), parse_ideal(R, "(x, y)")),
                   parse_ideal(R, "(x^2, x*y, y^2)")));
  CHECK(same_ideal(ideal_power(parse_ideal(R, "(x, y)"), 3), parse_ideal(R, "(x^3, x^2*y, x*y^2, y^3)")));
  CHECK(radical_membership(parse_poly(R, "x"), parse_ideal(R, "(x^3, y)")));
  CHECK(radical_membership(parse_poly(R, "x+y"), parse_ideal(R, "(x^2, y^5)")));
  CHECK_FALSE(radical_membership(parse_poly(R, "x"), parse_ideal(R, "(x*y)")));
  CHECK(same_radical(parse_ideal(R, "(x^2, x*y^3, y^4)"), parse_ideal(R, "(x, y)")));
  CHECK(same_ideal(ideal_colon(I, parse_ideal(R, "()")), parse_ideal(R, "(1)")));
}

TEST_CASE("radical membership fallback without a spare variable") {
  auto R = parse_ring("F101[a,b,c,d,e,f,g,h]");
  CHECK(radical_membership(parse_poly(R, "a+h"), parse_ideal(R, "(a^2, h^3)")));
  CHECK_FALSE(radical_membership(parse_poly(R, "a"), parse_ideal(R, "(a*b)")));
}

TEST_CASE("hilbert function of the leading ideal matches linear algebra") {
  auto R = parse_ring("F101[x,y,z]");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> gens;
    int ngens = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ngens; ++k) gens.push_back(random_homogeneous(R, rng, 1 + static_cast<int>(rng() % 3), 3));
    IdealGens I(R, gens);
    auto gb = buchberger(I);
    CHECK(gb.module_basis().satisfies_buchberger_criterion());
    for (int d = 0; d <= 5; ++d) CHECK(hilbert_from_gb(gb, d) == hilbert_oracle(I, d));
    for (const auto& g : I.gens()) CHECK(gb.contains(g));
  }
}

TEST_CASE("lift produces a membership certificate") {
  auto R = parse_ring("F101[x,y,z]");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Column> a;
    for (int j = 0; j < 3; ++j) {
      a.push_back({random_homogeneous(R, rng, 1, 2), random_homogeneous(R, rng, 2, 2)});
    }
    Column w{Poly(R), Poly(R)};
    std::vector<Poly> coeffs;
    for (int j = 0; j < 3; ++j) {
      Poly c = random_homogeneous(R, rng, 1, 2);
      w[0] += c * a[j][0];
      w[1] += c * a[j][1];
    }
    Lifter lifter(R, 2, a, {});
    auto s = lifter.lift(w);
    REQUIRE(s.has_value());
    Column back{Poly(R), Poly(R)};
    for (int j = 0; j < 3; ++j) {
      back[0] += (*s)[j] * a[j][0];
      back[1] += (*s)[j] * a[j][1];
    }
    CHECK(back[0] == w[0]);
    CHECK(back[1] == w[1]);
    // Syzygies really are relations.
    for (const auto& r : syzygies({R, 2, a}).gens) {
      Poly s0(R), s1(R);
      for (int j = 0; j < 3; ++j) {
        s0 += r[j] * a[j][0];
        s1 += r[j] * a[j][1];
      }
      CHECK(s0.is_zero());
      CHECK(s1.is_zero());
    }
  }
  Lifter one(R, 1, {{parse_poly(R, "x")}}, {});
  CHECK_FALSE(one.lift({parse_poly(R, "y")}).has_value());
}

TEST_CASE("basis is independent of generator order and redundancy") {
  auto R = parse_ring("QQ[x,y,z]");
  auto a = buchberger(parse_ideal(R, "(x*y - z^2, y^2 - x*z, x^2 - y*z)"));
  auto b = buchberger(parse_ideal(R, "(x^2 - y*z, x*y - z^2, y^2 - x*z, x^3 - x*y*z)"));
  CHECK(a.same_ideal(b));
  CHECK(krull_dim(a) == 1);
}
