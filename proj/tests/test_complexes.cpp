#include "doctest.h"
#include "koszulkit/complexes.hpp"
#include "koszulkit/error.hpp"
#include "oracles.hpp"

using namespace koszulkit;

namespace {

bool iso(const FPModule& a, const FPModule& b) { return iso_proxy(a, b).ok(); }

FPModule cyc(const RingHandle& R, const char* s, int deg = 0) { return FPModule::cyclic(parse_ideal(R, s)).with_degrees({deg}); }

}  // namespace

TEST_CASE("Koszul complex shapes and signs") {
  auto R1 = parse_ring("QQ[x]");
  auto K1 = koszul_complex(parse_ideal(R1, "(x)"));
  CHECK(K1.lo() == 0);
  CHECK(K1.hi() == 1);
  CHECK(K1.differential(1).to_string() == "[x]");

  auto R = parse_ring("QQ[x,y,z]");
  auto K2 = koszul_complex(parse_ideal(R, "(x, y)"));
  CHECK(K2.rank(0) == 1);
  CHECK(K2.rank(1) == 2);
  CHECK(K2.rank(2) == 1);
  CHECK(K2.differential(1).to_string() == "[x, y]");
  CHECK(K2.differential(2).to_string() == "[-y; x]");

  auto K3 = koszul_complex(parse_ideal(R, "(x, y, z)"));
  CHECK(K3.rank(0) == 1);
  CHECK(K3.rank(1) == 3);
  CHECK(K3.rank(2) == 3);
  CHECK(K3.rank(3) == 1);

  auto K0 = koszul_complex(parse_ideal(R, "()"));
  CHECK(K0.hi() == 0);
  CHECK(K0.rank(0) == 1);
}

TEST_CASE("Koszul complex is the iterated cone") {
  auto R = parse_ring("F101[x,y]");
  auto a = parse_ideal(R, "(x)");
  ChainComplex Rdeg0(R, 0, {{0}}, {});
  ChainComplex Rdeg0_shifted(R, 0, {{1}}, {});
  ChainMap mult{Rdeg0_shifted, Rdeg0, {Matrix::scalar(R, 1, parse_poly(R, "x"))}};
  auto C = cone(mult);
  auto K = koszul_complex(a);
  CHECK(C.lo() == K.lo());
  CHECK(C.hi() == K.hi());
  CHECK(C.differential(1) == K.differential(1));
  CHECK(C.degrees(1) == K.degrees(1));
}

TEST_CASE("shift renumbers and negates") {
  auto R = parse_ring("F101[x]");
  ChainComplex C(R, 0, {{0}}, {});
  auto S = shift(C, 1);
  CHECK(S.lo() == 1);
  CHECK(S.rank(1) == 1);
  auto K = koszul_complex(parse_ideal(R, "(x)"));
  CHECK(shift(K, 1).differential(2) == -K.differential(1));
  CHECK(shift(K, 2).differential(3) == K.differential(1));
}

TEST_CASE("d squared must vanish") {
  auto R = parse_ring("F101[x]");
  Matrix a = Matrix::scalar(R, 1, parse_poly(R, "x"));
  CHECK_THROWS_AS(ChainComplex(R, 0, {{0}, {0}, {0}}, {a, a}), Error);
}

TEST_CASE("homology of complexes") {
  auto R = parse_ring("QQ[x,y]");
  auto K = koszul_complex(parse_ideal(R, "(x, y)"));
  auto T = tensor_with_module(K, FPModule::free(R, 1));
  CHECK(T.modules.size() == 3);
  CHECK(iso(homology(T, 0), cyc(R, "(x, y)")));
  CHECK(homology(T, 1).rank() == 0);
  CHECK(homology(T, 2).rank() == 0);
  auto H = hom_into_module(K, FPModule::free(R, 1));
  CHECK(H.lo == -2);
  CHECK(H.modules[0].rank() == 1);
  CHECK(H.modules[1].rank() == 2);

  auto Rx = parse_ring("QQ[x]");
  auto Kxx = koszul_complex(parse_ideal(Rx, "(x, x)"));
  auto Hxx = homology(tensor_with_module(Kxx, FPModule::free(Rx, 1)), 1);
  CHECK(iso(Hxx, cyc(Rx, "(x)", 1)));
}

TEST_CASE("Koszul homology examples") {
  auto R = parse_ring("QQ[x,y]");
  auto m = parse_ideal(R, "(x, y)");
  auto k = cyc(R, "(x, y)");
  CHECK(iso(koszul_homology(m, k, 2), cyc(R, "(x, y)", 2)));
  CHECK(iso(koszul_homology(parse_ideal(R, "(x)"), FPModule::free(R, 1), 0), cyc(R, "(x)")));
  CHECK(iso(koszul_homology(m, cyc(R, "(x)"), 1), cyc(R, "(x, y)", 1)));
  CHECK(koszul_homology(m, k, 3).rank() == 0);
  CHECK(koszul_homology(m, k, -1).rank() == 0);
  auto M = parse_module(R, "coker [x, y^2; y, 0]");
  CHECK(iso(koszul_homology(parse_ideal(R, "()"), M, 0), M));
  // Both sides agree on the pinned examples.
  CHECK(iso(koszul_homology(m, k, 2, KoszulSide::kHom), cyc(R, "(x, y)", 2)));
  CHECK(iso(koszul_homology(m, cyc(R, "(x)"), 1, KoszulSide::kHom), cyc(R, "(x, y)", 1)));
}

TEST_CASE("depth sensitivity on free modules") {
  auto R = parse_ring("F101[x,y,z]");
  auto m = parse_ideal(R, "(x, y, z)");
  auto R1 = FPModule::free(R, 1);
  auto k = FPModule::cyclic(m);
  CHECK(iso(koszul_homology(m, R1, 0), k));
  for (int i = 1; i <= 3; ++i) CHECK(koszul_homology(m, R1, i).rank() == 0);
  // Cross-check: the Koszul complex is the minimal resolution of k.
  auto res = free_resolution(k, 3);
  auto K = koszul_complex(m);
  for (int i = 0; i <= 3; ++i) CHECK(res.rank(static_cast<std::size_t>(i)) == K.rank(i));
}

TEST_CASE("Koszul homology H_n and H_0 agree with colon and quotient") {
  auto R = parse_ring("F101[x,y,z]");
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    auto M = oracle::random_graded_module(R, rng);
    std::size_t n = 1 + rng() % 3;
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(oracle::random_homogeneous(R, rng, 1 + static_cast<int>(rng() % 2), 2));
    IdealGens a(R, gens);
    auto prof = koszul_profile(a, M);
    CHECK(prof.self_dual);
    CHECK(prof.permutation_invariant);
    CHECK(iso_proxy(prof.homology[0], quotient_by_ideal(M, a).module).ok());
    // H_n = (0 :_M a), with generators shifted by the degree sum.
    auto col = simplify(colon_submodule(M, a).module);
    auto degs = col.gen_degrees();
    for (auto& d : degs) d += a.degree_sum();
    CHECK(iso_proxy(prof.homology[a.size()], col.with_degrees(degs)).ok());
    // Euler characteristic of K ⊗ M equals the alternating sum of homology Hilbert functions.
    auto T = tensor_with_module(koszul_complex(a), M);
    for (int d = 0; d <= 6; ++d) {
      long chain = 0, hom = 0;
      for (std::size_t i = 0; i < T.modules.size(); ++i) {
        long sign = i % 2 == 0 ? 1 : -1;
        chain += sign * oracle::hilbert(T.modules[i], d);
        hom += sign * oracle::hilbert(prof.homology[i], d);
      }
      CHECK(chain == hom);
    }
  }
}
