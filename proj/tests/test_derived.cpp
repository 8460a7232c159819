#include "doctest.h"
#include "koszulkit/derived.hpp"
#include "oracles.hpp"

using namespace koszulkit;

namespace {

FPModule cyc(const RingHandle& R, const char* s, int deg = 0) {
  return FPModule::cyclic(parse_ideal(R, s)).with_degrees({deg});
}

bool iso(const FPModule& a, const FPModule& b) { return iso_proxy(a, b).ok(); }

long dim(const FPModule& M) { return M.rank() == 0 ? 0 : static_cast<long>(length(M)); }

std::vector<Poly> variables(const RingHandle& R) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < R->nvars(); ++i) v.push_back(Poly::variable(R, i));
  return v;
}

}  // namespace

TEST_CASE("Tor examples") {
  auto R = parse_ring("QQ[x,y]");
  CHECK(iso(tor(0, cyc(R, "(x)"), cyc(R, "(y)")), cyc(R, "(x, y)")));
  CHECK(iso(tor(1, cyc(R, "(x)"), cyc(R, "(x)")), cyc(R, "(x)", 1)));
  CHECK(tor(1, cyc(R, "(x)"), FPModule::free(R, 1)).rank() == 0);
  CHECK(tor(7, cyc(R, "(x, y)"), cyc(R, "(x)")).rank() == 0);
}

TEST_CASE("Ext examples") {
  auto R = parse_ring("QQ[x,y]");
  auto R1 = FPModule::free(R, 1);
  CHECK(ext(0, cyc(R, "(x)"), R1).rank() == 0);
  CHECK(iso(ext(1, cyc(R, "(x)"), R1), cyc(R, "(x)", -1)));
  CHECK(iso(ext(2, cyc(R, "(x, y)"), R1), cyc(R, "(x, y)", -2)));
  CHECK(ext(1, cyc(R, "(x, y)"), R1).rank() == 0);
}

TEST_CASE("resolution bound is enforced") {
  auto R = parse_ring("F101[x,y,z]");
  auto k = cyc(R, "(x, y, z)");
  CHECK_THROWS_AS(tor(3, k, k, 1), ResolutionBoundExceeded);
  try {
    ext(4, k, k, 1);
    FAIL("expected ResolutionBoundExceeded");
  } catch (const ResolutionBoundExceeded& e) {
    CHECK(e.bound() == 1);
    CHECK(e.degree() == 4);
  }
  CHECK(dim(tor(3, k, k, 3)) == 1);
}

TEST_CASE("Ext towers") {
  auto Rx = parse_ring("QQ[x]");
  auto T = ext_tower(parse_ideal(Rx, "(x)"), FPModule::free(Rx, 1), 1, 4);
  REQUIRE(T.stages.size() == 4);
  REQUIRE(T.transitions.size() == 3);
  for (int t = 1; t <= 4; ++t) CHECK(dim(T.stages[static_cast<std::size_t>(t - 1)]) == t);
  for (const auto& f : T.transitions) CHECK(kernel(f).module.is_zero());

  auto T0 = ext_tower(parse_ideal(Rx, "(x)"), FPModule::free(Rx, 1), 0, 3);
  for (const auto& E : T0.stages) CHECK(E.rank() == 0);

  auto R = parse_ring("QQ[x,y]");
  auto Tm = ext_tower(parse_ideal(R, "(x, y)"), cyc(R, "(x)"), 0, 3);
  for (const auto& E : Tm.stages) CHECK(E.rank() == 0);
}

TEST_CASE("induced Ext maps") {
  auto R = parse_ring("QQ[x,y]");
  auto m = parse_ideal(R, "(x, y)");
  auto f = induced_ext_map(m, cyc(R, "(x, y)"), 0, 1);
  CHECK(dim(f.source()) == 1);
  CHECK(dim(f.target()) == 1);
  CHECK(kernel(f).module.is_zero());
  CHECK(cokernel(f).module.is_zero());

  auto Rx = parse_ring("QQ[x]");
  auto g = induced_ext_map(parse_ideal(Rx, "(x)"), FPModule::free(Rx, 1), 1, 1);
  CHECK(dim(g.source()) == 1);
  CHECK(dim(g.target()) == 2);
  CHECK(!g.is_zero());
  CHECK(kernel(g).module.is_zero());

  auto z = induced_ext_map(m, FPModule::free(R, 1), 0, 2);
  CHECK(z.source().rank() == 0);
  CHECK(z.is_zero());
}

TEST_CASE("local cohomology socles") {
  auto R = parse_ring("QQ[x,y]");
  auto m = parse_ideal(R, "(x, y)");
  auto R1 = FPModule::free(R, 1);
  auto s = local_cohomology_socle(m, R1, 2);
  CHECK(dim(s.socle) == 1);
  CHECK(s.stage >= 1);
  CHECK(iso(s.socle, ext(2, cyc(R, "(x, y)"), R1)));
  CHECK(local_cohomology_socle(m, R1, 0).socle.rank() == 0);
  CHECK(local_cohomology_socle(m, R1, 1).socle.rank() == 0);

  auto Rx = parse_ring("QQ[x]");
  auto sx = local_cohomology_socle(parse_ideal(Rx, "(x)"), FPModule::free(Rx, 1), 1);
  CHECK(dim(sx.socle) == 1);
  CHECK(iso(sx.socle, cyc(Rx, "(x)", -1)));

  try {
    local_cohomology_socle(m, R1, 2, 2);
    FAIL("expected UnstabilizedError");
  } catch (const UnstabilizedError& e) {
    CHECK(e.t_max() == 2);
    CHECK(e.socles().size() == 2);
  }
}

TEST_CASE("Tor against residue field matches the Koszul oracle") {
  auto R = parse_ring("F101[x,y,z]");
  auto vars = variables(R);
  auto k = FPModule::cyclic(IdealGens(R, vars));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto M = oracle::random_graded_module(R, rng);
    auto F = free_resolution(k, 3);
    auto T = tor_range(F, M, 3);
    for (int i = 0; i <= 3; ++i) {
      for (int d = 0; d <= 7; ++d) CHECK(oracle::hilbert(T[static_cast<std::size_t>(i)], d) == oracle::koszul_dim(vars, M, i, d));
    }
  }
}

TEST_CASE("balance and Hom comparison") {
  auto R = parse_ring("F101[x,y]");
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    auto N = oracle::random_graded_module(R, rng);
    auto M = oracle::random_graded_module(R, rng);
    for (int i = 0; i <= 2; ++i) {
      auto a = tor(i, N, M), b = tor(i, M, N);
      for (int d = -1; d <= 8; ++d) CHECK(oracle::hilbert(a, d) == oracle::hilbert(b, d));
    }
    CHECK(iso(ext(0, N, M), hom_module(N, M).module));
  }
}

TEST_CASE("long exact sequence telescopes") {
  auto R = parse_ring("F101[x,y]");
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 8; ++trial) {
    auto B = oracle::random_graded_module(R, rng);
    Column g = zero_column(R, B.rank());
    for (std::size_t i = 0; i < B.rank(); ++i) {
      int deg = 1 - B.gen_degrees()[i];
      if (deg >= 0) g[i] = oracle::random_homogeneous(R, rng, deg, 2);
    }
    auto A = submodule(B, {g}).module;
    auto C = cokernel(ModuleMap::trusted(A, B, Matrix(R, B.rank(), std::vector<Column>{g}))).module;
    auto a = IdealGens(R, {oracle::random_homogeneous(R, rng, 1, 2), oracle::random_homogeneous(R, rng, 2, 2)});
    auto F = free_resolution(FPModule::cyclic(a), 3);
    REQUIRE(F.finite);
    auto TA = tor_range(F, A, 3), TB = tor_range(F, B, 3), TC = tor_range(F, C, 3);
    for (int d = 0; d <= 8; ++d) {
      long sum = 0;
      for (std::size_t i = 0; i <= 3; ++i) {
        long s = i % 2 == 0 ? 1 : -1;
        sum += s * (oracle::hilbert(TA[i], d) - oracle::hilbert(TB[i], d) + oracle::hilbert(TC[i], d));
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("annihilator reduction for Tor, Ext and Hom") {
  auto R = parse_ring("F101[x,y]");
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    auto N = oracle::random_graded_module(R, rng);
    auto M = oracle::random_graded_module(R, rng);
    auto RN = FPModule::cyclic(annihilator(N));
    auto FN = free_resolution(N, 3), FR = free_resolution(RN, 3);
    auto t1 = tor_range(FN, M, 2), t2 = tor_range(FR, M, 2);
    auto e1 = ext_range(FN, M, 2), e2 = ext_range(FR, M, 2);
    bool tor_all = true, tor_ann = true, ext_all = true, ext_ann = true;
    for (std::size_t s = 0; s <= 2; ++s) {
      tor_all = tor_all && t1[s].rank() == 0;
      tor_ann = tor_ann && t2[s].rank() == 0;
      ext_all = ext_all && e1[s].rank() == 0;
      ext_ann = ext_ann && e2[s].rank() == 0;
      CHECK(tor_all == tor_ann);
      CHECK(ext_all == ext_ann);
    }
    bool hom_zero = simplify(hom_module(N, M).module).rank() == 0;
    bool colon_zero = simplify(colon_submodule(M, annihilator(N)).module).rank() == 0;
    CHECK(hom_zero == colon_zero);
  }
}

TEST_CASE("stabilized socle equals Ext at depth") {
  auto R = parse_ring("F101[x,y]");
  std::mt19937_64 rng(59);
  int stabilized = 0;
  for (int trial = 0; trial < 10; ++trial) {
    auto M = oracle::random_graded_module(R, rng);
    IdealGens a(R, {oracle::random_homogeneous(R, rng, 1, 2), oracle::random_homogeneous(R, rng, 1, 2)});
    auto E = ext_range(free_resolution(FPModule::cyclic(a), 3), M, 2);
    int depth = -1;
    for (int i = 0; i <= 2 && depth < 0; ++i) {
      if (E[static_cast<std::size_t>(i)].rank() != 0) depth = i;
    }
    if (depth < 0) continue;
    try {
      auto s = local_cohomology_socle(a, M, depth);
      ++stabilized;
      CHECK(iso(s.socle, E[static_cast<std::size_t>(depth)]));
    } catch (const UnstabilizedError&) {
      MESSAGE("unstabilized instance at trial " << trial);
    }
  }
  CHECK(stabilized >= 5);
}
