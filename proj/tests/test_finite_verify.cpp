#include <set>

#include "doctest.h"
#include "koszulkit/error.hpp"
#include "koszulkit/finite/verify.hpp"

using namespace koszulkit;
using namespace koszulkit::finite;

namespace {

std::uint64_t expected_theorem_cases(const FiniteRingHandle& R, std::uint64_t module_bound) {
  std::uint64_t per_class = 0;
  for (const FiniteIdeal& a : enumerate_ideals(R))
    for (const auto& seq : ideal_sequences(a)) per_class += seq.size() + 1;
  return per_class * enumerate_modules(R, module_bound).size();
}

const VerdictRow& row(const FiniteVerifyReport& r, const std::string& check, const std::string& pred) {
  for (const auto& v : r.rows)
    if (v.check == check && v.predicate == pred) return v;
  throw Error("missing row " + check + " " + pred);
}

}  // namespace

TEST_CASE("support classes") {
  auto Z12 = parse_finite_ring("Z/12");
  auto classes = support_classes(Z12);
  REQUIRE(classes.size() == 4);
  CHECK(classes.front().name == "zero");
  CHECK(classes.back().name == "full");
  std::set<std::string> names;
  for (const auto& c : classes) names.insert(c.name);
  CHECK(names.size() == 4);

  const FiniteModule Z3 = parse_finite_module(Z12, "Z/3");
  const FiniteModule Z4 = parse_finite_module(Z12, "Z/4");
  int admit3 = 0, admit4 = 0;
  for (const auto& c : classes) {
    admit3 += c(Z3);
    admit4 += c(Z4);
    CHECK(c(FiniteModule::zero(Z12)));
    CHECK(c(FiniteModule::regular(Z12)) == (c.name == "full"));
  }
  CHECK(admit3 == 2);
  CHECK(admit4 == 2);
  CHECK(support_classes(parse_finite_ring("Z/8")).size() == 2);
}

TEST_CASE("generator sequences") {
  auto Z8 = parse_finite_ring("Z/8");
  auto seqs = ideal_sequences(parse_finite_ideal(Z8, "(2)"));
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].size() == 1);
  CHECK(seqs[1].size() == 2);
  CHECK(seqs[1][0] != seqs[1][1]);
  auto zero = ideal_sequences(FiniteIdeal::zero(Z8));
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].empty());
  CHECK(zero[1] == std::vector<Elem>{Z8->zero()});
  for (const auto& s : seqs) CHECK(FiniteIdeal::generated(Z8, s) == parse_finite_ideal(Z8, "(2)"));
}

TEST_CASE("exhaustive verification agrees on small rings") {
  for (const char* text : {"Z/4", "Z/8", "Z/12", "F2[x]/x^3", "Z/4*F2"}) {
    CAPTURE(text);
    auto R = parse_finite_ring(text);
    VerifyOptions opt;
    opt.module_bound = 16;
    opt.threads = 2;
    const FiniteVerifyReport rep = exhaustive_verify(R, opt);
    CHECK(rep.all_agree());
    CHECK(rep.counterexamples.empty());
    CHECK(rep.degeneracy_failures == 0);
    CHECK(rep.self_duality_failures == 0);
    CHECK(rep.self_duality_unsearched == 0);
    CHECK(rep.ideals == enumerate_ideals(R).size());
    const std::size_t nc = support_classes(R).size();
    CHECK(rep.rows.size() == 5 * nc);
    const std::uint64_t expected = expected_theorem_cases(R, 16);
    for (const auto& c : support_classes(R)) {
      CHECK(row(rep, "koszul-tor-localhom", c.name).cases == expected);
      CHECK(row(rep, "koszul-ext-localcohom", c.name).cases == expected);
      CHECK(row(rep, "quotient-completion", c.name).cases == rep.ideals * rep.modules);
    }
    for (const auto& v : rep.rows) CHECK(v.cases == v.agreements);
    // The zero ideal is nilpotent, so the completion condition is exercised.
    CHECK(row(rep, "completion-condition", "full").cases > 0);
  }
}

TEST_CASE("verification is independent of thread count") {
  auto R = parse_finite_ring("Z/12");
  VerifyOptions one, four;
  one.module_bound = four.module_bound = 12;
  four.threads = 4;
  const auto a = exhaustive_verify(R, one);
  const auto b = exhaustive_verify(R, four);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].cases == b.rows[k].cases);
    CHECK(a.rows[k].agreements == b.rows[k].agreements);
  }
  CHECK(a.self_duality_checks == b.self_duality_checks);
}

TEST_CASE("table rings are refused") {
  const std::vector<std::vector<Elem>> add{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const std::vector<std::vector<Elem>> mul{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  auto R = FiniteRing::from_tables("F2xF2", add, mul, 3);
  CHECK_THROWS_AS(exhaustive_verify(R), CapabilityError);
}

TEST_CASE("duality sweep") {
  for (const char* text : {"Z/8", "Z/6", "F3[x]/x^2"}) {
    CAPTURE(text);
    auto R = parse_finite_ring(text);
    const DualityReport rep = duality_sweep(R, 27, 2);
    CHECK(rep.failures == 0);
    CHECK(rep.unsearched < rep.rows.size() / 10);
    CHECK(!rep.rows.empty());
    for (const auto& r : rep.rows) CHECK(r.dual_side == r.direct_side);
  }
}
