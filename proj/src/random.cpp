#include "koszulkit/random.hpp"

#include <algorithm>

namespace koszulkit {

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 >= n) {
      if (n > 0) e[n - 1] = left;
      if (n > 0 || left == 0) out.push_back(Monomial(e));
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

std::size_t draw(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Poly random_homogeneous(const RingHandle& R, Rng& rng, int degree, int max_terms) {
  auto mons = monomials_of_degree(R->nvars(), degree);
  const int terms = 1 + static_cast<int>(draw(rng, static_cast<std::size_t>(std::max(max_terms, 1))));
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    long long c = 1 + static_cast<long long>(draw(rng, 100));
    out.push_back({mons[draw(rng, mons.size())], R->field().from_int(c)});
  }
  Poly p = Poly::from_terms(R, std::move(out));
  if (p.is_zero()) p = Poly::monomial(R, mons[0], R->field().one());
  return p;
}

IdealGens random_ideal(const RingHandle& R, Rng& rng, const RandomProfile& profile) {
  const std::size_t n = 1 + draw(rng, profile.max_generators);
  std::vector<Poly> gens;
  if (draw(rng, 3) == 0) {
    std::vector<std::size_t> vars(R->nvars());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    for (std::size_t i = vars.size(); i > 1; --i) std::swap(vars[i - 1], vars[draw(rng, i)]);
    for (std::size_t i = 0; i < std::min(n, vars.size()); ++i) gens.push_back(Poly::variable(R, vars[i]));
    return IdealGens(R, gens);
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Degrees 1 and 2 dominate; degree 3 appears about one time in six.
    int d = draw(rng, 6) == 0 ? std::min(3, profile.max_generator_degree) : 1 + static_cast<int>(draw(rng, 2));
    d = std::min(d, profile.max_generator_degree);
    gens.push_back(random_homogeneous(R, rng, d, profile.max_terms));
  }
  return IdealGens(R, gens);
}

FPModule random_module(const RingHandle& R, Rng& rng, const RandomProfile& profile) {
  const std::size_t r = 1 + draw(rng, profile.max_rank);
  std::vector<int> degs(r);
  for (auto& d : degs) d = static_cast<int>(draw(rng, 2));
  const std::size_t c = 1 + draw(rng, profile.max_relations);
  const int top = *std::max_element(degs.begin(), degs.end());
  Matrix P(R, r, c);
  for (std::size_t j = 0; j < c; ++j) {
    const int cd = top + 1 + static_cast<int>(draw(rng, 2));
    bool any = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (draw(rng, 3) == 0) continue;
      P.set(i, j, random_homogeneous(R, rng, cd - degs[i], profile.max_terms));
      any = true;
    }
    if (!any) {
      const std::size_t i = draw(rng, r);
      P.set(i, j, random_homogeneous(R, rng, cd - degs[i], profile.max_terms));
    }
  }
  return FPModule::coker(P, degs);
}

Column random_element(const FPModule& B, Rng& rng, int degree, int max_terms) {
  const RingHandle& R = B.ring();
  Column v = zero_column(R, B.rank());
  bool any = false;
  for (std::size_t i = 0; i < B.rank(); ++i) {
    const int d = degree - B.gen_degrees()[i];
    if (d >= 0 && draw(rng, 4) != 0) {
      v[i] = random_homogeneous(R, rng, d, max_terms);
      any = true;
    }
  }
  if (!any) {
    for (std::size_t i = 0; i < B.rank(); ++i) {
      const int d = degree - B.gen_degrees()[i];
      if (d >= 0) {
        v[i] = random_homogeneous(R, rng, d, max_terms);
        break;
      }
    }
  }
  return v;
}

ShortExactSequence sequence_from(const FPModule& B, const std::vector<Column>& gens) {
  Subquotient A = submodule(B, gens);
  return {A.module, B, cokernel(A.inclusion).module};
}

ShortExactSequence random_short_exact_sequence(const RingHandle& R, Rng& rng, const RandomProfile& profile) {
  FPModule B = random_module(R, rng, profile);
  const std::size_t k = 1 + draw(rng, 2);
  std::vector<Column> gens;
  for (std::size_t g = 0; g < k; ++g) gens.push_back(random_element(B, rng, 1 + static_cast<int>(draw(rng, 2)), profile.max_terms));
  return sequence_from(B, gens);
}

}  // namespace koszulkit
