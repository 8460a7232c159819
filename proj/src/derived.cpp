#include "koszulkit/derived.hpp"

#include <algorithm>

namespace koszulkit {

int default_resolution_bound(const RingHandle& ring) { return static_cast<int>(ring->nvars()) + 2; }

ChainComplex resolution_complex(const FreeResolution& F, int top) {
  std::vector<std::vector<int>> degrees;
  std::vector<Matrix> diffs;
  for (int j = 0; j <= top; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (u < F.degrees.size()) {
      degrees.push_back(F.degrees[u]);
    } else {
      F.rank(u);  // throws past the computed range of an unfinished resolution
      degrees.emplace_back();
    }
    if (j > 0) diffs.push_back(F.differential(u));
  }
  return ChainComplex(F.module.ring(), 0, std::move(degrees), std::move(diffs));
}

namespace {

FreeResolution resolve_for(int i, const FPModule& N, std::optional<int> L) {
  if (i < 0) throw Error("homological degree must be nonnegative");
  int bound = L.value_or(std::max(i, default_resolution_bound(N.ring())));
  FreeResolution F = free_resolution(N, bound);
  if (i > bound && !F.finite) throw ResolutionBoundExceeded(i, bound);
  return F;
}

}  // namespace

std::vector<FPModule> tor_range(const FreeResolution& F, const FPModule& M, int s) {
  require_same_ring(F.module.ring(), M.ring());
  ModuleComplex T = tensor_with_module(resolution_complex(F, s + 1), M);
  std::vector<FPModule> out;
  for (int j = 0; j <= s; ++j) out.push_back(homology(T, j));
  return out;
}

std::vector<FPModule> ext_range(const FreeResolution& F, const FPModule& M, int s) {
  require_same_ring(F.module.ring(), M.ring());
  ModuleComplex H = hom_into_module(resolution_complex(F, s + 1), M);
  std::vector<FPModule> out;
  for (int j = 0; j <= s; ++j) out.push_back(homology(H, -j));
  return out;
}

FPModule tor(int i, const FPModule& N, const FPModule& M, std::optional<int> L) {
  return tor_range(resolve_for(i, N, L), M, i).back();
}

FPModule ext(int i, const FPModule& N, const FPModule& M, std::optional<int> L) {
  return ext_range(resolve_for(i, N, L), M, i).back();
}

std::vector<Matrix> comparison_lift(const FreeResolution& F, const FreeResolution& G, const Matrix& f, int top) {
  const RingHandle& ring = F.module.ring();
  std::vector<Matrix> phi;
  auto lift_all = [&](std::size_t rank, const std::vector<Column>& a, const std::vector<Column>& b,
                      const std::vector<Column>& targets) {
    Matrix out(ring, a.size(), 0);
    if (a.empty()) {
      for (const auto& w : targets) {
        if (!is_zero_column(w) && b.empty()) throw Error("comparison lift does not exist");
        out.append_column({});
      }
      return out;
    }
    Lifter lifter(ring, rank, a, b);
    for (const auto& w : targets) {
      auto s = lifter.lift(w);
      if (!s) throw Error("comparison lift does not exist");
      out.append_column(std::move(*s));
    }
    return out;
  };
  std::vector<Column> targets;
  for (const auto& c : F.augmentation.columns()) targets.push_back(f.apply(c));
  phi.push_back(lift_all(G.module.rank(), G.augmentation.columns(), G.module.relations().columns(), targets));
  for (int j = 1; j <= top; ++j) {
    const auto u = static_cast<std::size_t>(j);
    targets.clear();
    const Matrix d = F.differential(u);
    for (const auto& c : d.columns()) targets.push_back(phi.back().apply(c));
    phi.push_back(lift_all(G.rank(u - 1), G.differential(u).columns(), {}, targets));
  }
  return phi;
}

namespace {

struct Stage {
  FreeResolution F;
  HomologyData E;
};

Stage make_stage(const IdealGens& a, const FPModule& M, int i, int t) {
  FPModule N = FPModule::cyclic(ideal_power(a, static_cast<unsigned>(t)));
  FreeResolution F = free_resolution(N, i);
  HomologyData E = homology_data(hom_into_module(resolution_complex(F, i + 1), M), -i);
  return {std::move(F), std::move(E)};
}

// E_t -> E_{t+1} from a lift of R/a^{t+1} -> R/a^t.
ModuleMap transition(const Stage& from, const Stage& to, const FPModule& M, int i) {
  const RingHandle& ring = M.ring();
  auto phi = comparison_lift(to.F, from.F, Matrix::identity(ring, 1), i);
  Matrix pull = phi[static_cast<std::size_t>(i)].transpose().kron_identity(M.rank());
  std::vector<Column> images;
  for (const auto& z : from.E.representatives.columns()) images.push_back(pull.apply(z));
  return ModuleMap::trusted(from.E.module, to.E.module, to.E.classes_of(images));
}

ModuleMap restrict_to_socles(const ModuleMap& f, const Subquotient& S, const Subquotient& T) {
  const RingHandle& ring = f.source().ring();
  std::vector<Column> images;
  for (const auto& c : S.inclusion.matrix().columns()) images.push_back(f.matrix().apply(c));
  Matrix m(ring, T.module.rank(), 0);
  if (T.module.rank() == 0) {
    for (std::size_t k = 0; k < images.size(); ++k) m.append_column({});
  } else {
    Lifter lifter(ring, f.target().rank(), T.inclusion.matrix().columns(), f.target().relations().columns());
    for (const auto& w : images) {
      auto s = lifter.lift(w);
      if (!s) throw Error("transition does not preserve the socle");
      m.append_column(std::move(*s));
    }
  }
  return ModuleMap::trusted(S.module, T.module, m);
}

bool is_isomorphism(const ModuleMap& g) {
  return kernel(g).module.is_zero() && cokernel(g).module.is_zero() &&
         iso_proxy(g.source(), g.target()).ok();
}

}  // namespace

ExtTower ext_tower(const IdealGens& a, const FPModule& M, int i, int t_max) {
  require_same_ring(a.ring(), M.ring());
  if (t_max < 1) throw Error("t_max must be at least 1");
  if (i < 0) throw Error("homological degree must be nonnegative");
  ExtTower out{a, M, i, {}, {}};
  std::optional<Stage> prev;
  for (int t = 1; t <= t_max; ++t) {
    Stage cur = make_stage(a, M, i, t);
    if (prev) out.transitions.push_back(transition(*prev, cur, M, i));
    out.stages.push_back(cur.E.module);
    prev = std::move(cur);
  }
  return out;
}

ModuleMap induced_ext_map(const IdealGens& a, const FPModule& M, int i, int t) {
  require_same_ring(a.ring(), M.ring());
  if (t < 1) throw Error("tower stage must be at least 1");
  if (i < 0) throw Error("homological degree must be nonnegative");
  return transition(make_stage(a, M, i, t), make_stage(a, M, i, t + 1), M, i);
}

SocleResult local_cohomology_socle(const IdealGens& a, const FPModule& M, int i, int t_max) {
  require_same_ring(a.ring(), M.ring());
  if (i < 0) throw Error("cohomological degree must be nonnegative");
  SocleResult out;
  std::vector<Stage> stages;
  std::vector<Subquotient> socles;
  std::vector<bool> iso;
  for (int t = 1; t <= t_max; ++t) {
    stages.push_back(make_stage(a, M, i, t));
    socles.push_back(colon_submodule(stages.back().E.module, a));
    out.socles.push_back(simplify(socles.back().module));
    if (t == 1) continue;
    const std::size_t k = stages.size() - 2;
    ModuleMap f = transition(stages[k], stages[k + 1], M, i);
    iso.push_back(is_isomorphism(restrict_to_socles(f, socles[k], socles[k + 1])));
    if (iso.size() >= 2 && iso[iso.size() - 1] && iso[iso.size() - 2]) {
      out.stage = t - 2;
      out.socle = out.socles[static_cast<std::size_t>(t - 3)];
      return out;
    }
  }
  throw UnstabilizedError(t_max, out.socles);
}

}  // namespace koszulkit
