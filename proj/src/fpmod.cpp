#include "koszulkit/fpmod.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

// Degree of a homogeneous column under generator shifts; nullopt if not homogeneous.
std::optional<int> column_degree(const Column& c, const std::vector<int>& degs) {
  std::optional<int> d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!c[i].is_homogeneous()) return std::nullopt;
    int e = c[i].degree() + degs[i];
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d ? d : std::optional<int>(0);
}

int column_degree_or_zero(const Column& c, const std::vector<int>& degs) {
  return column_degree(c, degs).value_or(0);
}

std::vector<int> degrees_of(const std::vector<Column>& cols, const std::vector<int>& degs) {
  std::vector<int> out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(column_degree_or_zero(c, degs));
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
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

// Leading monomials of the relation basis, grouped by component.
std::vector<std::vector<Monomial>> leading_by_component(const FPModule& M) {
  std::vector<std::vector<Monomial>> out(M.rank());
  for (const auto& v : M.relation_basis().basis()) out[v[0].comp].push_back(v[0].m);
  return out;
}

bool divisible(const std::vector<Monomial>& leads, const Monomial& m) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

}  // namespace

struct GbCache {
  std::mutex mu;
  std::shared_ptr<const ModuleGB> gb;
};

FPModule FPModule::coker(const Matrix& relations, std::vector<int> gen_degrees) {
  FPModule M;
  M.relations_ = relations;
  M.cache_ = std::make_shared<GbCache>();
  if (gen_degrees.empty() && relations.rows() > 0) {
    gen_degrees = infer_generator_degrees(relations).value_or(std::vector<int>(relations.rows(), 0));
  }
  if (gen_degrees.size() != relations.rows()) throw Error("generator degree count differs from the module rank");
  M.degrees_ = std::move(gen_degrees);
  M.graded_ = std::all_of(relations.columns().begin(), relations.columns().end(),
                          [&](const Column& c) { return column_degree(c, M.degrees_).has_value(); });
  return M;
}

FPModule FPModule::free(const RingHandle& ring, std::size_t rank, std::vector<int> gen_degrees) {
  if (gen_degrees.empty()) gen_degrees.assign(rank, 0);
  return coker(Matrix(ring, rank, 0), std::move(gen_degrees));
}

FPModule FPModule::cyclic(const IdealGens& I, int gen_degree) {
  return coker(Matrix::row(I.ring(), I.gens()), {gen_degree});
}

std::vector<int> FPModule::relation_degrees() const { return degrees_of(relations_.columns(), degrees_); }

const ModuleGB& FPModule::relation_basis() const {
  if (!cache_) throw Error("module has no presentation");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& gb_ = cache_->gb;
  if (!gb_) {
    ModuleOrder order(ring()->order());
    std::vector<Vec> vs;
    for (const auto& c : relations_.columns()) vs.push_back(to_vec(c, 0, order));
    gb_ = std::make_shared<const ModuleGB>(ModuleGB::compute(ring(), order, std::move(vs), rank() == 1));
  }
  return *gb_;
}

bool FPModule::is_zero_element(const Column& v) const {
  if (v.size() != rank()) throw Error("element length differs from the module rank");
  if (is_zero_column(v)) return true;
  const ModuleGB& gb = relation_basis();
  return gb.reduce(to_vec(v, 0, gb.order())).empty();
}

bool FPModule::is_zero() const {
  if (rank() == 0) return true;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (!is_zero_element(unit_column(ring(), rank(), i))) return false;
  }
  return true;
}

std::string FPModule::to_literal() const {
  return "module coker " + relations_.to_string() + " over R;";
}

std::optional<std::vector<int>> infer_generator_degrees(const Matrix& P) {
  const std::size_t r = P.rows(), c = P.cols();
  std::vector<std::optional<int>> gen(r), col(c);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (!P.at(i, j).is_zero() && !P.at(i, j).is_homogeneous()) return std::nullopt;
    }
  }
  std::vector<int> out(r, 0);
  for (std::size_t start = 0; start < r; ++start) {
    if (gen[start]) continue;
    gen[start] = 0;
    std::vector<std::size_t> component{start};
    std::vector<std::pair<bool, std::size_t>> stack{{true, start}};
    while (!stack.empty()) {
      auto [is_gen, idx] = stack.back();
      stack.pop_back();
      if (is_gen) {
        for (std::size_t j = 0; j < c; ++j) {
          const Poly& p = P.at(idx, j);
          if (p.is_zero()) continue;
          int want = *gen[idx] + p.degree();
          if (col[j] && *col[j] != want) return std::nullopt;
          if (!col[j]) {
            col[j] = want;
            stack.push_back({false, j});
          }
        }
      } else {
        for (std::size_t i = 0; i < r; ++i) {
          const Poly& p = P.at(i, idx);
          if (p.is_zero()) continue;
          int want = *col[idx] - p.degree();
          if (gen[i] && *gen[i] != want) return std::nullopt;
          if (!gen[i]) {
            gen[i] = want;
            component.push_back(i);
            stack.push_back({true, i});
          }
        }
      }
    }
    int lo = *gen[component[0]];
    for (std::size_t i : component) lo = std::min(lo, *gen[i]);
    for (std::size_t i : component) out[i] = *gen[i] - lo;
  }
  return out;
}

ModuleMap::ModuleMap(FPModule source, FPModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw Error("map matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.rank()) + "x" +
                std::to_string(source_.rank()));
  }
  const auto& rel = source_.relations();
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    if (!target_.is_zero_element(matrix_.apply(rel.column(j)))) {
      throw Error("map is not well defined: source relation " + std::to_string(j) +
                  " does not map into the target relations");
    }
  }
}

ModuleMap ModuleMap::trusted(FPModule source, FPModule target, Matrix matrix) {
  return ModuleMap(std::move(source), std::move(target), std::move(matrix), true);
}

ModuleMap ModuleMap::identity(const FPModule& M) {
  return trusted(M, M, Matrix::identity(M.ring(), M.rank()));
}

ModuleMap ModuleMap::zero(const FPModule& source, const FPModule& target) {
  return trusted(source, target, Matrix(source.ring(), target.rank(), source.rank()));
}

ModuleMap ModuleMap::compose_after(const ModuleMap& first) const {
  return trusted(first.source_, target_, matrix_ * first.matrix_);
}

bool ModuleMap::is_zero() const {
  for (const auto& c : matrix_.columns()) {
    if (!target_.is_zero_element(c)) return false;
  }
  return true;
}

Subquotient submodule(const FPModule& M, const std::vector<Column>& gens) {
  const RingHandle& ring = M.ring();
  auto rels = relations_modulo(ring, M.rank(), gens, M.relations().columns());
  std::vector<int> degs = degrees_of(gens, M.gen_degrees());
  FPModule sub = FPModule::coker(Matrix(ring, gens.size(), std::move(rels)), std::move(degs));
  return {sub, ModuleMap::trusted(sub, M, Matrix(ring, M.rank(), gens))};
}

Subquotient kernel(const ModuleMap& f) {
  const FPModule& S = f.source();
  auto K = relations_modulo(S.ring(), f.target().rank(), f.matrix().columns(),
                            f.target().relations().columns());
  std::vector<Column> gens;
  for (auto& k : K) {
    if (!S.is_zero_element(k)) gens.push_back(std::move(k));
  }
  return submodule(S, gens);
}

Subquotient image(const ModuleMap& f) {
  std::vector<Column> gens;
  for (const auto& c : f.matrix().columns()) {
    if (!f.target().is_zero_element(c)) gens.push_back(c);
  }
  return submodule(f.target(), gens);
}

Quotient cokernel(const ModuleMap& f) {
  const FPModule& T = f.target();
  FPModule Q = FPModule::coker(T.relations().hconcat(f.matrix()), T.gen_degrees());
  return {Q, ModuleMap::trusted(T, Q, Matrix::identity(T.ring(), T.rank()))};
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
  require_same_ring(M.ring(), N.ring());
  auto degs = M.gen_degrees();
  degs.insert(degs.end(), N.gen_degrees().begin(), N.gen_degrees().end());
  return FPModule::coker(M.relations().block_diag(N.relations()), std::move(degs));
}

FPModule direct_sum(const std::vector<FPModule>& parts, const RingHandle& ring) {
  FPModule acc = FPModule::zero(ring);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

FPModule power(const FPModule& M, std::size_t k) {
  std::vector<int> degs;
  for (std::size_t i = 0; i < k; ++i) degs.insert(degs.end(), M.gen_degrees().begin(), M.gen_degrees().end());
  return FPModule::coker(M.relations().identity_kron(k), std::move(degs));
}

Quotient quotient_by_ideal(const FPModule& M, const IdealGens& I) {
  require_same_ring(M.ring(), I.ring());
  Matrix P = M.relations();
  for (const auto& g : I.gens()) {
    for (std::size_t i = 0; i < M.rank(); ++i) {
      Column c = zero_column(M.ring(), M.rank());
      c[i] = g;
      P.append_column(std::move(c));
    }
  }
  FPModule Q = FPModule::coker(P, M.gen_degrees());
  return {Q, ModuleMap::trusted(M, Q, Matrix::identity(M.ring(), M.rank()))};
}

Pruned prune(const FPModule& M) {
  const RingHandle& ring = M.ring();
  const Field& F = ring->field();
  std::vector<Column> P = M.relations().columns();
  std::vector<int> degs = M.gen_degrees();
  std::vector<std::size_t> kept(M.rank());
  std::iota(kept.begin(), kept.end(), 0);
  // Q: current coordinates of each original generator.
  std::vector<Column> Q = Matrix::identity(ring, M.rank()).columns();

  auto eliminate_along = [&](std::vector<Column>& cols, std::size_t i, const Column& pivot,
                             const Scalar& uinv) {
    for (auto& c : cols) {
      if (c[i].is_zero()) continue;
      Poly factor = c[i].scale(uinv);
      for (std::size_t l = 0; l < c.size(); ++l) {
        if (!pivot[l].is_zero()) c[l] -= factor * pivot[l];
      }
    }
  };
  auto drop_row = [](std::vector<Column>& cols, std::size_t i) {
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
  };

  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    // Prefer the sparsest pivot column to limit fill-in.
    std::size_t best_weight = 0;
    for (std::size_t j = 0; j < P.size(); ++j) {
      for (std::size_t i = 0; i < P[j].size(); ++i) {
        if (!P[j][i].is_unit()) continue;
        std::size_t weight = 0;
        for (const auto& p : P[j]) weight += p.size();
        if (!pivot || weight < best_weight) {
          pivot = {i, j};
          best_weight = weight;
        }
        break;
      }
    }
    if (!pivot) break;
    auto [i, j] = *pivot;
    Column piv = P[j];
    Scalar uinv = F.inv(piv[i].leading_coeff());
    P.erase(P.begin() + static_cast<std::ptrdiff_t>(j));
    eliminate_along(P, i, piv, uinv);
    eliminate_along(Q, i, piv, uinv);
    drop_row(P, i);
    drop_row(Q, i);
    degs.erase(degs.begin() + static_cast<std::ptrdiff_t>(i));
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::erase_if(P, [](const Column& c) { return is_zero_column(c); });
  const std::size_t r = kept.size();
  Pruned out{FPModule::coker(Matrix(ring, r, std::move(P)), std::move(degs)), Matrix(ring, r, std::move(Q)),
             Matrix(ring, M.rank(), 0)};
  for (std::size_t k : kept) out.from_pruned.append_column(unit_column(ring, M.rank(), k));
  return out;
}

FPModule simplify(const FPModule& M) {
  Pruned p = prune(M);
  if (p.module.rank() > 0 && p.module.is_zero()) return FPModule::zero(M.ring());
  return p.module;
}

ModuleMap HomModule::as_map(const Column& element) const {
  const std::size_t rm = source.rank(), rn = target.rank();
  Matrix m(source.ring(), rn, rm);
  for (std::size_t i = 0; i < rm; ++i) {
    for (std::size_t k = 0; k < rn; ++k) m.set(k, i, element[i * rn + k]);
  }
  return ModuleMap::trusted(source, target, std::move(m));
}

HomModule hom_module(const FPModule& M, const FPModule& N) {
  require_same_ring(M.ring(), N.ring());
  const std::size_t rm = M.rank(), rn = N.rank();
  std::vector<int> src_degs, tgt_degs;
  for (std::size_t i = 0; i < rm; ++i) {
    for (std::size_t k = 0; k < rn; ++k) src_degs.push_back(N.gen_degrees()[k] - M.gen_degrees()[i]);
  }
  auto rel_degs = M.relation_degrees();
  for (std::size_t j = 0; j < M.relations().cols(); ++j) {
    for (std::size_t k = 0; k < rn; ++k) tgt_degs.push_back(N.gen_degrees()[k] - rel_degs[j]);
  }
  FPModule src = FPModule::coker(N.relations().identity_kron(rm), std::move(src_degs));
  FPModule tgt = FPModule::coker(N.relations().identity_kron(M.relations().cols()), std::move(tgt_degs));
  Matrix psi = M.relations().transpose().kron_identity(rn);
  Subquotient K = kernel(ModuleMap::trusted(src, tgt, psi));
  return {K.module, K.inclusion.matrix(), M, N};
}

Column hom_evaluate(const HomModule& H, const Column& element, const Column& m) {
  return H.as_map(element).matrix().apply(m);
}

FPModule tensor_module(const FPModule& M, const FPModule& N) {
  require_same_ring(M.ring(), N.ring());
  const std::size_t rm = M.rank(), rn = N.rank();
  std::vector<int> degs;
  for (std::size_t i = 0; i < rm; ++i) {
    for (std::size_t k = 0; k < rn; ++k) degs.push_back(M.gen_degrees()[i] + N.gen_degrees()[k]);
  }
  Matrix P = M.relations().kron_identity(rn).hconcat(N.relations().identity_kron(rm));
  return FPModule::coker(P, std::move(degs));
}

IdealGens annihilator(const FPModule& M) {
  const RingHandle& ring = M.ring();
  std::optional<IdealGens> acc;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    std::vector<Poly> gens;
    for (auto& c : relations_modulo(ring, M.rank(), {unit_column(ring, M.rank(), i)}, M.relations().columns())) {
      gens.push_back(std::move(c[0]));
    }
    IdealGens colon(ring, std::move(gens));
    acc = acc ? ideal_intersection(*acc, colon) : IdealGens(ring, buchberger(colon).polys());
  }
  if (!acc) return IdealGens(ring, {Poly::from_int(ring, 1)});
  return *acc;
}

Subquotient colon_submodule(const FPModule& M, const IdealGens& J) {
  const RingHandle& ring = M.ring();
  const std::size_t r = M.rank();
  if (J.is_zero_ideal()) return submodule(M, Matrix::identity(ring, r).columns());
  const std::size_t q = J.size();
  Matrix A(ring, 0, r);
  for (const auto& g : J.gens()) A = A.vconcat(Matrix::scalar(ring, r, g));
  auto K = relations_modulo(ring, q * r, A.columns(), M.relations().identity_kron(q).columns());
  std::vector<Column> gens;
  for (auto& k : K) {
    if (!M.is_zero_element(k)) gens.push_back(std::move(k));
  }
  return submodule(M, gens);
}

bool submodule_contains(const FPModule& M, const std::vector<Column>& big, const std::vector<Column>& small) {
  Lifter lifter(M.ring(), M.rank(), big, M.relations().columns());
  return std::all_of(small.begin(), small.end(), [&](const Column& s) { return lifter.contains(s); });
}

Subquotient torsion_submodule(const IdealGens& a, const FPModule& M) {
  Subquotient cur = colon_submodule(M, a);
  for (unsigned t = 2;; ++t) {
    Subquotient next = colon_submodule(M, ideal_power(a, t));
    if (submodule_contains(M, cur.inclusion.matrix().columns(), next.inclusion.matrix().columns())) return cur;
    cur = std::move(next);
  }
}

Subquotient ideal_times_module(const IdealGens& a, const FPModule& M) {
  std::vector<Column> gens;
  for (const auto& g : a.gens()) {
    for (std::size_t i = 0; i < M.rank(); ++i) {
      Column c = zero_column(M.ring(), M.rank());
      c[i] = g;
      if (!M.is_zero_element(c)) gens.push_back(std::move(c));
    }
  }
  return submodule(M, gens);
}

bool finite_length(const FPModule& M) {
  if (M.is_zero()) return true;
  auto d = krull_dim(buchberger(annihilator(M)));
  return !d || *d <= 0;
}

std::size_t length(const FPModule& M) {
  const std::size_t n = M.ring()->nvars();
  std::size_t total = 0;
  for (const auto& leads : leading_by_component(M)) {
    if (divisible(leads, Monomial())) continue;
    std::vector<int> box(n, -1);
    for (const auto& l : leads) {
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (l[i]) {
          ++support;
          var = i;
        }
      }
      if (support == 1 && (box[var] < 0 || l[var] < box[var])) box[var] = l[var];
    }
    if (std::any_of(box.begin(), box.end(), [](int b) { return b < 0; })) {
      throw Error("length requested for a module of infinite length");
    }
    std::vector<int> e(n, 0);
    while (true) {
      if (!divisible(leads, Monomial(e))) ++total;
      std::size_t k = 0;
      while (k < n && ++e[k] == box[k]) e[k++] = 0;
      if (k == n) break;
    }
  }
  return total;
}

long hilbert_function(const FPModule& M, int d) {
  if (!M.is_graded()) throw Error("Hilbert function requested for a non-graded module");
  auto leads = leading_by_component(M);
  long total = 0;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    for (const auto& m : monomials_of_degree(M.ring()->nvars(), d - M.gen_degrees()[i])) {
      if (!divisible(leads[i], m)) ++total;
    }
  }
  return total;
}

std::vector<long> hilbert_values(const FPModule& M, int lo, int hi) {
  std::vector<long> out;
  for (int d = lo; d <= hi; ++d) out.push_back(hilbert_function(M, d));
  return out;
}

int min_generator_degree(const FPModule& M) {
  if (M.rank() == 0) return 0;
  return *std::min_element(M.gen_degrees().begin(), M.gen_degrees().end());
}

int default_hilbert_bound(const FPModule& M) {
  int lo = min_generator_degree(M);
  int sum = 0;
  for (int d : M.relation_degrees()) sum += std::max(0, d - lo);
  return lo + std::min(sum, 24) + 4;
}

IsoProxy iso_proxy(const FPModule& A, const FPModule& B, std::optional<int> bound) {
  IsoProxy out;
  out.same_annihilator = same_ideal(annihilator(A), annihilator(B));
  out.graded = A.is_graded() && B.is_graded();
  if (out.graded) {
    int lo = std::min(min_generator_degree(A), min_generator_degree(B));
    int hi = bound.value_or(std::max(default_hilbert_bound(A), default_hilbert_bound(B)));
    out.same_hilbert = hilbert_values(A, lo, hi) == hilbert_values(B, lo, hi);
  } else {
    bool za = A.is_zero(), zb = B.is_zero();
    out.same_hilbert = za == zb;
    if (out.same_hilbert && !za) {
      bool fa = finite_length(A), fb = finite_length(B);
      out.same_hilbert = fa == fb && (!fa || length(A) == length(B));
    }
  }
  return out;
}

std::size_t FreeResolution::rank(std::size_t i) const {
  if (i == 0) return degrees.empty() ? 0 : degrees[0].size();
  if (i <= differentials.size()) return differentials[i - 1].cols();
  if (finite) return 0;
  throw ResolutionBoundExceeded(static_cast<int>(i), bound);
}

Matrix FreeResolution::differential(std::size_t i) const {
  if (i == 0) return Matrix(module.ring(), 0, rank(0));
  if (i <= differentials.size()) return differentials[i - 1];
  return Matrix(module.ring(), rank(i - 1), rank(i));
}

FreeResolution free_resolution(const FPModule& M, int L) {
  if (L < 0) throw Error("resolution bound must be nonnegative");
  const RingHandle& ring = M.ring();
  FreeResolution res;
  res.module = M;
  res.bound = L;
  Pruned p = prune(M);
  res.augmentation = p.from_pruned;
  res.degrees.push_back(p.module.gen_degrees());
  std::vector<Column> S = p.module.relations().columns();
  std::size_t prev_rank = p.module.rank();
  for (int level = 1; level <= L + 1; ++level) {
    if (S.empty()) {
      res.finite = true;
      return res;
    }
    std::vector<int> sdeg = degrees_of(S, res.degrees.back());
    auto T = relations_modulo(ring, prev_rank, S, {});
    Pruned pr = prune(FPModule::coker(Matrix(ring, S.size(), std::move(T)), sdeg));
    Matrix d = Matrix(ring, prev_rank, std::move(S)) * pr.from_pruned;
    prev_rank = d.cols();
    res.differentials.push_back(std::move(d));
    res.degrees.push_back(pr.module.gen_degrees());
    S = pr.module.relations().columns();
  }
  if (S.empty()) res.finite = true;
  return res;
}

}  // namespace koszulkit
