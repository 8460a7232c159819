#include "koszulkit/complexes.hpp"

#include <algorithm>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

thread_local std::uint64_t g_certified = 0;

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s < n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::uint64_t certified_koszul_modules() { return g_certified; }

ChainComplex::ChainComplex(RingHandle ring, int lo, std::vector<std::vector<int>> degrees,
                           std::vector<Matrix> diffs)
    : ring_(std::move(ring)), lo_(lo), degrees_(std::move(degrees)), diffs_(std::move(diffs)) {
  if (degrees_.empty()) throw Error("complex needs at least one degree");
  if (diffs_.size() + 1 != degrees_.size()) throw Error("complex has the wrong number of differentials");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].rows() != degrees_[k].size() || diffs_[k].cols() != degrees_[k + 1].size()) {
      throw Error("differential " + std::to_string(lo_ + static_cast<int>(k) + 1) + " has the wrong shape");
    }
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    if (!(diffs_[k] * diffs_[k + 1]).is_zero()) {
      throw Error("d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(k) + 2));
    }
  }
}

std::size_t ChainComplex::rank(int i) const {
  if (i < lo_ || i > hi()) return 0;
  return degrees_[static_cast<std::size_t>(i - lo_)].size();
}

const std::vector<int>& ChainComplex::degrees(int i) const {
  static const std::vector<int> empty;
  if (i < lo_ || i > hi()) return empty;
  return degrees_[static_cast<std::size_t>(i - lo_)];
}

Matrix ChainComplex::differential(int i) const {
  if (i <= lo_ || i > hi()) return Matrix(ring_, rank(i - 1), rank(i));
  return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

std::string ChainComplex::to_string() const {
  std::string out;
  for (int i = hi(); i > lo_; --i) {
    out += "C_" + std::to_string(i) + " -> C_" + std::to_string(i - 1) + ": " + differential(i).to_string() + "\n";
  }
  if (hi() == lo_) out += "C_" + std::to_string(lo_) + " = R^" + std::to_string(rank(lo_)) + "\n";
  return out;
}

ChainComplex koszul_complex(const IdealGens& a) {
  const RingHandle& ring = a.ring();
  const std::size_t n = a.size();
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  std::vector<std::vector<int>> degrees;
  for (std::size_t k = 0; k <= n; ++k) {
    bases.push_back(subsets_of_size(n, k));
    std::vector<int> degs;
    for (const auto& S : bases.back()) {
      int d = 0;
      for (std::size_t s : S) d += std::max(a.gens()[s].degree(), 0);
      degs.push_back(d);
    }
    degrees.push_back(std::move(degs));
  }
  std::vector<Matrix> diffs;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& src = bases[k];
    const auto& tgt = bases[k - 1];
    Matrix d(ring, tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (std::size_t pos = 0; pos < k; ++pos) {
        std::vector<std::size_t> face = src[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
        std::size_t row = static_cast<std::size_t>(std::lower_bound(tgt.begin(), tgt.end(), face) - tgt.begin());
        Poly entry = a.gens()[src[j][pos]];
        d.set(row, j, pos % 2 == 0 ? entry : -entry);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(ring, 0, std::move(degrees), std::move(diffs));
}

ChainComplex shift(const ChainComplex& C, int k) {
  std::vector<std::vector<int>> degrees;
  std::vector<Matrix> diffs;
  for (int i = C.lo(); i <= C.hi(); ++i) degrees.push_back(C.degrees(i));
  for (int i = C.lo() + 1; i <= C.hi(); ++i) diffs.push_back(k % 2 == 0 ? C.differential(i) : -C.differential(i));
  return ChainComplex(C.ring(), C.lo() + k, std::move(degrees), std::move(diffs));
}

ChainComplex cone(const ChainMap& f) {
  const ChainComplex& C = f.source;
  const ChainComplex& D = f.target;
  const RingHandle& ring = C.ring();
  int lo = std::min(C.lo() + 1, D.lo());
  int hi = std::max(C.hi() + 1, D.hi());
  auto fmap = [&](int i) {
    if (i < C.lo() || i > C.hi()) return Matrix(ring, D.rank(i), C.rank(i));
    return f.components[static_cast<std::size_t>(i - C.lo())];
  };
  std::vector<std::vector<int>> degrees;
  std::vector<Matrix> diffs;
  for (int i = lo; i <= hi; ++i) {
    auto degs = C.degrees(i - 1);
    degs.insert(degs.end(), D.degrees(i).begin(), D.degrees(i).end());
    degrees.push_back(std::move(degs));
  }
  for (int i = lo + 1; i <= hi; ++i) {
    // d(c, e) = (-d_C c, f c + d_D e) from C_{i-1} + D_i to C_{i-2} + D_{i-1}.
    Matrix top = (-C.differential(i - 1)).hconcat(Matrix(ring, C.rank(i - 2), D.rank(i)));
    Matrix bottom = fmap(i - 1).hconcat(D.differential(i));
    diffs.push_back(top.vconcat(bottom));
  }
  return ChainComplex(ring, lo, std::move(degrees), std::move(diffs));
}

ModuleComplex tensor_with_module(const ChainComplex& C, const FPModule& M) {
  require_same_ring(C.ring(), M.ring());
  ModuleComplex out;
  out.lo = C.lo();
  const std::size_t r = M.rank();
  for (int i = C.lo(); i <= C.hi(); ++i) {
    std::vector<int> degs;
    for (int c : C.degrees(i)) {
      for (int m : M.gen_degrees()) degs.push_back(c + m);
    }
    out.modules.push_back(FPModule::coker(M.relations().identity_kron(C.rank(i)), std::move(degs)));
  }
  for (int i = C.lo() + 1; i <= C.hi(); ++i) out.diffs.push_back(C.differential(i).kron_identity(r));
  return out;
}

ModuleComplex hom_into_module(const ChainComplex& C, const FPModule& M) {
  require_same_ring(C.ring(), M.ring());
  ModuleComplex out;
  out.lo = -C.hi();
  const std::size_t r = M.rank();
  for (int i = C.hi(); i >= C.lo(); --i) {
    std::vector<int> degs;
    for (int c : C.degrees(i)) {
      for (int m : M.gen_degrees()) degs.push_back(m - c);
    }
    out.modules.push_back(FPModule::coker(M.relations().identity_kron(C.rank(i)), std::move(degs)));
  }
  // Degree -i -> -i-1 is precomposition with d_{i+1}.
  for (int i = C.hi() - 1; i >= C.lo(); --i) out.diffs.push_back(C.differential(i + 1).transpose().kron_identity(r));
  return out;
}

HomologyData homology_data(const ModuleComplex& C, int i) {
  if (C.modules.empty()) throw Error("homology of an empty complex");
  const RingHandle& ring = C.modules[0].ring();
  if (i < C.lo || i > C.hi()) {
    FPModule Z = FPModule::zero(ring);
    return {Z, Matrix(ring, 0, 0), Z};
  }
  const std::size_t k = static_cast<std::size_t>(i - C.lo);
  const FPModule& Ci = C.modules[k];
  std::vector<Column> cycles;
  if (i > C.lo) {
    const FPModule& prev = C.modules[k - 1];
    for (auto& z : relations_modulo(ring, prev.rank(), C.diffs[k - 1].columns(), prev.relations().columns())) {
      cycles.push_back(std::move(z));
    }
  } else {
    cycles = Matrix::identity(ring, Ci.rank()).columns();
  }
  Matrix rel = Ci.relations();
  if (i < C.hi()) rel = rel.hconcat(C.diffs[k]);
  FPModule Q = FPModule::coker(rel, Ci.gen_degrees());
  std::vector<Column> gens;
  for (auto& z : cycles) {
    if (!Q.is_zero_element(z)) gens.push_back(std::move(z));
  }
  Subquotient sub = submodule(Q, gens);
  Pruned p = prune(sub.module);
  if (p.module.rank() > 0 && p.module.is_zero()) {
    return {FPModule::zero(ring), Matrix(ring, Ci.rank(), 0), Q};
  }
  return {p.module, Matrix(ring, Ci.rank(), gens) * p.from_pruned, Q};
}

Matrix HomologyData::classes_of(const std::vector<Column>& cycles) const {
  const RingHandle& ring = ambient_quotient.ring();
  Matrix out(ring, module.rank(), 0);
  if (module.rank() == 0) {
    for (std::size_t k = 0; k < cycles.size(); ++k) out.append_column({});
    return out;
  }
  Lifter lifter(ring, ambient_quotient.rank(), representatives.columns(), ambient_quotient.relations().columns());
  for (const auto& z : cycles) {
    auto s = lifter.lift(z);
    if (!s) throw Error("element is not a cycle modulo boundaries");
    out.append_column(std::move(*s));
  }
  return out;
}

FPModule homology(const ModuleComplex& C, int i) {
  if (C.modules.empty()) return FPModule();
  return homology_data(C, i).module;
}

FPModule koszul_homology(const IdealGens& a, const FPModule& M, int i, KoszulSide side) {
  require_same_ring(a.ring(), M.ring());
  const int n = static_cast<int>(a.size());
  if (i < 0 || i > n) return FPModule::zero(M.ring());
  ChainComplex K = koszul_complex(a);
  if (side == KoszulSide::kTensor) return homology(tensor_with_module(K, M), i);
  FPModule H = homology(hom_into_module(K, M), i - n);
  int shift_by = 0;
  for (const auto& g : a.gens()) shift_by += std::max(g.degree(), 0);
  auto degs = H.gen_degrees();
  for (auto& d : degs) d += shift_by;
  return H.with_degrees(std::move(degs));
}

KoszulProfile koszul_profile(const IdealGens& a, const FPModule& M, bool certify) {
  KoszulProfile out;
  const int n = static_cast<int>(a.size());
  ChainComplex K = koszul_complex(a);
  ModuleComplex T = tensor_with_module(K, M);
  for (int i = 0; i <= n; ++i) {
    out.homology.push_back(homology(T, i));
    out.is_zero.push_back(out.homology.back().rank() == 0);
  }
  if (!certify) return out;
  out.certified = true;
  std::vector<Poly> rev(a.gens().rbegin(), a.gens().rend());
  IdealGens reversed(a.ring(), rev);
  ModuleComplex Hc = hom_into_module(K, M);
  ModuleComplex Tr = tensor_with_module(koszul_complex(reversed), M);
  int shift_by = 0;
  for (const auto& g : a.gens()) shift_by += std::max(g.degree(), 0);
  for (int i = 0; i <= n; ++i) {
    FPModule hom_side = homology(Hc, i - n);
    auto degs = hom_side.gen_degrees();
    for (auto& d : degs) d += shift_by;
    hom_side = hom_side.with_degrees(std::move(degs));
    if (!iso_proxy(out.homology[static_cast<std::size_t>(i)], hom_side).ok()) {
      out.self_dual = false;
      out.failure += "self-duality fails at H_" + std::to_string(i) + "; ";
    }
    if (!iso_proxy(out.homology[static_cast<std::size_t>(i)], homology(Tr, i)).ok()) {
      out.permutation_invariant = false;
      out.failure += "permutation invariance fails at H_" + std::to_string(i) + "; ";
    }
    ++g_certified;
  }
  return out;
}

KoszulProfile certified_koszul(const IdealGens& a, const FPModule& M) {
  KoszulProfile p = koszul_profile(a, M, true);
  if (!p.self_dual || !p.permutation_invariant) {
    throw TheoremViolation("Koszul certificate failed for " + a.to_string() + " on " + M.to_literal() + ": " +
                           p.failure);
  }
  return p;
}

}  // namespace koszulkit
