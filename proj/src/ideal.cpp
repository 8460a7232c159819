#include "koszulkit/ideal.hpp"

namespace koszulkit {

IdealGens::IdealGens(RingHandle ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

bool IdealGens::is_homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

int IdealGens::degree_sum() const {
  int d = 0;
  for (const auto& g : gens_) d += g.degree();
  return d;
}

std::string IdealGens::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

}  // namespace koszulkit
