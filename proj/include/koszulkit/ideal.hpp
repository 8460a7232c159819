#pragma once

#include <string>
#include <vector>

#include "koszulkit/poly.hpp"

namespace koszulkit {

// A generating sequence a_1..a_n. Zero generators are dropped, so the zero
// ideal has n = 0.
class IdealGens {
 public:
  explicit IdealGens(RingHandle ring) : ring_(std::move(ring)) {}
  IdealGens(RingHandle ring, std::vector<Poly> gens);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_homogeneous() const;
  // Sum of generator degrees.
  int degree_sum() const;

  // "(x, y^2)"
  std::string to_string() const;

 private:
  RingHandle ring_;
  std::vector<Poly> gens_;
};

}  // namespace koszulkit
