#pragma once

#include <cstdint>
#include <random>

#include "koszulkit/fpmod.hpp"

namespace koszulkit {

// Distribution of the seeded instance generators. Only raw mt19937_64 output
// and modular reduction are used, so draws are identical on every platform.
struct RandomProfile {
  std::size_t max_generators = 3;  // n
  int max_generator_degree = 3;
  std::size_t max_rank = 2;
  std::size_t max_relations = 4;
  int max_terms = 2;
};

using Rng = std::mt19937_64;

// Mixes a base seed and an index into an independent stream seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Poly random_homogeneous(const RingHandle& R, Rng& rng, int degree, int max_terms);
// Homogeneous generators; about a third of draws are a random subset of the variables.
IdealGens random_ideal(const RingHandle& R, Rng& rng, const RandomProfile& profile = {});
// Graded cokernel with generators in degrees 0 and 1 and homogeneous relations.
FPModule random_module(const RingHandle& R, Rng& rng, const RandomProfile& profile = {});

// Homogeneous element of R^rank(B) of the given degree (some coordinates zero).
Column random_element(const FPModule& B, Rng& rng, int degree, int max_terms = 2);

// 0 -> A -> B -> C -> 0 with A generated by one or two homogeneous elements of B.
struct ShortExactSequence {
  FPModule A;
  FPModule B;
  FPModule C;
};
ShortExactSequence random_short_exact_sequence(const RingHandle& R, Rng& rng, const RandomProfile& profile = {});
// The sequence 0 -> <gens> -> B -> B/<gens> -> 0.
ShortExactSequence sequence_from(const FPModule& B, const std::vector<Column>& gens);

}  // namespace koszulkit
