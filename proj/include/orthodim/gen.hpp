#pragma once

#include <random>

#include "orthodim/graph.hpp"
#include "orthodim/io.hpp"
#include "orthodim/linalg.hpp"

namespace orthodim {

// Random instance with a planted modulator X of size k whose removal leaves
// the family: Empty drops all outside-outside edges, Path wires the outside
// vertices into a path, Split partitions them into a clique plus an
// independent set, Cochordal complements a random interval graph. Everything
// else is density-driven. Deterministic per (seed, config).
struct GenConfig {
  int n = 8;
  int k = 3;
  FamilyTag family = FamilyTag::Empty;
  double density = 0.5;
  std::uint64_t seed = 1;
  bool with_subspaces = false;  // emit an l line per vertex
  int d = 3;
  FieldSpec field = FieldSpec::gf(2);
};

InstanceFile gen_random(const GenConfig& cfg);

// span of `rows` uniformly random vectors (dimension can come out lower)
Subspace<GF> random_subspace(const GF& f, int d, int rows, std::mt19937_64& rng);

}  // namespace orthodim
