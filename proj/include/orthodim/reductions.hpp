#pragma once

#include <vector>

#include "orthodim/graph.hpp"
#include "orthodim/solver.hpp"

namespace orthodim {

// Complement of the cycle C_{2d}; x0 and x1 are cycle-adjacent, hence
// non-adjacent here. Every d-dimensional orthogonal representation assigns
// x0 and x1 orthogonal or proportional vectors (the dichotomy the coloring
// reductions lean on).
struct GadgetHandle {
  Graph graph;
  int x0 = 0;
  int x1 = 1;
  int d = 3;
};

GadgetHandle gadget_graph(int d);

enum class GadgetMode { Same, Distinct };

// Proper d-coloring of the gadget with color(x0) == color(x1) (Same) or
// color(x0) != color(x1) (Distinct).
std::vector<int> gadget_coloring(int d, GadgetMode mode);

// Enumerates every d-dimensional orthogonal representation of the gadget
// over the field (projective classes) and checks the dichotomy at (x0, x1).
bool verify_gadget_property(int d, const FieldSpec& field, const SearchLimits& lim = {});

struct GadgetCopy {
  int zi = -1;             // clique vertex playing x0
  int v = -1;              // original modulator vertex playing x1
  std::vector<int> fresh;  // new ids of the remaining 2d-2 gadget vertices
};

enum class ReductionVariant { VertexCover, Path };

// G' = G + clique {z_1..z_d} + one gadget copy per (clique vertex, modulator
// vertex), identified at (x0, x1); chi(G) <= d iff od_F(G') <= d for every
// field. Original vertices keep their ids in G'.
struct ReductionOutput {
  Graph graph;
  std::vector<int> modulator;  // X' ascending
  int d = 3;
  ReductionVariant variant = ReductionVariant::VertexCover;
  Graph original;
  std::vector<int> x_orig;  // input modulator, ascending
  std::vector<int> clique;  // ids of z_1..z_d in G'
  std::vector<GadgetCopy> gadgets;
  std::vector<int> path_order;  // Path variant: G minus X end to end
};

ReductionOutput col_to_od_vc(const Graph& g, const std::vector<int>& x, int d);

// Fixed d = 3 variant for modulators to a path; G' minus X' stays a path.
ReductionOutput col_to_od_path(const Graph& g, const std::vector<int>& x);

// Proper d-coloring of the original graph from an orthogonal representation
// of the reduction output: modulator vertices by proportionality to a clique
// vector, outside vertices greedily (path variant: the alpha rule along the
// path, alpha_i = <u_v, u_{z_i}> up to the nonzero <z_i, z_i> factor).
std::vector<int> extract_coloring_from_orthrep(const ReductionOutput& out,
                                               const FiniteOrthRep& rep);

}  // namespace orthodim
