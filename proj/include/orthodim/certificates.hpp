#pragma once

#include <vector>

#include "orthodim/field.hpp"
#include "orthodim/solver.hpp"

namespace orthodim {

// A NO sub-instance: the induced graph on `vertices` with the original
// per-vertex subspaces, itself unsatisfiable, within `bound` vertices.
struct SubInstanceWitness {
  std::vector<int> vertices;  // ascending original ids
  SubChooseInstance instance;
  BigInt bound = 0;
  bool verified = false;
};

// NO certificate for split components: pick the smallest-index NO component;
// if its clique part exceeds d take d+1 clique vertices, else shrink the
// independent part by removing any v2 that has a same-neighborhood partner
// v1 with L(v1) ⊆ L(v2) (smallest v2 first) until no rule applies.
// Bound: d + 2^d * [d choose floor(d/2)]_q.
SubInstanceWitness split_no_certificate(const SubChooseInstance& inst,
                                        const SearchLimits& lim = {});

// Variant for (field, d) without nonzero self-orthogonal vectors: remove any
// independent vertex w such that every subspace Q meeting all of w's
// same-neighborhood subspaces also meets L(w) (checked by enumerating every
// subspace of F^d). Bound: d + 2^d * C(d, floor(d/2)).
SubInstanceWitness split_no_certificate_anisotropic(const SubChooseInstance& inst,
                                                    const SearchLimits& lim = {});

// Recursive certificate for cochordal components: a vertex whose subspace
// holds only self-orthogonal vectors certifies alone; otherwise mark a
// cosimplicial vertex v of a NO component and recurse over every candidate
// vector u in L(v) on the instance with v removed, u-holding non-neighbors
// removed, and neighbor subspaces cut down to u's orthogonal complement.
SubInstanceWitness cochordal_no_certificate(const SubChooseInstance& inst,
                                            const SearchLimits& lim = {});

// Split NO instance on d + C(d, floor(d/2)) vertices that loses NO-ness when
// any single vertex is deleted: a d-clique with full subspaces plus one
// independent vertex per floor(d/2)-subset S of clique indices, adjacent to
// the clique vertices in S, with L = span(e_0..e_{floor(d/2)-1}).
SubChooseInstance build_irreducible_split_instance(int d, const FieldSpec& field);

// witness is a genuine induced sub-instance with unchanged subspaces, its
// decision is NO, and its size respects the claimed bound
bool verify_certificate(const SubChooseInstance& inst, const SubInstanceWitness& w,
                        const SearchLimits& lim = {});

}  // namespace orthodim
