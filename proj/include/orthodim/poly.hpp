#pragma once

#include <map>
#include <vector>

#include "orthodim/field.hpp"

namespace orthodim {

// Multilinear homogeneous polynomial over the rationals. Every term is a
// product of `degree` distinct variables; keys are strictly increasing index
// tuples, so the map order is graded-lex (all keys share one degree).
struct MultilinearPoly {
  int num_vars = 0;
  int degree = 0;
  std::map<std::vector<int>, Rat> terms;

  bool operator==(const MultilinearPoly&) const = default;
};

// Adds coef * prod(vars); vars are sorted and must be distinct. Zero results
// are erased so `terms` never stores a zero coefficient.
void poly_add_term(MultilinearPoly& p, std::vector<int> vars, const Rat& coef);

MultilinearPoly poly_add(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly poly_scale(const MultilinearPoly& a, const Rat& c);

// Determinant of a d x d variable matrix with the first row replaced by
// all-ones. Variables are row-major (x_{r,c} = r*d + c); row-0 variables do
// not occur in any term. d! signed terms of degree d-1.
MultilinearPoly det_substituted_poly(int d);

Rat poly_evaluate(const MultilinearPoly& p, const std::vector<Rat>& values);

// Indices of a greedy maximal linearly independent subset, first occurrence
// wins, exact Gaussian elimination in the shared monomial basis.
std::vector<int> poly_rank_basis(const std::vector<MultilinearPoly>& polys);

int poly_rank(const std::vector<MultilinearPoly>& polys);

// Renames variable i to var_map[i]; images of variables that share a term
// must stay distinct.
MultilinearPoly remap_variables(const MultilinearPoly& p, int new_num_vars,
                                const std::vector<int>& var_map);

}  // namespace orthodim
