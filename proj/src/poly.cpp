#include "orthodim/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orthodim {

void poly_add_term(MultilinearPoly& p, std::vector<int> vars, const Rat& coef) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw std::invalid_argument("poly_add_term: repeated variable in term");
  if ((int)vars.size() != p.degree)
    throw std::invalid_argument("poly_add_term: term degree mismatch");
  for (int v : vars)
    if (v < 0 || v >= p.num_vars)
      throw std::invalid_argument("poly_add_term: variable out of range");
  auto it = p.terms.find(vars);
  if (it == p.terms.end()) {
    if (coef != 0) p.terms.emplace(std::move(vars), coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) p.terms.erase(it);
}

MultilinearPoly poly_add(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.num_vars != b.num_vars || a.degree != b.degree)
    throw std::invalid_argument("poly_add: shape mismatch");
  MultilinearPoly out = a;
  for (const auto& [key, c] : b.terms) poly_add_term(out, key, c);
  return out;
}

MultilinearPoly poly_scale(const MultilinearPoly& a, const Rat& c) {
  MultilinearPoly out;
  out.num_vars = a.num_vars;
  out.degree = a.degree;
  if (c == 0) return out;
  for (const auto& [key, k] : a.terms) out.terms.emplace(key, k * c);
  return out;
}

MultilinearPoly det_substituted_poly(int d) {
  if (d < 2) throw std::invalid_argument("det_substituted_poly: d must be >= 2");
  MultilinearPoly p;
  p.num_vars = d * d;
  p.degree = d - 1;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> vars;
    vars.reserve(d - 1);
    for (int r = 1; r < d; ++r) vars.push_back(r * d + perm[r]);
    poly_add_term(p, std::move(vars), (inversions % 2 == 0) ? Rat(1) : Rat(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

Rat poly_evaluate(const MultilinearPoly& p, const std::vector<Rat>& values) {
  if ((int)values.size() != p.num_vars)
    throw std::invalid_argument("poly_evaluate: value count mismatch");
  Rat acc = 0;
  for (const auto& [key, c] : p.terms) {
    Rat term = c;
    for (int v : key) term *= values[v];
    acc += term;
  }
  return acc;
}

namespace {

// Sparse row in the shared monomial basis; monomial keys compare graded-lex
// because all keys within one elimination share a degree.
using SparseRow = std::map<std::vector<int>, Rat>;

// Reduces row against the pivot rows in place; returns false if it vanishes.
bool reduce_row(SparseRow& row, const std::vector<SparseRow>& pivots) {
  for (const auto& piv : pivots) {
    const auto& lead = piv.begin()->first;
    auto it = row.find(lead);
    if (it == row.end()) continue;
    Rat factor = it->second / piv.begin()->second;
    for (const auto& [key, c] : piv) {
      auto jt = row.find(key);
      if (jt == row.end()) {
        row.emplace(key, -factor * c);
      } else {
        jt->second -= factor * c;
        if (jt->second == 0) row.erase(jt);
      }
    }
  }
  return !row.empty();
}

}  // namespace

std::vector<int> poly_rank_basis(const std::vector<MultilinearPoly>& polys) {
  for (size_t i = 1; i < polys.size(); ++i)
    if (polys[i].num_vars != polys[0].num_vars || polys[i].degree != polys[0].degree)
      throw std::invalid_argument("poly_rank_basis: shape mismatch");
  std::vector<int> chosen;
  std::vector<SparseRow> pivots;  // kept sorted by leading monomial
  for (size_t i = 0; i < polys.size(); ++i) {
    SparseRow row = polys[i].terms;
    if (!reduce_row(row, pivots)) continue;
    chosen.push_back((int)i);
    auto pos = std::lower_bound(
        pivots.begin(), pivots.end(), row,
        [](const SparseRow& a, const SparseRow& b) { return a.begin()->first < b.begin()->first; });
    pivots.insert(pos, std::move(row));
  }
  return chosen;
}

int poly_rank(const std::vector<MultilinearPoly>& polys) {
  return (int)poly_rank_basis(polys).size();
}

MultilinearPoly remap_variables(const MultilinearPoly& p, int new_num_vars,
                                const std::vector<int>& var_map) {
  if ((int)var_map.size() != p.num_vars)
    throw std::invalid_argument("remap_variables: map size mismatch");
  MultilinearPoly out;
  out.num_vars = new_num_vars;
  out.degree = p.degree;
  for (const auto& [key, c] : p.terms) {
    std::vector<int> mapped;
    mapped.reserve(key.size());
    for (int v : key) mapped.push_back(var_map[v]);
    poly_add_term(out, std::move(mapped), c);
  }
  return out;
}

}  // namespace orthodim
