#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "orthodim/poly.hpp"
#include "orthodim/rng.hpp"

using namespace orthodim;

namespace {

// Independent oracle: symbolic determinant by cofactor expansion over maps
// monomial -> coefficient, with x_{0,c} preset to 1 and x_{r,c} = r*d + c.
using Mono = std::vector<int>;  // sorted variable indices
using SymPoly = std::map<Mono, Rat>;

SymPoly sym_mul_var(const SymPoly& p, int var) {
  SymPoly out;
  for (const auto& [mono, c] : p) {
    Mono m = mono;
    m.insert(std::lower_bound(m.begin(), m.end(), var), var);
    out[m] += c;
  }
  return out;
}

void sym_add(SymPoly& into, const SymPoly& p, const Rat& scale) {
  for (const auto& [mono, c] : p) {
    Rat& slot = into[mono];
    slot += scale * c;
    if (slot == 0) into.erase(mono);
  }
}

SymPoly cofactor_det(int d, const std::vector<int>& rows, const std::vector<int>& cols) {
  SymPoly out;
  if (rows.empty()) {
    out[{}] = 1;
    return out;
  }
  int r = rows[0];
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + j);
    SymPoly minor = cofactor_det(d, sub_rows, sub_cols);
    Rat sign = (j % 2 == 0) ? 1 : -1;
    if (r == 0) {
      sym_add(out, minor, sign);  // first-row entry is the constant 1
    } else {
      sym_add(out, sym_mul_var(minor, r * d + cols[j]), sign);
    }
  }
  return out;
}

SymPoly oracle_det(int d) {
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  return cofactor_det(d, idx, idx);
}

// numeric determinant by fraction-free-ish Gaussian elimination over Rat
Rat numeric_det(std::vector<std::vector<Rat>> a) {
  const int n = (int)a.size();
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      Rat f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("term accumulation") {
  MultilinearPoly p;
  p.num_vars = 4;
  p.degree = 2;
  poly_add_term(p, {2, 0}, Rat(3));  // sorted internally
  CHECK(p.terms.size() == 1);
  CHECK(p.terms.at({0, 2}) == 3);
  poly_add_term(p, {0, 2}, Rat(-3));  // cancels to zero and is erased
  CHECK(p.terms.empty());
  poly_add_term(p, {1, 3}, Rat(1, 2));
  poly_add_term(p, {1, 3}, Rat(1, 3));
  CHECK(p.terms.at({1, 3}) == Rat(5, 6));
  CHECK_THROWS_AS(poly_add_term(p, {1, 1}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(poly_add_term(p, {0}, Rat(1)), std::invalid_argument);      // degree mismatch
  CHECK_THROWS_AS(poly_add_term(p, {4, 0}, Rat(1)), std::invalid_argument);   // out of range

  MultilinearPoly q = p;
  poly_add_term(q, {0, 1}, Rat(2));
  auto s = poly_add(p, q);
  CHECK(s.terms.at({1, 3}) == Rat(5, 3));
  CHECK(s.terms.at({0, 1}) == 2);
  auto z = poly_add(p, poly_scale(p, Rat(-1)));
  CHECK(z.terms.empty());
}

TEST_CASE("substituted determinant matches cofactor expansion") {
  for (int d = 2; d <= 4; ++d) {
    MultilinearPoly got = det_substituted_poly(d);
    CHECK(got.num_vars == d * d);
    CHECK(got.degree == d - 1);
    SymPoly want = oracle_det(d);
    REQUIRE(got.terms.size() == want.size());
    int fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    CHECK((int)got.terms.size() == fact);  // one term per permutation, no collisions
    for (const auto& [mono, c] : want) {
      REQUIRE(got.terms.count(mono) == 1);
      CHECK(got.terms.at(mono) == c);
      CHECK((int)mono.size() == d - 1);
      for (int v : mono) CHECK(v >= d);  // row-0 variables never appear
    }
  }
}

TEST_CASE("d=3 determinant, frozen") {
  // det of {{1,1,1},{x3,x4,x5},{x6,x7,x8}} = x4*x8 - x5*x7 - x3*x8 + x5*x6 + x3*x7 - x4*x6
  MultilinearPoly p = det_substituted_poly(3);
  REQUIRE(p.terms.size() == 6);
  CHECK(p.terms.at({4, 8}) == 1);
  CHECK(p.terms.at({5, 7}) == -1);
  CHECK(p.terms.at({3, 8}) == -1);
  CHECK(p.terms.at({5, 6}) == 1);
  CHECK(p.terms.at({3, 7}) == 1);
  CHECK(p.terms.at({4, 6}) == -1);
}

TEST_CASE("evaluation matches numeric determinant") {
  auto rng = make_rng(11, 0);
  for (int d = 2; d <= 4; ++d) {
    MultilinearPoly p = det_substituted_poly(d);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rat> vals(d * d);
      std::vector<std::vector<Rat>> mat(d, std::vector<Rat>(d));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          Rat v = r == 0 ? Rat(1) : Rat((long long)(rng() % 19) - 9, 1 + (long long)(rng() % 4));
          vals[r * d + c] = v;
          mat[r][c] = v;
        }
      CHECK(poly_evaluate(p, vals) == numeric_det(mat));
    }
  }
  MultilinearPoly p2 = det_substituted_poly(2);
  CHECK_THROWS_AS(poly_evaluate(p2, std::vector<Rat>(3)), std::invalid_argument);
}

TEST_CASE("rank matches dense elimination over the monomial basis") {
  auto rng = make_rng(12, 1);
  auto rand_poly = [&](int num_vars, int degree, int terms) {
    MultilinearPoly p;
    p.num_vars = num_vars;
    p.degree = degree;
    for (int t = 0; t < terms; ++t) {
      std::vector<int> vars;
      while ((int)vars.size() < degree) {
        int v = (int)(rng() % num_vars);
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
      poly_add_term(p, vars, Rat((long long)(rng() % 7) - 3));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MultilinearPoly> polys;
    int nv = 5, deg = 2, count = 2 + (int)(rng() % 5);
    for (int i = 0; i < count; ++i) polys.push_back(rand_poly(nv, deg, 1 + (int)(rng() % 4)));

    // dense oracle: matrix of coefficients over all monomials seen
    std::map<Mono, int> col_of;
    for (const auto& p : polys)
      for (const auto& [mono, c] : p.terms)
        col_of.emplace(mono, (int)col_of.size());
    std::vector<std::vector<Rat>> mat;
    for (const auto& p : polys) {
      std::vector<Rat> row(col_of.size(), Rat(0));
      for (const auto& [mono, c] : p.terms) row[col_of[mono]] = c;
      mat.push_back(row);
    }
    int rank = 0;
    for (std::size_t col = 0; col < col_of.size() && rank < (int)mat.size(); ++col) {
      int piv = -1;
      for (int r = rank; r < (int)mat.size(); ++r)
        if (mat[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(mat[rank], mat[piv]);
      for (int r = 0; r < (int)mat.size(); ++r) {
        if (r == rank || mat[r][col] == 0) continue;
        Rat f = mat[r][col] / mat[rank][col];
        for (std::size_t c = 0; c < col_of.size(); ++c) mat[r][c] -= f * mat[rank][c];
      }
      ++rank;
    }

    CHECK(poly_rank(polys) == rank);
    auto basis = poly_rank_basis(polys);
    CHECK((int)basis.size() == rank);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(poly_rank([&] {
            std::vector<MultilinearPoly> sel;
            for (int i : basis) sel.push_back(polys[i]);
            return sel;
          }()) == rank);
  }

  // first occurrence wins: {p, 2p, q} keeps indices 0 and 2
  MultilinearPoly p, q;
  p.num_vars = q.num_vars = 4;
  p.degree = q.degree = 2;
  poly_add_term(p, {0, 1}, Rat(1));
  poly_add_term(q, {2, 3}, Rat(1));
  CHECK(poly_rank_basis({p, poly_scale(p, Rat(2)), q}) == std::vector<int>{0, 2});
  CHECK(poly_rank({}) == 0);
  MultilinearPoly zero;
  zero.num_vars = 4;
  zero.degree = 2;
  CHECK(poly_rank_basis({zero, p}) == std::vector<int>{1});
}

TEST_CASE("variable remapping") {
  MultilinearPoly p;
  p.num_vars = 4;
  p.degree = 2;
  poly_add_term(p, {0, 1}, Rat(2));
  poly_add_term(p, {1, 3}, Rat(-1));

  auto r = remap_variables(p, 6, {5, 2, 1, 0});
  CHECK(r.num_vars == 6);
  CHECK(r.terms.at({2, 5}) == 2);   // {0,1} -> {5,2}, sorted
  CHECK(r.terms.at({0, 2}) == -1);  // {1,3} -> {2,0}
  CHECK(r.terms.size() == 2);

  // identity map round-trips
  auto id = remap_variables(p, 4, {0, 1, 2, 3});
  CHECK(id == p);

  // collapsing two variables of one term is rejected
  CHECK_THROWS_AS(remap_variables(p, 4, {1, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(remap_variables(p, 4, {0, 1, 2, 5}), std::invalid_argument);  // out of range
}
