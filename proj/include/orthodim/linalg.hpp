#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "orthodim/field.hpp"

namespace orthodim {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
typename F::Elem inner_product(const F& f, const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  auto acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

template <class F>
bool is_self_orthogonal(const F& f, const Vec<F>& x) {
  return f.is_zero(inner_product(f, x, x));
}

template <class F>
bool is_zero_vector(const F& f, const Vec<F>& x) {
  for (auto& e : x)
    if (!f.is_zero(e)) return false;
  return true;
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& x, const Vec<F>& y) {
  Vec<F> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, const Vec<F>& x) {
  Vec<F> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
  return r;
}

// u = c*v for some nonzero scalar c (both nonzero)?
template <class F>
bool is_proportional(const F& f, const Vec<F>& u, const Vec<F>& v) {
  if (u.size() != v.size()) return false;
  if (is_zero_vector(f, u) || is_zero_vector(f, v)) return false;
  typename F::Elem ratio = f.zero();
  bool have_ratio = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool zu = f.is_zero(u[i]), zv = f.is_zero(v[i]);
    if (zu != zv) return false;
    if (zu) continue;
    auto r = f.div(u[i], v[i]);
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (!(f.is_zero(f.sub(ratio, r)))) {
      return false;
    }
  }
  return have_ratio;
}

// In-place Gauss-Jordan. Returns the rank; `rows` ends up as the RREF basis
// (zero rows dropped), pivots in increasing column order.
template <class F>
int rref(const F& f, std::vector<Vec<F>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("rref: ragged rows");
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && f.is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    auto piv_inv = f.inv(rows[pivot_row][col]);
    for (std::size_t j = col; j < ncols; ++j) rows[pivot_row][j] = f.mul(piv_inv, rows[pivot_row][j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || f.is_zero(rows[i][col])) continue;
      auto factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return static_cast<int>(pivot_row);
}

// Subspace of F^ambient_dim, stored as an RREF basis (canonical per subspace).
template <class F>
struct Subspace {
  int ambient_dim = 0;
  std::vector<Vec<F>> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  std::vector<int> pivot_columns(const F& f) const {
    std::vector<int> piv;
    for (const auto& row : basis)
      for (int j = 0; j < ambient_dim; ++j)
        if (!f.is_zero(row[j])) {
          piv.push_back(j);
          break;
        }
    return piv;
  }

  bool operator==(const Subspace& o) const {
    return ambient_dim == o.ambient_dim && basis == o.basis;
  }
};

template <class F>
Subspace<F> span(const F& f, int ambient_dim, std::vector<Vec<F>> vectors) {
  for (auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("span: vector dimension mismatch");
  rref(f, vectors);
  return Subspace<F>{ambient_dim, std::move(vectors)};
}

template <class F>
Subspace<F> zero_subspace(int ambient_dim) {
  return Subspace<F>{ambient_dim, {}};
}

template <class F>
Subspace<F> full_space(const F& f, int ambient_dim) {
  std::vector<Vec<F>> rows;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec<F> e(ambient_dim, f.zero());
    e[i] = f.one();
    rows.push_back(std::move(e));
  }
  return Subspace<F>{ambient_dim, std::move(rows)};
}

template <class F>
bool subspace_contains(const F& f, const Subspace<F>& w, Vec<F> x) {
  if (static_cast<int>(x.size()) != w.ambient_dim)
    throw std::invalid_argument("subspace_contains: dimension mismatch");
  // reduce x against the RREF basis
  for (const auto& row : w.basis) {
    int piv = -1;
    for (int j = 0; j < w.ambient_dim; ++j)
      if (!f.is_zero(row[j])) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    if (!f.is_zero(x[piv])) {
      auto factor = x[piv];
      for (int j = 0; j < w.ambient_dim; ++j) x[j] = f.sub(x[j], f.mul(factor, row[j]));
    }
  }
  return is_zero_vector(f, x);
}

template <class F>
bool subspace_leq(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
  for (const auto& v : a.basis)
    if (!subspace_contains(f, b, v)) return false;
  return true;
}

template <class F>
Subspace<F> subspace_sum(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec<F>> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return span(f, a.ambient_dim, std::move(rows));
}

// Kernel of the matrix whose rows are w's basis = { x : <b, x> = 0 for all b in W }.
template <class F>
Subspace<F> orthogonal_complement(const F& f, const Subspace<F>& w) {
  const int d = w.ambient_dim;
  std::vector<int> piv = w.pivot_columns(f);
  std::vector<bool> is_piv(d, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec<F>> out;
  for (int c = 0; c < d; ++c) {
    if (is_piv[c]) continue;
    Vec<F> v(d, f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < w.basis.size(); ++i) v[piv[i]] = f.neg(w.basis[i][c]);
    out.push_back(std::move(v));
  }
  rref(f, out);
  return Subspace<F>{d, std::move(out)};
}

// The standard form is nondegenerate, so A ∩ B = (A^⊥ + B^⊥)^⊥ exactly.
template <class F>
Subspace<F> subspace_intersection(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
  return orthogonal_complement(f, subspace_sum(f, orthogonal_complement(f, a), orthogonal_complement(f, b)));
}

// Is there a non-self-orthogonal vector orthogonal to all of `vectors`?
// Returns a witness if so (constructive Lemma 2.2-style case split on the
// characteristic), nullopt otherwise. Works over GF(p) and the rationals.
template <class F>
std::optional<Vec<F>> find_nonselforth_orthogonal(const F& f, int ambient_dim,
                                                  const std::vector<Vec<F>>& vectors) {
  Subspace<F> w = span(f, ambient_dim, vectors);
  Subspace<F> comp = orthogonal_complement(f, w);
  if (f.characteristic() == 2) {
    // self-orthogonality over GF(2) is parity against the all-one vector
    for (const auto& b : comp.basis) {
      auto s = f.zero();
      for (const auto& e : b) s = f.add(s, e);
      if (!f.is_zero(s)) return b;
    }
    return std::nullopt;
  }
  for (const auto& b : comp.basis)
    if (!is_self_orthogonal(f, b)) return b;
  // every basis vector self-orthogonal; look for a non-orthogonal pair x, y:
  // then <x+y, x+y> = 2<x,y> != 0 in odd/zero characteristic
  for (std::size_t i = 0; i < comp.basis.size(); ++i)
    for (std::size_t j = i + 1; j < comp.basis.size(); ++j)
      if (!f.is_zero(inner_product(f, comp.basis[i], comp.basis[j])))
        return vec_add(f, comp.basis[i], comp.basis[j]);
  return std::nullopt;  // Gram matrix of W^⊥ vanishes, so W^⊥ ⊆ W
}

// Does W contain a non-self-orthogonal vector? Decidable from the Gram data
// of any basis: in characteristic 2 self-orthogonality is linear, otherwise
// a vanishing Gram matrix kills every combination and a nonzero entry yields
// a witness (b_i, or b_i + b_j by polarization).
template <class F>
bool subspace_has_nonselforth(const F& f, const Subspace<F>& w) {
  for (const auto& b : w.basis)
    if (!is_self_orthogonal(f, b)) return true;
  if (f.characteristic() == 2) return false;
  for (std::size_t i = 0; i < w.basis.size(); ++i)
    for (std::size_t j = i + 1; j < w.basis.size(); ++j)
      if (!f.is_zero(inner_product(f, w.basis[i], w.basis[j]))) return true;
  return false;
}

// ---- finite-field enumeration ----------------------------------------------

inline std::uint64_t checked_pow_u64(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) throw CapExceeded("field enumeration size exceeds cap");
    r *= base;
  }
  return r;
}

inline constexpr std::uint64_t kDefaultEnumCap = 1u << 20;

// All vectors of GF(p)^d in odometer order (last coordinate fastest).
inline std::vector<std::vector<int>> all_vectors(const GF& f, int d,
                                                 std::uint64_t cap = kDefaultEnumCap) {
  std::uint64_t total = checked_pow_u64(f.p(), d, cap);
  std::vector<std::vector<int>> out;
  out.reserve(total);
  std::vector<int> v(d, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(v);
    for (int j = d - 1; j >= 0; --j) {
      if (++v[j] < f.p()) break;
      v[j] = 0;
    }
  }
  return out;
}

// One representative per projective class: first nonzero coordinate is 1.
// Ordered by leading position, then odometer order on the tail.
inline std::vector<std::vector<int>> projective_representatives(const GF& f, int d,
                                                                std::uint64_t cap = kDefaultEnumCap) {
  checked_pow_u64(f.p(), d, cap);
  std::vector<std::vector<int>> out;
  for (int lead = 0; lead < d; ++lead) {
    std::vector<int> v(d, 0);
    v[lead] = 1;
    int tail = d - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < tail; ++i) count *= f.p();
    for (std::uint64_t it = 0; it < count; ++it) {
      out.push_back(v);
      for (int j = d - 1; j > lead; --j) {
        if (++v[j] < f.p()) break;
        v[j] = 0;
      }
    }
  }
  return out;
}

// canonical projective representative of a nonzero vector
inline std::vector<int> projective_normalize(const GF& f, std::vector<int> v) {
  for (int j = 0; j < static_cast<int>(v.size()); ++j) {
    if (v[j] != 0) {
      int c = f.inv(v[j]);
      for (auto& e : v) e = f.mul(c, e);
      return v;
    }
  }
  throw std::invalid_argument("projective_normalize: zero vector");
}

// Non-self-orthogonal vectors of GF(p)^d, one per projective class
// (self-orthogonality is scaling-invariant, so classes are pure).
inline std::vector<std::vector<int>> enumerate_nonselforth_vectors(const GF& f, int d,
                                                                   std::uint64_t cap = kDefaultEnumCap) {
  std::vector<std::vector<int>> out;
  for (auto& v : projective_representatives(f, d, cap))
    if (!is_self_orthogonal(f, v)) out.push_back(std::move(v));
  return out;
}

// All r-dimensional subspaces of GF(p)^d, enumerated as RREF matrices:
// choose pivot columns, then sweep the free entries.
inline std::vector<Subspace<GF>> enumerate_subspaces(const GF& f, int d, int r,
                                                     std::uint64_t cap = kDefaultEnumCap) {
  if (r < 0 || r > d) return {};
  checked_pow_u64(f.p(), d, cap);
  std::vector<Subspace<GF>> out;
  if (r == 0) {
    out.push_back(zero_subspace<GF>(d));
    return out;
  }
  std::vector<int> piv(r);
  for (int i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(d, false);
    for (int c : piv) is_piv[c] = true;
    // free slots: (row i, column j) with j > piv[i] and j not a pivot column
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
      for (int j = piv[i] + 1; j < d; ++j)
        if (!is_piv[j]) slots.emplace_back(i, j);
    std::vector<int> fill(slots.size(), 0);
    while (true) {
      std::vector<std::vector<int>> rows(r, std::vector<int>(d, 0));
      for (int i = 0; i < r; ++i) rows[i][piv[i]] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = fill[s];
      out.push_back(Subspace<GF>{d, std::move(rows)});
      int j = static_cast<int>(fill.size()) - 1;
      while (j >= 0 && ++fill[j] == f.p()) fill[j--] = 0;
      if (j < 0) break;
    }
    // next pivot combination in lex order
    int i = r - 1;
    while (i >= 0 && piv[i] == d - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

// One representative per projective class of W \ {0}: coefficient tuples
// over the basis with first nonzero coefficient 1 (proportional combinations
// of independent rows have proportional tuples, so classes map bijectively).
inline std::vector<std::vector<int>> subspace_projective_vectors(const GF& f,
                                                                 const Subspace<GF>& w) {
  const int r = w.dim();
  std::vector<std::vector<int>> out;
  for (int lead = 0; lead < r; ++lead) {
    std::vector<int> coef(r, 0);
    coef[lead] = 1;
    while (true) {
      std::vector<int> v(w.ambient_dim, 0);
      for (int j = lead; j < r; ++j)
        if (coef[j] != 0)
          for (int c = 0; c < w.ambient_dim; ++c)
            v[c] = f.add(v[c], f.mul(coef[j], w.basis[j][c]));
      out.push_back(std::move(v));
      int i = r - 1;
      while (i > lead && coef[i] == f.p() - 1) coef[i--] = 0;
      if (i == lead) break;
      ++coef[i];
    }
  }
  return out;
}

// number of k-dimensional subspaces of F_q^d
inline BigInt gaussian_binomial(int d, int k, const BigInt& q) {
  if (k < 0 || k > d) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, d - i) - 1;
    den *= boost::multiprecision::pow(q, k - i) - 1;
  }
  return num / den;
}

// no nonzero self-orthogonal vector in F^d?
inline bool is_anisotropic(const GF& f, int d, std::uint64_t cap = kDefaultEnumCap) {
  for (const auto& v : projective_representatives(f, d, cap))
    if (is_self_orthogonal(f, v)) return false;
  return true;
}

// Largest m such that every subspace W with dim(W) < m leaves a
// non-self-orthogonal vector in W^⊥. Exhaustive over subspaces for finite
// fields; the rationals need no search (nonzero rational vectors are never
// self-orthogonal, so every proper complement works).
inline int compute_m(const FieldSpec& field, int d, std::uint64_t cap = kDefaultEnumCap) {
  if (d < 1) throw std::invalid_argument("compute_m: d must be >= 1");
  if (!field.is_finite()) return d;
  GF f = field.as_gf();
  checked_pow_u64(f.p(), d, cap);
  for (int r = 1; r < d; ++r)
    for (const auto& w : enumerate_subspaces(f, d, r, cap))
      if (!find_nonselforth_orthogonal(f, d, w.basis)) return r;
  return d;
}

}  // namespace orthodim
