#pragma once

#include <array>
#include <vector>

#include "cubic27/geometry.hpp"

namespace cubic27 {

// Dense homogeneous cubic in k variables; monomials u_i u_j u_l (i <= j <= l) in lexicographic
// order of (i, j, l), which for k = 4 is x^3, x^2y, x^2z, x^2t, xy^2, ..., t^3.
template <int K>
struct CubicMonomials {
  static constexpr int kCount = K * (K + 1) * (K + 2) / 6;
  std::array<std::array<int, 3>, kCount> mono{};
  std::array<std::array<std::array<int, K>, K>, K> index{};
  constexpr CubicMonomials() {
    int n = 0;
    for (int i = 0; i < K; ++i) {
      for (int j = i; j < K; ++j) {
        for (int l = j; l < K; ++l) {
          mono[n] = {i, j, l};
          // Every permutation of (i, j, l) maps to the same slot.
          index[i][j][l] = index[i][l][j] = index[j][i][l] = n;
          index[j][l][i] = index[l][i][j] = index[l][j][i] = n;
          ++n;
        }
      }
    }
  }
};

template <int K>
inline constexpr CubicMonomials<K> kCubicMonomials{};

template <class F, int K>
using DenseCubic = std::array<F, CubicMonomials<K>::kCount>;

template <class F>
using CubicForm = DenseCubic<F, 4>;

// Pullback of a quaternary cubic along X = A u, with A a 4 x K matrix given as rows.
template <class F, int K>
DenseCubic<F, K> pullback(const CubicForm<F>& form, const std::array<std::array<F, K>, 4>& a) {
  const F zero = FieldOps<F>::zero(form[0]);
  DenseCubic<F, K> out;
  out.fill(zero);
  const auto& src = kCubicMonomials<4>;
  const auto& dst = kCubicMonomials<K>;
  // Products of pairs of rows as dense K x K quadratics, computed on demand.
  std::array<std::array<std::vector<F>, 4>, 4> pair;
  std::array<std::array<bool, 4>, 4> have{};
  for (int m = 0; m < CubicMonomials<4>::kCount; ++m) {
    if (FieldOps<F>::is_zero(form[m])) continue;
    auto [i, j, l] = src.mono[m];
    if (!have[i][j]) {
      auto& q = pair[i][j];
      q.assign(K * K, zero);
      for (int p = 0; p < K; ++p) {
        if (FieldOps<F>::is_zero(a[i][p])) continue;
        for (int r = 0; r < K; ++r) {
          if (!FieldOps<F>::is_zero(a[j][r])) q[p * K + r] = a[i][p] * a[j][r];
        }
      }
      have[i][j] = true;
    }
    const auto& q = pair[i][j];
    for (int s = 0; s < K; ++s) {
      if (FieldOps<F>::is_zero(a[l][s])) continue;
      F cs = form[m] * a[l][s];
      for (int p = 0; p < K; ++p) {
        for (int r = 0; r < K; ++r) {
          const F& qv = q[p * K + r];
          if (FieldOps<F>::is_zero(qv)) continue;
          F& slot = out[dst.index[p][r][s]];
          slot = slot + cs * qv;
        }
      }
    }
  }
  return out;
}

template <class F>
F evaluate(const CubicForm<F>& form, const Vec4<F>& x) {
  F acc = FieldOps<F>::zero(form[0]);
  const auto& mons = kCubicMonomials<4>;
  for (int m = 0; m < CubicMonomials<4>::kCount; ++m) {
    if (FieldOps<F>::is_zero(form[m])) continue;
    auto [i, j, l] = mons.mono[m];
    acc = acc + form[m] * x[i] * x[j] * x[l];
  }
  return acc;
}

// F o M, where (F o M)(X) = F(M X).
template <class F>
CubicForm<F> compose(const CubicForm<F>& form, const Mat4<F>& m) {
  return pullback<F, 4>(form, m);
}

// Image of the surface F = 0 under M: the form F o M^-1.
template <class F>
CubicForm<F> map_cubic(const Projectivity<F>& m, const CubicForm<F>& form) {
  auto inv = mat_inverse(m.m);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  return compose(form, *inv);
}

template <class F>
bool line_on_cubic(const CubicForm<F>& form, const PluckerLine<F>& l) {
  auto [p, q] = line_points(l);
  std::array<std::array<F, 2>, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = {p.v[i], q.v[i]};
  auto r = pullback<F, 2>(form, a);
  for (const auto& c : r) {
    if (!FieldOps<F>::is_zero(c)) return false;
  }
  return true;
}

// x, y, z, t part of a polynomial as a dense cubic; the coefficient map receives parameter polynomials.
template <class F, class C, class Conv>
CubicForm<F> cubic_from_poly(const MultiPoly<C>& p, const F& zero, Conv conv) {
  CubicForm<F> out;
  out.fill(zero);
  const auto& mons = kCubicMonomials<4>;
  for (auto& [key, coeff] : p.split(kCoordMask)) {
    if (total_degree(key) != 3) throw Error(ErrorCode::InvalidArgument, "form is not a cubic in x, y, z, t");
    std::array<int, 3> idx{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
      for (int k = 0; k < key[v]; ++k) idx[n++] = v;
    }
    out[mons.index[idx[0]][idx[1]][idx[2]]] = conv(coeff);
  }
  return out;
}

}  // namespace cubic27
