#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic27/field_ops.hpp"

namespace cubic27 {

template <class F>
using Vec4 = std::array<F, 4>;
template <class F>
using Mat4 = std::array<std::array<F, 4>, 4>;

// Points and planes are kept normalized, so equality is coordinate equality.
template <class F>
struct ProjPoint {
  Vec4<F> v;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v == b.v; }
};

template <class F>
struct ProjPlane {
  Vec4<F> v;
  friend bool operator==(const ProjPlane& a, const ProjPlane& b) { return a.v == b.v; }
};

// Pluecker coordinates [p01, p02, p03, p12, p13, p23], p_ij = a_i b_j - a_j b_i.
template <class F>
struct PluckerLine {
  std::array<F, 6> p;
  friend bool operator==(const PluckerLine& a, const PluckerLine& b) { return a.p == b.p; }
};

template <class F>
struct Projectivity {
  Mat4<F> m;
};

namespace geom_detail {
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

template <class F>
ProjPoint<F> make_point(Vec4<F> v) {
  if (!FieldOps<F>::normalize(v)) throw Error(ErrorCode::InvalidArgument, "zero vector is not a point");
  return {std::move(v)};
}

template <class F>
ProjPlane<F> make_plane(Vec4<F> v) {
  if (!FieldOps<F>::normalize(v)) throw Error(ErrorCode::InvalidArgument, "zero vector is not a plane");
  return {std::move(v)};
}

template <class F>
PluckerLine<F> make_line(std::array<F, 6> p) {
  if (!FieldOps<F>::normalize(p)) throw Error(ErrorCode::InvalidArgument, "zero Pluecker vector");
  return {std::move(p)};
}

template <class F>
bool is_zero_vec(const Vec4<F>& v) {
  for (const auto& x : v) {
    if (!FieldOps<F>::is_zero(x)) return false;
  }
  return true;
}

template <class F>
F dot(const Vec4<F>& a, const Vec4<F>& b) {
  F s = a[0] * b[0];
  for (int i = 1; i < 4; ++i) s = s + a[i] * b[i];
  return s;
}

template <class F>
std::array<F, 6> pluecker_raw(const Vec4<F>& a, const Vec4<F>& b) {
  std::array<F, 6> p;
  for (int k = 0; k < 6; ++k) {
    int i = geom_detail::kPairs[k][0], j = geom_detail::kPairs[k][1];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  return p;
}

template <class F>
PluckerLine<F> line_from_points(const ProjPoint<F>& a, const ProjPoint<F>& b) {
  auto p = pluecker_raw(a.v, b.v);
  if (!FieldOps<F>::normalize(p)) throw Error(ErrorCode::CoincidentPoints, "points span no line");
  return {std::move(p)};
}

// The line cut out by two planes.
template <class F>
PluckerLine<F> line_from_planes(const ProjPlane<F>& a, const ProjPlane<F>& b) {
  auto q = pluecker_raw(a.v, b.v);
  // Dual coordinates q01..q23 become p23, -p13, p12, p03, -p02, p01.
  std::array<F, 6> p{q[5], -q[4], q[3], q[2], -q[1], q[0]};
  if (!FieldOps<F>::normalize(p)) throw Error(ErrorCode::CoincidentPoints, "planes coincide");
  return {std::move(p)};
}

template <class F>
F pluecker_pairing(const PluckerLine<F>& l, const PluckerLine<F>& m) {
  const auto& p = l.p;
  const auto& q = m.p;
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

template <class F>
bool pluecker_relation_holds(const PluckerLine<F>& l) {
  const auto& p = l.p;
  return FieldOps<F>::is_zero(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]);
}

template <class F>
bool lines_meet(const PluckerLine<F>& l, const PluckerLine<F>& m) {
  return FieldOps<F>::is_zero(pluecker_pairing(l, m));
}

// Primal matrix: columns span the line; L * plane is the point where the line meets the plane.
template <class F>
Mat4<F> primal_matrix(const PluckerLine<F>& l) {
  const F z = FieldOps<F>::zero(l.p[0]);
  Mat4<F> L;
  for (auto& row : L) row.fill(z);
  for (int k = 0; k < 6; ++k) {
    int i = geom_detail::kPairs[k][0], j = geom_detail::kPairs[k][1];
    L[i][j] = l.p[k];
    L[j][i] = -l.p[k];
  }
  return L;
}

// Dual matrix: rows are planes through the line; L* X = 0 iff X lies on the line.
template <class F>
Mat4<F> dual_matrix(const PluckerLine<F>& l) {
  const auto& p = l.p;
  const F z = FieldOps<F>::zero(p[0]);
  std::array<F, 6> d{p[5], -p[4], p[3], p[2], -p[1], p[0]};
  Mat4<F> L;
  for (auto& row : L) row.fill(z);
  for (int k = 0; k < 6; ++k) {
    int i = geom_detail::kPairs[k][0], j = geom_detail::kPairs[k][1];
    L[i][j] = d[k];
    L[j][i] = -d[k];
  }
  return L;
}

template <class F>
Vec4<F> mat_vec(const Mat4<F>& m, const Vec4<F>& v) {
  Vec4<F> r;
  for (int i = 0; i < 4; ++i) {
    F s = FieldOps<F>::zero(v[0]);
    for (int j = 0; j < 4; ++j) {
      if (!FieldOps<F>::is_zero(m[i][j]) && !FieldOps<F>::is_zero(v[j])) s = s + m[i][j] * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

template <class F>
Vec4<F> mat_tvec(const Mat4<F>& m, const Vec4<F>& v) {
  Vec4<F> r;
  for (int j = 0; j < 4; ++j) {
    F s = FieldOps<F>::zero(v[0]);
    for (int i = 0; i < 4; ++i) {
      if (!FieldOps<F>::is_zero(m[i][j]) && !FieldOps<F>::is_zero(v[i])) s = s + m[i][j] * v[i];
    }
    r[j] = std::move(s);
  }
  return r;
}

template <class F>
bool point_on_line(const ProjPoint<F>& x, const PluckerLine<F>& l) {
  return is_zero_vec(mat_vec(dual_matrix(l), x.v));
}

template <class F>
bool point_on_plane(const ProjPoint<F>& x, const ProjPlane<F>& pl) {
  return FieldOps<F>::is_zero(dot(x.v, pl.v));
}

template <class F>
bool line_in_plane(const PluckerLine<F>& l, const ProjPlane<F>& pl) {
  return is_zero_vec(mat_vec(primal_matrix(l), pl.v));
}

// Two distinct points spanning the line.
template <class F>
std::pair<ProjPoint<F>, ProjPoint<F>> line_points(const PluckerLine<F>& l) {
  Mat4<F> L = primal_matrix(l);
  std::vector<ProjPoint<F>> cols;
  for (int j = 0; j < 4 && cols.size() < 2; ++j) {
    Vec4<F> c{L[0][j], L[1][j], L[2][j], L[3][j]};
    if (is_zero_vec(c)) continue;
    ProjPoint<F> p = make_point(std::move(c));
    if (cols.empty() || !(cols[0] == p)) cols.push_back(std::move(p));
  }
  if (cols.size() < 2) throw Error(ErrorCode::InvalidArgument, "not a decomposable Pluecker vector");
  return {cols[0], cols[1]};
}

// Two distinct planes containing the line.
template <class F>
std::pair<ProjPlane<F>, ProjPlane<F>> line_planes(const PluckerLine<F>& l) {
  Mat4<F> L = dual_matrix(l);
  std::vector<ProjPlane<F>> rows;
  for (int i = 0; i < 4 && rows.size() < 2; ++i) {
    if (is_zero_vec(L[i])) continue;
    ProjPlane<F> p = make_plane(L[i]);
    if (rows.empty() || !(rows[0] == p)) rows.push_back(std::move(p));
  }
  if (rows.size() < 2) throw Error(ErrorCode::InvalidArgument, "not a decomposable Pluecker vector");
  return {rows[0], rows[1]};
}

template <class F>
ProjPoint<F> meet_point(const PluckerLine<F>& l, const PluckerLine<F>& m) {
  if (l == m) throw Error(ErrorCode::EqualLines, "meet of a line with itself");
  if (!lines_meet(l, m)) throw Error(ErrorCode::SkewLines, "lines are skew");
  Mat4<F> L = primal_matrix(l), Ds = dual_matrix(m);
  for (int i = 0; i < 4; ++i) {
    if (is_zero_vec(Ds[i])) continue;
    Vec4<F> x = mat_vec(L, Ds[i]);
    if (!is_zero_vec(x)) return make_point(std::move(x));
  }
  throw Error(ErrorCode::EqualLines, "lines coincide");
}

template <class F>
ProjPlane<F> span_plane(const PluckerLine<F>& l, const PluckerLine<F>& m) {
  if (l == m) throw Error(ErrorCode::EqualLines, "span of a line with itself");
  if (!lines_meet(l, m)) throw Error(ErrorCode::SkewLines, "lines are skew");
  Mat4<F> Ds = dual_matrix(l), L = primal_matrix(m);
  for (int j = 0; j < 4; ++j) {
    Vec4<F> x{L[0][j], L[1][j], L[2][j], L[3][j]};
    if (is_zero_vec(x)) continue;
    Vec4<F> pl = mat_vec(Ds, x);
    if (!is_zero_vec(pl)) return make_plane(std::move(pl));
  }
  throw Error(ErrorCode::EqualLines, "lines coincide");
}

template <class F>
bool lines_pattern(const std::vector<PluckerLine<F>>& l) {
  static constexpr bool kMeet[6][6] = {{false, true, false, true, false, false}, {true, false, true, false, true, true},
                                       {false, true, false, true, false, false}, {true, false, true, false, false, true},
                                       {false, true, false, false, false, false}, {false, true, false, true, false, false}};
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (l[i] == l[j] || lines_meet(l[i], l[j]) != kMeet[i][j]) return false;
    }
  }
  return true;
}

// Five lines (or six for the extended form) with the L-set incidence pattern.
template <class F>
bool is_lset(const std::vector<PluckerLine<F>>& lines) {
  if (lines.size() != 5 && lines.size() != 6) return false;
  return lines_pattern(lines);
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> row_reduce(std::vector<std::vector<F>>& a, int ncols) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && FieldOps<F>::is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    F inv = FieldOps<F>::one(a[rank][c]) / a[rank][c];
    for (int k = c; k < ncols; ++k) {
      if (!FieldOps<F>::is_zero(a[rank][k])) a[rank][k] = a[rank][k] * inv;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || FieldOps<F>::is_zero(a[r][c])) continue;
      F f = a[r][c];
      for (int k = c; k < ncols; ++k) {
        if (!FieldOps<F>::is_zero(a[rank][k])) a[r][k] = a[r][k] - f * a[rank][k];
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class F>
std::vector<std::vector<F>> kernel(std::vector<std::vector<F>> a, int ncols, const F& like) {
  auto pivots = row_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, FieldOps<F>::zero(like));
    v[free] = FieldOps<F>::one(like);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat4<F>> mat_inverse(const Mat4<F>& m) {
  const F& like = m[0][0];
  std::vector<std::vector<F>> a(4, std::vector<F>(8, FieldOps<F>::zero(like)));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
    a[i][4 + i] = FieldOps<F>::one(like);
  }
  auto piv = row_reduce(a, 8);
  if (piv.size() < 4 || piv[3] != 3) return std::nullopt;
  Mat4<F> inv;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) inv[i][j] = a[i][4 + j];
  }
  return inv;
}

template <class F>
Mat4<F> mat_mul(const Mat4<F>& a, const Mat4<F>& b) {
  Mat4<F> r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      F s = FieldOps<F>::zero(a[0][0]);
      for (int k = 0; k < 4; ++k) {
        if (!FieldOps<F>::is_zero(a[i][k]) && !FieldOps<F>::is_zero(b[k][j])) s = s + a[i][k] * b[k][j];
      }
      r[i][j] = std::move(s);
    }
  }
  return r;
}

template <class F>
Mat4<F> identity_matrix(const F& like) {
  Mat4<F> m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? FieldOps<F>::one(like) : FieldOps<F>::zero(like);
  }
  return m;
}

// Entrywise proportionality of two vectors by a nonzero scalar.
template <class F, std::size_t N>
bool proportional_vec(const std::array<F, N>& a, const std::array<F, N>& b) {
  int k = -1;
  for (std::size_t i = 0; i < N; ++i) {
    if (FieldOps<F>::is_zero(a[i]) != FieldOps<F>::is_zero(b[i])) return false;
    if (k < 0 && !FieldOps<F>::is_zero(a[i])) k = static_cast<int>(i);
  }
  if (k < 0) return false;
  for (std::size_t i = k + 1; i < N; ++i) {
    if (FieldOps<F>::is_zero(a[i])) continue;
    if (!(a[i] * b[k] == b[i] * a[k])) return false;
  }
  return true;
}

template <class F>
bool proportional_mat(const Mat4<F>& a, const Mat4<F>& b) {
  std::array<F, 16> x, y;
  for (int i = 0; i < 16; ++i) {
    x[i] = a[i / 4][i % 4];
    y[i] = b[i / 4][i % 4];
  }
  return proportional_vec(x, y);
}

template <class F>
ProjPoint<F> map_point(const Projectivity<F>& m, const ProjPoint<F>& x) {
  return make_point(mat_vec(m.m, x.v));
}

template <class F>
PluckerLine<F> map_line(const Projectivity<F>& m, const PluckerLine<F>& l) {
  auto [a, b] = line_points(l);
  return line_from_points(map_point(m, a), map_point(m, b));
}

// Planes transform by the inverse transpose.
template <class F>
ProjPlane<F> map_plane(const Projectivity<F>& m, const ProjPlane<F>& pl) {
  auto inv = mat_inverse(m.m);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  return make_plane(mat_tvec(*inv, pl.v));
}

// The unique projectivity with M(l_i) = l'_i for two L-sets.
template <class F>
Projectivity<F> find_projectivity(const std::vector<PluckerLine<F>>& src, const std::vector<PluckerLine<F>>& dst) {
  if (src.size() < 5 || dst.size() < 5) throw Error(ErrorCode::InvalidArgument, "L-sets need five lines");
  const F& like = src[0].p[0];
  const F zero = FieldOps<F>::zero(like);
  std::vector<std::vector<F>> rows;
  rows.reserve(28);
  const int frame[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (const auto& fp : frame) {
    ProjPoint<F> p = meet_point(src[fp[0]], src[fp[1]]);
    ProjPoint<F> q = meet_point(dst[fp[0]], dst[fp[1]]);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (FieldOps<F>::is_zero(q.v[i]) && FieldOps<F>::is_zero(q.v[j])) continue;
        std::vector<F> row(16, zero);
        for (int c = 0; c < 4; ++c) {
          if (FieldOps<F>::is_zero(p.v[c])) continue;
          row[i * 4 + c] = p.v[c] * q.v[j];
          row[j * 4 + c] = -(p.v[c] * q.v[i]);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  auto [a, b] = line_points(src[4]);
  auto [s1, s2] = line_planes(dst[4]);
  for (const auto* x : {&a, &b}) {
    for (const auto* s : {&s1, &s2}) {
      std::vector<F> row(16, zero);
      for (int i = 0; i < 4; ++i) {
        for (int c = 0; c < 4; ++c) {
          if (!FieldOps<F>::is_zero(s->v[i]) && !FieldOps<F>::is_zero(x->v[c])) row[i * 4 + c] = s->v[i] * x->v[c];
        }
      }
      rows.push_back(std::move(row));
    }
  }
  auto ker = kernel(std::move(rows), 16, like);
  if (ker.size() != 1) {
    throw Error(ErrorCode::NonUniqueSolution, "kernel dimension " + std::to_string(ker.size()));
  }
  Projectivity<F> m;
  for (int i = 0; i < 16; ++i) m.m[i / 4][i % 4] = ker[0][i];
  if (!mat_inverse(m.m)) throw Error(ErrorCode::PostCheckFailed, "solution is singular");
  for (int k = 0; k < 5; ++k) {
    if (!(map_line(m, src[k]) == dst[k])) throw Error(ErrorCode::PostCheckFailed, "line " + std::to_string(k + 1));
  }
  return m;
}

template <class F>
std::string vec_str(const F* v, std::size_t n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + FieldOps<F>::str(v[i]);
  return s + "]";
}

template <class F>
std::string str(const ProjPoint<F>& x) {
  return vec_str(x.v.data(), 4);
}
template <class F>
std::string str(const ProjPlane<F>& x) {
  return vec_str(x.v.data(), 4);
}
template <class F>
std::string str(const PluckerLine<F>& x) {
  return vec_str(x.p.data(), 6);
}

}  // namespace cubic27
