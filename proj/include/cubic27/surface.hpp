#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubic27/cubic_form.hpp"
#include "cubic27/lines27.hpp"

namespace cubic27 {

template <class F>
using LineTable = std::array<PluckerLine<F>, kNumLines>;

template <class F>
struct CubicSurface {
  CubicForm<F> form;
  std::optional<LineTable<F>> lines;
};

template <class F>
struct EckardtPoint {
  int triple_id;  // 0-based
  ProjPoint<F> point;
};

template <class F>
bool line_on_surface(const CubicForm<F>& form, const PluckerLine<F>& l) {
  return line_on_cubic(form, l);
}

// Third line of the tritangent plane through two meeting lines r, s of the surface.
template <class F>
PluckerLine<F> residue_line(const CubicForm<F>& form, const PluckerLine<F>& r, const PluckerLine<F>& s) {
  if (r == s || !lines_meet(r, s)) throw Error(ErrorCode::NotIncident, "residue needs two distinct meeting lines");
  ProjPoint<F> p0 = meet_point(r, s);
  auto other = [&](const PluckerLine<F>& l) {
    auto [a, b] = line_points(l);
    return a == p0 ? b : a;
  };
  ProjPoint<F> p1 = other(r), p2 = other(s);
  std::array<std::array<F, 3>, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = {p0.v[i], p1.v[i], p2.v[i]};
  // Plane coordinates (u, v, w): r is w = 0, s is v = 0.
  auto g = pullback<F, 3>(form, a);
  // Slots: u^3 u^2v u^2w uv^2 uvw uw^2 v^3 v^2w vw^2 w^3.
  for (int k : {0, 1, 2, 3, 5, 6, 9}) {
    if (!FieldOps<F>::is_zero(g[k])) throw Error(ErrorCode::NotOnSurface, "input line is not on the surface");
  }
  const F& ca = g[4];
  const F& cb = g[7];
  const F& cc = g[8];
  const F z = FieldOps<F>::zero(ca), one = FieldOps<F>::one(ca);
  std::array<std::array<F, 3>, 2> kernel;
  if (!FieldOps<F>::is_zero(ca)) {
    kernel = {{{-cb, ca, z}, {-cc, z, ca}}};
  } else if (!FieldOps<F>::is_zero(cb)) {
    kernel = {{{one, z, z}, {z, -cc, cb}}};
  } else if (!FieldOps<F>::is_zero(cc)) {
    kernel = {{{one, z, z}, {z, one, z}}};
  } else {
    throw Error(ErrorCode::DivisionFailed, "plane section is not a product of three lines");
  }
  std::array<Vec4<F>, 2> pts;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 4; ++i) {
      F x = z;
      for (int j = 0; j < 3; ++j) {
        if (!FieldOps<F>::is_zero(kernel[k][j]) && !FieldOps<F>::is_zero(a[i][j])) x = x + kernel[k][j] * a[i][j];
      }
      pts[k][i] = std::move(x);
    }
  }
  return line_from_points(make_point(pts[0]), make_point(pts[1]));
}

// The basic L-set V(y,z), V(x,y), V(x,t), V(x-t, y-z), V(x-y, z+t).
template <class F>
std::vector<PluckerLine<F>> basic_lset_lines(const F& like) {
  auto pt = [&](long a, long b, long c, long d) {
    return make_point<F>({FieldOps<F>::from_rational(like, a), FieldOps<F>::from_rational(like, b),
                          FieldOps<F>::from_rational(like, c), FieldOps<F>::from_rational(like, d)});
  };
  return {line_from_points(pt(1, 0, 0, 0), pt(0, 0, 0, 1)), line_from_points(pt(0, 0, 1, 0), pt(0, 0, 0, 1)),
          line_from_points(pt(0, 1, 0, 0), pt(0, 0, 1, 0)), line_from_points(pt(1, 0, 0, 1), pt(0, 1, 1, 0)),
          line_from_points(pt(1, 1, 0, 0), pt(0, 0, 1, -1))};
}

// E5 of the normal form with parameters (b, c, d, e, f); swapping e and f gives the other extension.
template <class F>
PluckerLine<F> sixth_line(const F& b, const F& c, const F& d, const F& e, const F& f) {
  F p = c * d - c * f - e * f;  // cd - cf - ef
  F q = b * c - c * f + e * f;  // bc - cf + ef
  F z = FieldOps<F>::zero(c);
  std::array<F, 6> v{z,
                     (f - c) * p * q,
                     (c - f) * p * p,
                     (c + f) * q * q,
                     -((c + f) * p * q),
                     -(FieldOps<F>::from_rational(c, 2) * f * p * q)};
  if (!FieldOps<F>::normalize(v)) throw Error(ErrorCode::DegenerateParameters, "sixth line vanishes");
  PluckerLine<F> l{std::move(v)};
  if (!pluecker_relation_holds(l)) throw Error(ErrorCode::DegenerateParameters, "sixth line is not a line");
  return l;
}

// All 27 lines from an extended L-set labeled (E1, G4, E2, G3, E3, E5).
template <class F>
LineTable<F> lines_from_extended(const CubicForm<F>& form, const std::array<PluckerLine<F>, 6>& le) {
  for (const auto& l : le) {
    if (!line_on_surface(form, l)) throw Error(ErrorCode::NotOnSurface, "extended L-set line not on surface");
  }
  auto slots = run_residuation(le, [&](const PluckerLine<F>& a, const PluckerLine<F>& b) {
    return residue_line(form, a, b);
  });
  static const auto labels = residuation_slots(basic_extended_lset());
  LineTable<F> table;
  for (int k = 0; k < kNumLines; ++k) table[labels[k]] = std::move(slots[k]);
  for (int a = 0; a < kNumLines; ++a) {
    for (int b = a + 1; b < kNumLines; ++b) {
      if (table[a] == table[b]) throw Error(ErrorCode::DuplicateLines, line_name(a) + " = " + line_name(b));
    }
  }
  return table;
}

template <class F>
bool incidence_matches_labels(const LineTable<F>& lines) {
  for (int a = 0; a < kNumLines; ++a) {
    for (int b = a + 1; b < kNumLines; ++b) {
      if (lines_meet(lines[a], lines[b]) != labels_meet(a, b)) return false;
    }
  }
  return true;
}

template <class F>
std::array<ProjPlane<F>, kNumTriples> tritangent_planes(const LineTable<F>& lines) {
  std::array<ProjPlane<F>, kNumTriples> out;
  for (int t = 0; t < kNumTriples; ++t) {
    const Triple& tr = triples()[t];
    out[t] = span_plane(lines[tr[0]], lines[tr[1]]);
    if (!line_in_plane(lines[tr[2]], out[t])) throw Error(ErrorCode::NotCoplanar, "tau" + std::to_string(t + 1));
  }
  return out;
}

template <class F>
bool is_eckardt(const LineTable<F>& lines, int t) {
  const Triple& tr = triples()[t];
  return point_on_line(meet_point(lines[tr[0]], lines[tr[1]]), lines[tr[2]]);
}

template <class F>
std::vector<EckardtPoint<F>> eckardt_points(const LineTable<F>& lines) {
  std::vector<EckardtPoint<F>> out;
  for (int t = 0; t < kNumTriples; ++t) {
    const Triple& tr = triples()[t];
    ProjPoint<F> p = meet_point(lines[tr[0]], lines[tr[1]]);
    if (point_on_line(p, lines[tr[2]])) out.push_back({t, std::move(p)});
  }
  return out;
}

// Polynomial in b..f whose vanishing makes triple t concurrent: gcd of the entries of L*_c P with
// P the meet of the first two lines, after clearing denominators. Returns 1 when no hypersurface does it.
inline QPoly eckardt_condition(const LineTable<QRatFunc>& lines, int t) {
  const Triple& tr = triples()[t];
  ProjPoint<QRatFunc> p = meet_point(lines[tr[0]], lines[tr[1]]);
  std::array<QRatFunc, 4> v = mat_vec(dual_matrix(lines[tr[2]]), p.v);
  QPoly g;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.num() : gcd(g, x.num());
  }
  if (g.is_zero()) return g;
  return primitive_integral(g);
}

// Transport attached lines along a projectivity.
template <class F>
CubicSurface<F> map_surface(const Projectivity<F>& m, const CubicSurface<F>& s) {
  CubicSurface<F> out{map_cubic(m, s.form), std::nullopt};
  if (s.lines) {
    LineTable<F> t;
    for (int k = 0; k < kNumLines; ++k) t[k] = map_line(m, (*s.lines)[k]);
    out.lines = std::move(t);
  }
  return out;
}

}  // namespace cubic27
