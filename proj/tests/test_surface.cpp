#include <random>

#include "cubic27/parser.hpp"
#include "cubic27/surface.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

constexpr const char* kNormalForm =
    "b*c*(t-x)*(x*z+y*t) + c^2*(z+t)*(x*z-y*t) - c*d*(y-z)*(x*z+y*t) + c*(e+f)*(x-y)*(x*z-y*t)"
    " - e*f*(2x^2*y - 2x*y^2 + x*z^2 - x*z*t + y*z*t - y*t^2)";

FieldRef q() { return NumberField::rationals(); }

QRatFunc rf(const char* s) { return QRatFunc(parse_qpoly(s)); }

CubicForm<QRatFunc> symbolic_form() {
  return cubic_from_poly<QRatFunc>(parse_qpoly(kNormalForm), rf("0"), [](const QPoly& c) { return QRatFunc(c); });
}

std::array<PluckerLine<QRatFunc>, 6> symbolic_extended() {
  auto l = basic_lset_lines(rf("0"));
  return {l[0], l[1], l[2], l[3], l[4], sixth_line(rf("b"), rf("c"), rf("d"), rf("e"), rf("f"))};
}

const LineTable<QRatFunc>& symbolic_lines() {
  static const LineTable<QRatFunc> t = lines_from_extended(symbolic_form(), symbolic_extended());
  return t;
}

struct Numeric {
  CubicForm<NfElem> form;
  std::array<PluckerLine<NfElem>, 6> ext;
};

Numeric numeric(std::array<long, 5> p) {
  std::array<NfElem, 5> v;
  for (int i = 0; i < 5; ++i) v[i] = NfElem(q(), p[i]);
  std::array<const NfElem*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[4 + i] = &v[i];
  NfPoly f = parse_nfpoly(kNormalForm, q()).partial_evaluate(vals);
  Numeric n{cubic_from_poly<NfElem>(f, q()->zero(), [](const NfPoly& c) { return c.constant_value(); }), {}};
  auto l = basic_lset_lines(q()->zero());
  n.ext = {l[0], l[1], l[2], l[3], l[4], sixth_line(v[0], v[1], v[2], v[3], v[4])};
  return n;
}

// Members with Sigma_0 != 0 found by construction succeeding; fixed list for determinism.
const std::vector<std::array<long, 5>> kSamples = {{3, 2, 5, 7, -4}, {-2, 3, 1, 5, 11}, {1, 4, -3, 2, 9}};

}  // namespace

TEST_CASE("basic lines lie on the symbolic normal form") {
  auto form = symbolic_form();
  for (const auto& l : symbolic_extended()) CHECK(line_on_surface(form, l));
  auto off = line_from_points(make_point<QRatFunc>({rf("1"), rf("0"), rf("0"), rf("0")}),
                              make_point<QRatFunc>({rf("0"), rf("1"), rf("0"), rf("1")}));
  CHECK_FALSE(line_on_surface(form, off));
}

TEST_CASE("sixth line") {
  auto e5 = symbolic_extended()[5];
  auto l = basic_lset_lines(rf("0"));
  CHECK(lines_meet(e5, l[1]));
  CHECK(lines_meet(e5, l[3]));
  CHECK_FALSE(lines_meet(e5, l[0]));
  CHECK_FALSE(lines_meet(e5, l[2]));
  CHECK_FALSE(lines_meet(e5, l[4]));
  auto e6 = sixth_line(rf("b"), rf("c"), rf("d"), rf("f"), rf("e"));
  CHECK(e6 != e5);
  CHECK(line_on_surface(symbolic_form(), e6));
  CHECK(lines_meet(e6, l[1]));
  CHECK(lines_meet(e6, l[3]));
  // c + f = 0 and cd - cf - ef = 0.
  auto n = [](long v) { return NfElem(q(), v); };
  CHECK_THROWS_AS(sixth_line(n(1), n(1), n(-3), n(2), n(-1)), Error);
}

TEST_CASE("residue of E1 and G4") {
  auto form = symbolic_form();
  auto l = basic_lset_lines(rf("0"));
  auto r = residue_line(form, l[0], l[1]);
  std::array<QRatFunc, 6> expect{rf("0"), rf("b*c+c^2+e*f"), rf("-c^2-c*d+e*f"), rf("0"), rf("0"), rf("c*(-b+e+f)")};
  CHECK(proportional_vec(r.p, expect));
  CHECK(residue_line(form, l[0], r) == l[1]);
  CHECK_THROWS_AS(residue_line(form, l[0], l[2]), Error);
  CHECK_THROWS_AS(residue_line(form, l[0], l[0]), Error);
}

TEST_CASE("symbolic 27 lines") {
  const auto& t = symbolic_lines();
  auto form = symbolic_form();
  auto ext = symbolic_extended();
  CHECK(t[e_line(1)] == ext[0]);
  CHECK(t[g_line(4)] == ext[1]);
  CHECK(t[e_line(2)] == ext[2]);
  CHECK(t[g_line(3)] == ext[3]);
  CHECK(t[e_line(3)] == ext[4]);
  CHECK(t[e_line(5)] == ext[5]);
  for (const auto& l : t) CHECK(line_on_surface(form, l));
  CHECK(incidence_matches_labels(t));
  CHECK(residue_line(form, t[g_line(4)], t[e_line(3)]) == t[f_line(3, 4)]);
  CHECK(eckardt_condition(t, 2) == parse_qpoly("b*c + c^2 + e*f"));
  CHECK(eckardt_condition(t, 7) == parse_qpoly("c^2 - c*d + e*f"));
  CHECK(eckardt_points(t).empty());
}

TEST_CASE("numeric members agree with the symbolic construction") {
  const auto& sym = symbolic_lines();
  for (const auto& p : kSamples) {
    auto n = numeric(p);
    auto t = lines_from_extended(n.form, n.ext);
    CHECK(incidence_matches_labels(t));
    int meets = 0;
    for (int a = 0; a < kNumLines; ++a) {
      for (int b = 0; b < kNumLines; ++b) meets += a != b && lines_meet(t[a], t[b]);
    }
    CHECK(meets == 27 * 10);
    std::array<NfElem, 5> v;
    for (int i = 0; i < 5; ++i) v[i] = NfElem(q(), p[i]);
    std::array<const NfElem*, kNumVars> vals{};
    for (int i = 0; i < 5; ++i) vals[4 + i] = &v[i];
    auto spec = [&](const QRatFunc& x) {
      auto conv = [](const Rational& r) { return NfElem(q(), r); };
      return x.num().evaluate(vals, q()->zero(), conv) * x.den().evaluate(vals, q()->zero(), conv).inverse();
    };
    for (int k = 0; k < kNumLines; ++k) {
      std::array<NfElem, 6> s;
      for (int i = 0; i < 6; ++i) s[i] = spec(sym[k].p[i]);
      CHECK(proportional_vec(s, t[k].p));
    }
    auto planes = tritangent_planes(t);
    for (int a = 0; a < kNumTriples; ++a) {
      for (int b = a + 1; b < kNumTriples; ++b) CHECK(planes[a] != planes[b]);
    }
    for (int k = 0; k < kNumLines; ++k) {
      int in = 0;
      for (const auto& pl : planes) in += line_in_plane(t[k], pl);
      CHECK(in == 5);
    }
  }
}

TEST_CASE("one Eckardt point at tau3") {
  // bc + c^2 + ef = 0 with b = -(c^2 + ef)/c: c = 1, e = 2, f = 3, b = -7.
  auto n = numeric({-7, 1, 4, 2, 3});
  auto t = lines_from_extended(n.form, n.ext);
  auto ek = eckardt_points(t);
  REQUIRE(ek.size() == 1);
  CHECK(ek[0].triple_id == 2);
  for (int i : triples()[2]) CHECK(point_on_line(ek[0].point, t[i]));
}
