#include <random>

#include "cubic27/cubic_form.hpp"
#include "cubic27/parser.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

using Pt = ProjPoint<NfElem>;
using Ln = PluckerLine<NfElem>;

FieldRef q() { return NumberField::rationals(); }

Pt pt(long a, long b, long c, long d) { return make_point<NfElem>({NfElem(q(), a), NfElem(q(), b), NfElem(q(), c), NfElem(q(), d)}); }

std::array<NfElem, 6> pl(std::array<long, 6> v) {
  std::array<NfElem, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = NfElem(q(), v[i]);
  return out;
}

std::vector<Ln> basic_lines() {
  return {line_from_points(pt(1, 0, 0, 0), pt(0, 0, 0, 1)), line_from_points(pt(0, 0, 1, 0), pt(0, 0, 0, 1)),
          line_from_points(pt(0, 1, 0, 0), pt(0, 0, 1, 0)), line_from_points(pt(1, 0, 0, 1), pt(0, 1, 1, 0)),
          line_from_points(pt(1, 1, 0, 0), pt(0, 0, 1, -1))};
}

Mat4<NfElem> random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  for (;;) {
    Mat4<NfElem> m;
    for (auto& row : m) {
      for (auto& x : row) x = NfElem(q(), d(rng));
    }
    if (mat_inverse(m)) return m;
  }
}

}  // namespace

TEST_CASE("Pluecker coordinates of the basic lines") {
  auto l = basic_lines();
  CHECK(l[0].p == pl({0, 0, 1, 0, 0, 0}));
  CHECK(l[1].p == pl({0, 0, 0, 0, 0, 1}));
  CHECK(line_from_points(pt(0, 0, 0, 1), pt(1, 0, 0, 0)) == l[0]);
  for (const auto& x : l) CHECK(pluecker_relation_holds(x));
  CHECK_THROWS_AS(line_from_points(pt(1, 2, 3, 4), pt(2, 4, 6, 8)), Error);
}

TEST_CASE("incidence and meets") {
  auto l = basic_lines();
  CHECK(lines_meet(l[0], l[1]));
  CHECK(pluecker_pairing(l[0], l[2]) == NfElem(q(), 1));
  CHECK_FALSE(lines_meet(l[0], l[2]));
  for (const auto& a : l) {
    CHECK(lines_meet(a, a));
    for (const auto& b : l) CHECK(lines_meet(a, b) == lines_meet(b, a));
  }
  CHECK(meet_point(l[0], l[1]) == pt(0, 0, 0, 1));
  CHECK(span_plane(l[0], l[1]) == make_plane<NfElem>({q()->zero(), q()->one(), q()->zero(), q()->zero()}));
  CHECK_THROWS_AS(meet_point(l[0], l[2]), Error);
  CHECK_THROWS_AS(meet_point(l[0], l[0]), Error);
}

TEST_CASE("dual matrix sign convention") {
  // Rows of L* vanish on points of the line; L * plane lies on the plane and on the line.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int k = 0; k < 50; ++k) {
    Pt a = pt(d(rng), d(rng), d(rng), 1), b = pt(1, d(rng), d(rng), d(rng));
    if (a == b) continue;
    Ln l = line_from_points(a, b);
    CHECK(point_on_line(a, l));
    CHECK(point_on_line(b, l));
    auto [p1, p2] = line_planes(l);
    CHECK(line_from_planes(p1, p2) == l);
    CHECK(point_on_plane(a, p1));
    CHECK(point_on_plane(b, p2));
    CHECK_FALSE(point_on_line(pt(d(rng), 3, 1, d(rng) + 20), l));
  }
}

TEST_CASE("L-set pattern") {
  auto l = basic_lines();
  CHECK(is_lset(l));
  auto bad = l;
  std::swap(bad[0], bad[4]);
  CHECK_FALSE(is_lset(bad));
  CHECK_FALSE(is_lset(std::vector<Ln>(5, l[0])));
  // The misprinted fourth line V(x - z, y - z) meets l2 and breaks the pattern.
  auto misprint = l;
  misprint[3] = line_from_points(pt(1, 1, 1, 0), pt(0, 0, 0, 1));
  CHECK_FALSE(is_lset(misprint));
}

TEST_CASE("find_projectivity recovers random matrices") {
  auto base = basic_lines();
  Projectivity<NfElem> id = find_projectivity(base, base);
  CHECK(proportional_mat(id.m, identity_matrix(q()->one())));
  std::mt19937 rng(17);
  for (int k = 0; k < 100; ++k) {
    Projectivity<NfElem> n{random_matrix(rng)};
    std::vector<Ln> img;
    for (const auto& l : base) img.push_back(map_line(n, l));
    CHECK(is_lset(img));
    auto m = find_projectivity(base, img);
    CHECK(proportional_mat(m.m, n.m));
    auto back = find_projectivity(img, base);
    CHECK(proportional_mat(mat_mul(back.m, m.m), identity_matrix(q()->one())));
  }
}

TEST_CASE("projectivities act compatibly") {
  std::mt19937 rng(23);
  auto base = basic_lines();
  for (int k = 0; k < 20; ++k) {
    Projectivity<NfElem> m{random_matrix(rng)}, n{random_matrix(rng)};
    Projectivity<NfElem> mn{mat_mul(m.m, n.m)};
    for (const auto& l : base) CHECK(map_line(mn, l) == map_line(m, map_line(n, l)));
    CHECK(lines_meet(map_line(m, base[0]), map_line(m, base[1])));
    auto plane = span_plane(base[0], base[1]);
    CHECK(map_plane(m, plane) == span_plane(map_line(m, base[0]), map_line(m, base[1])));
  }
}

TEST_CASE("cubic forms") {
  QPoly f = parse_qpoly("x^2*y - y*z*t + 3t^3");
  auto form = cubic_from_poly<NfElem>(f, q()->zero(), [](const QPoly& c) { return NfElem(q(), c.constant_value()); });
  CHECK(form[1] == NfElem(q(), 1));
  CHECK(form[19] == NfElem(q(), 3));
  CHECK(evaluate(form, pt(1, 2, 3, 1).v) == NfElem(q(), 2 - 6 + 3));
  // The line V(y, t) lies on x^2 y - yzt; V(z, t) does not.
  QPoly g = parse_qpoly("x^2*y - y*z*t");
  auto gf = cubic_from_poly<NfElem>(g, q()->zero(), [](const QPoly& c) { return NfElem(q(), c.constant_value()); });
  CHECK(line_on_cubic(gf, line_from_points(pt(1, 0, 0, 0), pt(0, 0, 1, 0))));
  CHECK_FALSE(line_on_cubic(gf, line_from_points(pt(1, 0, 0, 0), pt(0, 1, 0, 0))));
  std::mt19937 rng(29);
  Projectivity<NfElem> m{random_matrix(rng)};
  auto moved = map_cubic(m, gf);
  Pt x = pt(2, -1, 3, 5);
  CHECK(evaluate(moved, mat_vec(m.m, x.v)) == evaluate(gf, x.v));
  CHECK(proportional_vec(compose(moved, m.m), gf));
}
