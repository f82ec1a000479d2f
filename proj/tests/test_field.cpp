#include <random>

#include "cubic27/parser.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

FieldRef sqrt_m3() { return NumberField::create("w", {3, 0, 1}); }

QPoly random_qpoly(std::mt19937& rng, std::uint32_t vars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, max_deg);
  std::vector<QPoly::Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Exponents e{};
    int budget = max_deg;
    for (int v = 0; v < kNumVars; ++v) {
      if (!(vars >> v & 1u)) continue;
      int k = std::min(deg(rng), budget);
      e[v] = static_cast<std::uint16_t>(k);
      budget -= k;
    }
    terms.push_back({e, Rational(coef(rng))});
  }
  return QPoly::from_terms({}, terms);
}

}  // namespace

TEST_CASE("number field arithmetic") {
  FieldRef k = sqrt_m3();
  NfElem w = k->gen();
  CHECK(w * w == NfElem(k, -3));
  NfElem one = k->one();
  CHECK((one + w) * (one - w) == NfElem(k, 4));
  CHECK((one + w).inverse() * (one + w) == one);

  FieldRef gi = NumberField::create("w", {2, 2, 1});  // w = i - 1
  NfElem i = gi->gen() + gi->one();
  CHECK(i * i == NfElem(gi, -1));
  NfElem inv = (gi->one() + i).inverse();
  CHECK(inv == (gi->one() - i) * Rational(1, 2));

  FieldRef q4 = NumberField::create("w", {16, 0, -4, 0, 1});
  NfElem v = q4->gen();
  CHECK(v * v * v * v == NfElem(q4, 4) * v * v - NfElem(q4, 16));
  CHECK(v.inverse() * v == q4->one());
}

TEST_CASE("number field validation") {
  CHECK_THROWS_AS(NumberField::create("w", {-1, 0, 1}), Error);  // t^2 - 1 has rational roots
  try {
    NumberField::create("w", {1, 2, 1});
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquarefree);
  }
  try {
    NumberField::create("w", {-2, 1, 0, 1});  // t^3 + t - 2 has root 1
    FAIL("expected RationalRootFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RationalRootFound);
  }
  CHECK_THROWS_AS(NumberField::create("w", {1, 2}), Error);  // not monic
  CHECK(NumberField::create("w", {3, 0, 1}) == sqrt_m3());
  CHECK_THROWS_AS(sqrt_m3()->zero().inverse(), Error);
  FieldRef other = NumberField::create("w", {1, 0, 1});
  CHECK_THROWS_AS(sqrt_m3()->gen() + other->gen(), Error);
}

TEST_CASE("parser and printer") {
  QPoly p = parse_qpoly("2xy - 3(x+y)^2 + 1/2");
  CHECK(p.str() == "-3*x^2 - 4*x*y - 3*y^2 + 1/2");
  CHECK(parse_qpoly(p.str()) == p);
  FieldRef k = sqrt_m3();
  NfPoly q = parse_nfpoly("(w+1)*c - w e", k);
  CHECK(q.str() == "(w + 1)*c - w*e");
  CHECK(parse_nfpoly(q.str(), k) == q);
  CHECK(parse_nfelem("w^2", k) == NfElem(k, -3));
  CHECK_THROWS_AS(parse_qpoly("x + "), Error);
  CHECK_THROWS_AS(parse_qpoly("x / 0"), Error);
  CHECK_THROWS_AS(parse_qpoly("q"), Error);
  auto r = parse_ratfunc("-(c^2+e*f)/c", NumberField::rationals());
  CHECK(r.den().str() == "c");
  CHECK(r.num().str() == "-c^2 - e*f");
}

TEST_CASE("deg-lex order") {
  QPoly p = parse_qpoly("f + x + y^2 + x*t + b^3");
  CHECK(p.str() == "b^3 + x*t + y^2 + x + f");
}

TEST_CASE("exact division round trip") {
  std::mt19937 rng(7);
  const std::uint32_t vars = (1u << X) | (1u << Y) | (1u << C) | (1u << E) | (1u << F);
  for (int i = 0; i < 200; ++i) {
    QPoly a = random_qpoly(rng, vars, 3, 5), b = random_qpoly(rng, vars, 3, 4);
    if (b.is_zero()) continue;
    QPoly prod = a * b;
    auto q = exact_div(prod, b);
    REQUIRE(q);
    CHECK(*q == a);
    if (!b.is_constant()) {
      QPoly shifted = prod + QPoly::constant({}, 1);
      CHECK_FALSE(exact_div(shifted, b).has_value());
    }
  }
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937 rng(11);
  const std::uint32_t vars = (1u << B) | (1u << C) | (1u << D) | (1u << E) | (1u << F);
  for (int i = 0; i < 40; ++i) {
    QPoly g = random_qpoly(rng, vars, 2, 3), p = random_qpoly(rng, vars, 2, 3), q = random_qpoly(rng, vars, 2, 3);
    if (g.is_zero() || p.is_zero() || q.is_zero()) continue;
    QPoly a = g * p, b = g * q;
    QPoly h = gcd(a, b);
    CHECK(exact_div(a, h).has_value());
    CHECK(exact_div(b, h).has_value());
    CHECK(exact_div(h, g.monic()).has_value());
    // Cofactors are coprime.
    QPoly ca = *exact_div(a, h), cb = *exact_div(b, h);
    CHECK(gcd(ca, cb).is_one());
  }
}

TEST_CASE("gcd over a number field") {
  FieldRef k = sqrt_m3();
  NfPoly a = parse_nfpoly("(c - w e)*(c + e)^2", k), b = parse_nfpoly("(c - w e)*(c - e)*(c+e)", k);
  NfPoly g = gcd(a, b);
  CHECK(g == parse_nfpoly("(c - w e)*(c + e)", k).monic());
}

TEST_CASE("rational functions") {
  FieldRef q = NumberField::rationals();
  auto r = parse_ratfunc("(c^2 - e^2)/(c - e) + 1/c", q);
  auto expected = parse_ratfunc("(c^2 + c e + 1)/c", q);
  CHECK(r.num() == expected.num());
  CHECK(r.den() == expected.den());
  QRatFunc a(parse_qpoly("c+e"), parse_qpoly("c*f")), b(parse_qpoly("f"), parse_qpoly("c+e"));
  CHECK(a * b == QRatFunc(QPoly::constant({}, 1), parse_qpoly("c")));
  CHECK((a - a).is_zero());
  CHECK(a / a == QRatFunc::constant({}, 1));
}

TEST_CASE("proportionality with parameter scalars") {
  QPoly p = parse_qpoly("(c+e)*(x^2 - y t)"), q = parse_qpoly("c*(x^2 - y t)");
  CHECK(proportional(p, q, kCoordMask));
  CHECK_FALSE(proportional(p, q));
  CHECK_FALSE(proportional(p, parse_qpoly("x^2 + y t"), kCoordMask));
  CHECK(proportional(parse_qpoly("2x - 4y"), parse_qpoly("-x + 2y")));
}

TEST_CASE("squarefree part") {
  QPoly p = parse_qpoly("(c - e)^2 * (c + 2 e) * c^3");
  CHECK(squarefree_part(p) == parse_qpoly("(c - e)*(c + 2e)*c").monic());
}
