#include <algorithm>
#include <random>

#include "cubic27/families.hpp"
#include "cubic27/parser.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

std::vector<int> ids(const std::vector<EckardtPoint<NfElem>>& pts) {
  std::vector<int> out;
  for (const auto& p : pts) out.push_back(p.triple_id);
  return out;
}

QPoly swap_ef(const QPoly& p) {
  return p.substitute(Var::E, parse_qpoly("t")).substitute(Var::F, parse_qpoly("e")).substitute(Var::T, parse_qpoly("f"));
}

const QCondition& q_condition(int index) {
  for (const auto& q : q_conditions()) {
    if (q.index == index) return q;
  }
  throw std::out_of_range("no such condition");
}

bool same_up_to_sign(const QPoly& a, const QPoly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("registry") {
  CHECK(families().size() == 12);
  CHECK(family("Se10").stab_order == 120);
  CHECK(family("Se9").field()->degree() == 2);
  CHECK(family("Se1pp").field()->degree() == 4);
  CHECK_THROWS_AS(family("Se7"), Error);
}

TEST_CASE("family equations agree with the reference table") {
  for (const auto& s : families()) {
    CAPTURE(s.name);
    CHECK(table_equation_matches(s));
  }
}

TEST_CASE("Eckardt sets of random members") {
  std::mt19937_64 rng(11);
  for (const auto& s : families()) {
    CAPTURE(s.name);
    for (int k = 0; k < (s.dim > 0 ? 3 : 1); ++k) {
      auto m = family_surface(s, sample_parameters(s, rng));
      CHECK(incidence_matches_labels(m.lines()));
      CHECK(ids(eckardt_points(m.lines())) == s.eckardt_ids);
    }
  }
}

TEST_CASE("parameter parsing and errors") {
  const auto& s = family("Se3");
  auto p = parse_params(s, "c=1, e=2, f=-5");
  CHECK(p.size() == 3);
  CHECK_THROWS_AS(parse_params(s, "d=1"), Error);
  CHECK_THROWS_AS(parse_params(s, "c=1,e="), Error);
  CHECK_THROWS_AS(family_parameters(s, parse_params(s, "c=1,e=2")), Error);
  CHECK_THROWS_AS(family_parameters(s, parse_params(s, "c=0,e=2,f=1")), Error);
  const auto& s9 = family("Se9");
  auto w = parse_params(s9, "c=1,f=2+w");
  CHECK(w.at(Var::F) == parse_nfelem("2+w", s9.field()));
}

TEST_CASE("singular members are rejected") {
  const auto& s = family("Se6");
  auto loc = singular_locus(s);
  std::vector<std::string> strs;
  for (const auto& f : loc) strs.push_back(f.str());
  std::sort(strs.begin(), strs.end());
  std::vector<std::string> want{"3*c + e", "5*c^2 + 2*c*e + e^2", "c", "c + e", "c - e"};
  std::sort(want.begin(), want.end());
  CHECK(strs == want);
  auto err = [&](const char* text) {
    try {
      family_surface(s, parse_params(s, text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(err("c=1,e=1") == ErrorCode::SingularMember);
  CHECK(err("c=1,e=-1") == ErrorCode::DenominatorVanishes);
  // Without the check the line construction itself breaks down.
  CHECK_THROWS_AS(family_surface(s, parse_params(s, "c=1,e=1"), false), Error);
  CHECK(singular_locus(family("Se10")).empty());
}

TEST_CASE("Eckardt conditions specialized to the three-point family") {
  const auto& gen = generic_eckardt_conditions();
  const auto& se3 = family("Se3");
  std::vector<QPoly> sp;
  for (int t = 0; t < kNumTriples; ++t) sp.push_back(specialize(gen[t], se3));
  for (int t : se3.eckardt_ids) CHECK(sp[t].is_zero());
  std::vector<QPoly> distinct;
  for (int t = 0; t < kNumTriples; ++t) {
    if (sp[t].is_zero()) continue;
    bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const QPoly& d) { return same_up_to_sign(d, sp[t]); });
    if (!seen) distinct.push_back(sp[t]);
  }
  CHECK(distinct.size() == 14);
  for (const auto& q : q_conditions()) {
    CAPTURE(q.index);
    std::vector<int> got;
    for (int t = 0; t < kNumTriples; ++t) {
      if (!sp[t].is_zero() && same_up_to_sign(sp[t], q.poly)) got.push_back(t);
    }
    CHECK(got == q.planes);
  }
}

TEST_CASE("swapping e and f pairs the conditions") {
  for (auto [a, b] : {std::pair{3, 4}, {7, 8}, {10, 11}, {12, 13}}) {
    CAPTURE(a);
    CHECK(same_up_to_sign(swap_ef(q_condition(a).poly), q_condition(b).poly));
  }
  for (int k : {1, 2, 5, 6, 9, 14}) CHECK(same_up_to_sign(swap_ef(q_condition(k).poly), q_condition(k).poly));
}

TEST_CASE("collinear Eckardt points") {
  std::mt19937_64 rng(5);
  {
    auto m = family_surface("Se3", sample_parameters(family("Se3"), rng));
    auto r = collinearity_report(eckardt_points(m.lines()));
    REQUIRE(r.collinear.size() == 1);
    CHECK(r.collinear[0] == std::vector<int>{2, 6, 33});
    CHECK_FALSE(r.common_plane);
  }
  {
    auto m = family_surface("Se6", sample_parameters(family("Se6"), rng));
    auto r = collinearity_report(eckardt_points(m.lines()));
    REQUIRE(r.common_plane);
    FieldRef k = family("Se6").field();
    CHECK(*r.common_plane == make_plane<NfElem>({k->one(), k->zero(), k->zero(), k->zero()}));
  }
  {
    const auto& s = family("Se9");
    FieldRef k = s.field();
    auto m = family_surface(s, sample_parameters(s, rng));
    auto r = collinearity_report(eckardt_points(m.lines()));
    REQUIRE(r.common_plane);
    // (1 - sqrt(-3)) x - y + z with sqrt(-3) = w - 1.
    CHECK(*r.common_plane == make_plane<NfElem>({parse_nfelem("2 - w", k), -k->one(), k->one(), k->zero()}));
  }
}

TEST_CASE("sum of five cubes") {
  auto m = family_surface("Se10", {});
  auto w = sylvester_weights(m.surface.form);
  REQUIRE(w);
  FieldRef k = family("Se10").field();
  std::array<NfElem, 5> ratio{k->one(), NfElem(k, -8), -k->one(), k->one(), k->one()};
  CHECK(proportional_vec(*w, ratio));
  CHECK(sylvester_check(m.surface.form));
  auto planes = tritangent_planes(m.lines());
  const int taus[5] = {1, 5, 12, 16, 36};
  for (int j = 0; j < 5; ++j) {
    const auto& f = sylvester_forms(k)[j];
    std::array<NfElem, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = f.derivative(i).constant_value();
    bool found = false;
    for (int t : taus) found = found || planes[t] == make_plane<NfElem>(v);
    CHECK(found);
  }
  CHECK_FALSE(sylvester_check(family_surface("Se3", parse_params(family("Se3"), "c=1,e=2,f=5")).surface.form));
}

TEST_CASE("equivalence witnesses") {
  for (const char* name : {"identity", "T0T1", "T0T2", "Se9pair"}) {
    CAPTURE(name);
    auto kind = parse_witness_kind(name);
    const FamilySpec& src = kind == WitnessKind::T0T1   ? aux_family("T1")
                            : kind == WitnessKind::T0T2 ? aux_family("T2")
                            : kind == WitnessKind::Se9Pair ? family("Se9")
                                                           : family("Se0");
    std::mt19937_64 rng(17);
    for (int k = 0; k < 2; ++k) {
      auto w = equivalence_witness(kind, sample_parameters(src, rng));
      CHECK(proportional_vec(map_cubic(w.matrix, w.source.surface.form), w.image));
    }
  }
  CHECK_THROWS_AS(parse_witness_kind("bogus"), Error);
}

TEST_CASE("L-sets with a prescribed Eckardt pattern") {
  auto l = lset_with_pattern({2, 6, 33, 36});
  REQUIRE(l);
  CHECK_FALSE(lset_with_pattern({0, 1, 2, 3}));
}
