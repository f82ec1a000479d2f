#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cubic27/parser.hpp"
#include "cubic27/stabilizer.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

// "(E1, F14, G4)(E2, G3)" -> permutation.
Perm named_cycles(const std::string& text) {
  Perm p = identity_perm();
  std::string body;
  for (char ch : text) body += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  for (std::size_t open = text.find('('); open != std::string::npos; open = text.find('(', pos)) {
    pos = text.find(')', open);
    std::istringstream in(body.substr(open, pos - open));
    std::vector<int> c;
    for (std::string name; in >> name;) c.push_back(parse_line(name));
    cycles.push_back(c);
  }
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  }
  return p;
}

std::vector<int> lines_named(std::initializer_list<const char*> names) {
  std::vector<int> v;
  for (const char* n : names) v.push_back(parse_line(n));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> taus(std::initializer_list<int> one_based) {
  std::vector<int> v;
  for (int t : one_based) v.push_back(t - 1);
  std::sort(v.begin(), v.end());
  return v;
}

StabilizerGroup sample(const char* name, std::uint64_t seed, int jobs = 1) {
  std::mt19937_64 rng(seed);
  return compute_stabilizer(name, sample_parameters(family(name), rng), jobs);
}

}  // namespace

TEST_CASE("reference models") {
  std::map<int, std::vector<GroupFingerprint>> by_order;
  for (const auto& label : structure_labels()) {
    auto g = reference_model(label);
    auto f = group_fingerprint(g);
    int total = 0;
    for (auto [o, n] : f.element_orders) total += n;
    CHECK(total == f.order);
    CHECK(f.element_orders.at(1) == 1);
    by_order[f.order].push_back(f);
  }
  for (const auto& [order, fps] : by_order) {
    for (std::size_t i = 0; i < fps.size(); ++i) {
      for (std::size_t j = i + 1; j < fps.size(); ++j) CHECK_FALSE(fps[i] == fps[j]);
    }
  }
  CHECK(reference_model("((C3 x C3) : C3) : C2").size() == 54);
  CHECK(reference_model("((C_3 × C_3) ⋊ C_3) ⋊ C_4").size() == 108);
  CHECK(reference_model("(C3 x C3 x C3) : S4").size() == 648);
  CHECK(reference_model("S_5").size() == 120);
  CHECK_THROWS_AS(reference_model("A5"), Error);
  auto c8 = group_fingerprint(reference_model("C8"));
  CHECK(c8.element_orders == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}, {8, 4}});
}

TEST_CASE("group invariants of computed stabilizers") {
  for (const char* name : {"Se1", "Se2", "Se3", "Se4", "Se6", "Se10"}) {
    CAPTURE(name);
    const FamilySpec& s = family(name);
    auto g = sample(name, 3);
    CHECK(g.candidate_count == s.candidate_count);
    CHECK(g.order() == s.stab_order);
    CHECK((2 * 2 * 2 * 2 * 2 * 2 * 2 * 81 * 5) % g.order() == 0);
    CHECK(match_structure(g.perms(), s.structure));
    std::set<Perm> distinct;
    std::set<int> eck(s.eckardt_ids.begin(), s.eckardt_ids.end());
    const auto& lines = g.member.lines();
    std::vector<PluckerLine<NfElem>> base;
    for (int l : basic_lset()) base.push_back(lines[l]);
    for (const auto& e : g.elements) {
      distinct.insert(e.perm);
      CHECK(preserves_incidence(e.perm));
      auto act = triple_action(e.perm);
      for (int t : s.eckardt_ids) CHECK(eck.count(act[t]));
      std::vector<PluckerLine<NfElem>> img;
      for (int l : lset_image(e.perm)) img.push_back(lines[l]);
      CHECK(proportional_mat(find_projectivity(base, img).m, e.matrix.m));
      CHECK(proportional_vec(map_cubic(e.matrix, g.member.surface.form), g.member.surface.form));
    }
    CHECK(distinct.size() == g.elements.size());
    CHECK(g.elements.front().perm == identity_perm());
  }
}

TEST_CASE("orders are stable across members") {
  for (const char* name : {"Se1", "Se3", "Se4", "Se6"}) {
    for (std::uint64_t seed : {7, 8}) CHECK(sample(name, seed).order() == family(name).stab_order);
  }
}

TEST_CASE("threads do not change the result") {
  auto a = sample("Se6", 5, 1), b = sample("Se6", 5, 3);
  CHECK(a.perms() == b.perms());
}

TEST_CASE("admissible group of the six-point family") {
  CHECK(admissible_subgroup(family("Se6").eckardt_ids).elements.size() == 96);
}

TEST_CASE("generators of the one-point family") {
  auto g = sample("Se1", 1);
  auto rep = generator_report(g);
  REQUIRE(rep.generators.size() == 1);
  const Perm& p = rep.generators[0];
  CHECK(cycle_type(p)[1] == 12);
  for (const char* fixed : {"E1", "G4", "F14"}) CHECK(p[parse_line(fixed)] == parse_line(fixed));
  CHECK_FALSE(match_structure(g.perms(), "C4"));
}

TEST_CASE("orbits of the four-point family") {
  auto g = sample("Se4", 2);
  Partition want{lines_named({"E1", "F23", "F13", "F14", "G3", "F56"}), lines_named({"E2", "F24", "G4"}),
                 lines_named({"E3", "F34", "G1", "F12", "G2", "E4"}), lines_named({"E5", "F45", "G6", "F26", "F35", "F16"}),
                 lines_named({"E6", "F46", "G5", "F25", "F36", "F15"})};
  auto got = line_orbits(g.perms());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(orbit_image_order(g.perms(), taus({3, 7, 34}), true) == 6);
}

TEST_CASE("orbits of the two-point family") {
  auto g = sample("Se2", 4);
  auto four = taus({1, 6, 16, 17});
  CHECK(orbit_image_order(g.perms(), four, true) == 4);
  for (const Perm& p : g.perms()) {
    auto act = triple_action(p);
    // Blocks {tau1, tau16} and {tau6, tau17} are each preserved.
    std::set<int> b1{act[0], act[15]}, b2{act[5], act[16]};
    CHECK(b1 == std::set<int>{0, 15});
    CHECK(b2 == std::set<int>{5, 16});
  }
}

TEST_CASE("orbits of the six-point family") {
  auto g = sample("Se6", 6);
  auto orbs = plane_orbits(g.perms());
  CHECK(orbs.size() == 7);
  for (auto o : {taus({1, 11, 18, 37}), taus({2, 12, 16, 31})}) {
    CHECK(std::find(orbs.begin(), orbs.end(), o) != orbs.end());
    CHECK(orbit_image_order(g.perms(), o, true) == 24);
  }
}

TEST_CASE("nine-point families") {
  auto g = sample("Se9", 2);
  std::set<std::array<int, kNumLines>> types;
  for (const Perm& p : g.perms()) types.insert(cycle_type(p));
  const char* words[] = {
      "(E1,F14,G4)(E2,G3,F23)(E3,G5,F35)(E4,F46,G6)(E5,G2,F25)(E6,F16,G1)(F12,F36,F45)(F13,F56,F24)(F15,F26,F34)",
      "(E1,G3,F13)(E2,F24,G4)(E3,F12,E4)(E5,F26,F16)(E6,F25,F15)(G1,G2,F34)(G5,F36,F46)(G6,F35,F45)(F14,F23,F56)",
      "(E1,G2,F12)(E2,F15,E4)(E3,F56,F16)(E5,F45,G4)(E6,F35,F13)(G1,G5,F24)(G3,F26,F46)(G6,F23,F34)(F14,F25,F36)",
      "(E1,G3)(E2,G4)(E3,G1)(E4,G2)(E5,G6)(E6,G5)(F12,F34)(F14,F23)(F15,F36)(F16,F35)(F25,F46)(F26,F45)"};
  for (const char* w : words) {
    CAPTURE(w);
    Perm p = named_cycles(w);
    CHECK(preserves_incidence(p));
    CHECK(types.count(cycle_type(p)));
  }
  CHECK(cycle_type(named_cycles(words[0]))[2] == 9);
  CHECK(cycle_type(named_cycles(words[3]))[1] == 12);

  auto gp = sample("Se9p", 1);
  bool found = false;
  for (const Perm& p : gp.perms()) {
    if (perm_order(p) == 4 && cycle_type(compose(p, p))[1] == 12) found = true;
  }
  CHECK(found);
  CHECK(match_structure(gp.perms(), family("Se9p").structure));
}

TEST_CASE("ten-point family acts on five planes as S5") {
  auto g = sample("Se10", 1);
  auto five = taus({2, 6, 13, 17, 37});
  auto orbs = plane_orbits(g.perms());
  CHECK(std::find(orbs.begin(), orbs.end(), five) != orbs.end());
  CHECK(orbit_image_order(g.perms(), five, true) == 120);
  CHECK(match_structure(g.perms(), "S5"));
}

TEST_CASE("trivial group orbits") {
  std::vector<Perm> triv{identity_perm()};
  CHECK(line_orbits(triv).size() == 27);
  CHECK(group_fingerprint(triv).order == 1);
}

TEST_CASE("involution of the symbolic six-point family") {
  auto s = symbolic_surface(family("Se6"));
  const auto& lines = *s.lines;
  std::vector<PluckerLine<QRatFunc>> base, img;
  for (int l : basic_lset()) base.push_back(lines[l]);
  for (const char* n : {"E1", "G4", "F24", "F13", "F34"}) img.push_back(lines[parse_line(n)]);
  auto m = find_projectivity(base, img);
  auto r = [](const char* t) { return QRatFunc(parse_qpoly(t)); };
  const char* d = "c*(c + e)";
  Mat4<QRatFunc> want{{{r(d), r("0"), r("0"), r("0")},
                       {r("0"), r(d), r("0"), r("0")},
                       {r("0"), r("0"), r(d), r("0")},
                       {r("(c - e)*(3*c + e)"), r("-c^2 + 4*c*e + e^2"), r("-2*c*(c + e)"), r("-c*(c + e)")}}};
  CHECK(proportional_mat(m.m, want));
  CHECK(proportional_mat(mat_mul(m.m, m.m), identity_matrix(r("1"))));
  CHECK(proportional_vec(compose(s.form, m.m), s.form));
  // The unipotent matrix with the same entries and positive last column has infinite order.
  Mat4<QRatFunc> unipotent{{{r(d), r("0"), r("0"), r("(e - c)*(3*c + e)")},
                            {r("0"), r(d), r("0"), r("c^2 - 4*c*e - e^2")},
                            {r("0"), r("0"), r(d), r("2*c*(c + e)")},
                            {r("0"), r("0"), r("0"), r(d)}}};
  CHECK_FALSE(proportional_vec(compose(s.form, unipotent), s.form));
}
