#include <algorithm>
#include <random>
#include <set>
#include <string_view>
#include <unordered_set>

#include "cubic27/error.hpp"
#include "cubic27/lines27.hpp"
#include "doctest.h"

using namespace cubic27;

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    return std::hash<std::string_view>()(std::string_view(reinterpret_cast<const char*>(p.data()), p.size()));
  }
};

std::vector<int> ids(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int t : one_based) out.push_back(t - 1);
  return out;
}

}  // namespace

TEST_CASE("labels round trip and numbering") {
  CHECK(line_name(0) == "E1");
  CHECK(line_name(6) == "G1");
  CHECK(line_name(12) == "F12");
  CHECK(line_name(26) == "F56");
  for (int l = 0; l < kNumLines; ++l) CHECK(parse_line(line_name(l)) == l);
  CHECK_THROWS_AS(parse_line("F77"), Error);
}

TEST_CASE("incidence rules") {
  CHECK(labels_meet(parse_line("E1"), parse_line("G4")));
  CHECK_FALSE(labels_meet(parse_line("E1"), parse_line("G1")));
  CHECK(labels_meet(parse_line("E1"), parse_line("F14")));
  CHECK_FALSE(labels_meet(parse_line("E1"), parse_line("F23")));
  CHECK(labels_meet(parse_line("F14"), parse_line("F23")));
  CHECK_FALSE(labels_meet(parse_line("F14"), parse_line("F24")));
  int edges = 0;
  for (int a = 0; a < kNumLines; ++a) {
    int deg = 0;
    for (int b = 0; b < kNumLines; ++b) {
      CHECK(labels_meet(a, b) == labels_meet(b, a));
      deg += labels_meet(a, b);
    }
    CHECK(deg == 10);
    edges += deg;
  }
  CHECK(edges / 2 == 135);
}

TEST_CASE("tritangent triples are the triangles of the incidence graph") {
  std::set<std::array<int, 3>> triangles;
  for (int a = 0; a < kNumLines; ++a) {
    for (int b = a + 1; b < kNumLines; ++b) {
      for (int c = b + 1; c < kNumLines; ++c) {
        if (labels_meet(a, b) && labels_meet(b, c) && labels_meet(a, c)) triangles.insert({a, b, c});
      }
    }
  }
  CHECK(triangles.size() == 45);
  std::set<std::array<int, 3>> from_table;
  for (auto t : triples()) {
    std::sort(t.begin(), t.end());
    from_table.insert(t);
  }
  CHECK(from_table == triangles);
  // Spot checks against the table.
  CHECK(triples()[0] == Triple{parse_line("E1"), parse_line("G2"), parse_line("F12")});
  CHECK(triples()[2][0] == parse_line("E1"));
  CHECK(triples()[2][1] == parse_line("G4"));
  CHECK(triples()[36][0] == parse_line("F14"));
  CHECK(triples()[36][1] == parse_line("F23"));
  CHECK(triples()[44] == Triple{parse_line("F16"), parse_line("F25"), parse_line("F34")});
  CHECK(triples()[29][0] == parse_line("E6"));
  CHECK(triples()[29][1] == parse_line("G5"));
}

TEST_CASE("residue labels") {
  CHECK(res_label(parse_line("E1"), parse_line("G4")) == parse_line("F14"));
  CHECK(res_label(parse_line("F14"), parse_line("F23")) == parse_line("F56"));
  for (int a = 0; a < kNumLines; ++a) {
    for (int b = 0; b < kNumLines; ++b) {
      if (!labels_meet(a, b)) {
        CHECK_THROWS_AS(res_label(a, b), Error);
        continue;
      }
      int r = res_label(a, b);
      CHECK(res_label(a, r) == b);
      CHECK(triple_index(a, b, r) >= 0);
    }
  }
}

TEST_CASE("L-set census") {
  const auto& all = enumerate_lsets();
  CHECK(all.size() == 25920);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::find(all.begin(), all.end(), basic_lset()) != all.end());
  CHECK(is_lset_pattern(basic_lset()));
  auto ext = lset_extensions(basic_lset());
  CHECK(ext[0] == parse_line("E5"));
  CHECK(ext[1] == parse_line("E6"));
  std::size_t extended = 0;
  for (const auto& l : all) extended += lset_extensions(l).size();
  CHECK(extended == 51840);
}

TEST_CASE("canonical residuation program on the basic extended L-set") {
  auto slots = residuation_slots(basic_extended_lset());
  // r5 is slot 6; t and u are intermediate and reappear among the last ten slots.
  CHECK(slots[6] == parse_line("E6"));
  CHECK(slots[17] == parse_line("F56"));
  std::set<int> distinct(slots.begin(), slots.end());
  CHECK(distinct.size() == 27);
  CHECK(perm_from_extended(basic_extended_lset()) == identity_perm());
  CHECK_THROWS_AS(perm_from_extended({0, 9, 1, 8, 2, 3}), Error);
}

TEST_CASE("E6 is a group of order 51840") {
  const auto& g = e6_group();
  REQUIRE(g.size() == 51840);
  std::unordered_set<Perm, PermHash> members(g.begin(), g.end());
  CHECK(members.size() == 51840);
  for (const auto& p : g) {
    if (!preserves_incidence(p)) {
      FAIL("permutation breaks incidence");
      break;
    }
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::vector<Perm> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(g[pick(rng)]);
  // BFS closure from a few generators must stay inside and fill the group.
  std::unordered_set<Perm, PermHash> seen{identity_perm()};
  std::vector<Perm> frontier{identity_perm()};
  bool inside = true;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Perm y = compose(x, s);
        if (seen.insert(y).second) {
          inside = inside && members.count(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(inside);
  CHECK(seen.size() == 51840);
  for (int i = 0; i < 2000; ++i) {
    const Perm& a = g[pick(rng)];
    const Perm& b = g[pick(rng)];
    CHECK(members.count(compose(a, b)) == 1);
    CHECK(members.count(inverse(a)) == 1);
  }
}

TEST_CASE("every E6 element maps triples to triples") {
  for (std::size_t k = 0; k < e6_group().size(); k += 37) {
    auto act = triple_action(e6_group()[k]);
    std::set<int> img(act.begin(), act.end());
    CHECK(img.size() == 45);
    CHECK(*img.begin() == 0);
  }
}

TEST_CASE("admissible subgroups") {
  struct Row {
    std::vector<int> ids;
    std::size_t m;
  };
  // Orders of M_n for the Eckardt configurations of the families.
  const std::vector<Row> rows = {
      {ids({3}), 576},
      {ids({3, 8}), 96},
      {ids({3, 7, 34}), 108},
      {ids({3, 7, 8, 34}), 36},
      {ids({3, 6, 7, 13, 17, 34}), 48},
      {ids({3, 7, 14, 20, 22, 26, 33, 34, 42}), 1296},
      {ids({1, 3, 7, 8, 11, 12, 16, 18, 31, 34}), 120},
      {ids({2, 3, 7, 8, 14, 15, 19, 20, 21, 22, 26, 27, 32, 33, 34, 37, 42, 45}), 648},
  };
  for (const auto& r : rows) {
    auto a = admissible_subgroup(r.ids);
    CHECK(a.lset_images.size() == r.m);
    if (r.ids.size() == 9) {
      CHECK(a.elements.size() == r.m);
    } else {
      CHECK(a.elements.size() == 2 * r.m);
    }
    std::unordered_set<Perm, PermHash> members(a.elements.begin(), a.elements.end());
    bool closed = true;
    for (std::size_t i = 0; i < a.elements.size() && i < 60; ++i) {
      for (std::size_t j = 0; j < a.elements.size(); j += 7) {
        closed = closed && members.count(compose(a.elements[i], a.elements[j]));
      }
      closed = closed && members.count(inverse(a.elements[i]));
    }
    CHECK(closed);
  }
  CHECK(admissible_subgroup({}).elements.size() == 51840);
  CHECK(admissible_subgroup(ids({3})).elements.size() == 1152);
  CHECK(admissible_subgroup(ids({3, 6, 7, 13, 17, 34})).elements.size() == 96);
}

TEST_CASE("cycle notation") {
  Perm g = parse_cycle_notation("(2,19)(3,22)(4,7)(5,25)(6,26)(8,13)(9,14)(11,16)(12,17)(18,27)(20,24)(21,23)");
  CHECK(cycle_notation(g) == "(2,19)(3,22)(4,7)(5,25)(6,26)(8,13)(9,14)(11,16)(12,17)(18,27)(20,24)(21,23)");
  CHECK(cycle_type(g)[1] == 12);
  CHECK(perm_order(g) == 2);
  CHECK(cycle_notation(identity_perm()) == "()");
  CHECK_THROWS_AS(parse_cycle_notation("(1,2)(2,3)"), Error);
  CHECK_THROWS_AS(parse_cycle_notation("(1,28)"), Error);
}
