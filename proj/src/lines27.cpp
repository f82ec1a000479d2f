#include "cubic27/lines27.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "cubic27/error.hpp"

namespace cubic27 {

namespace {

struct FPair {
  int i, j;
};

constexpr std::array<FPair, 15> kFPairs = {{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
                                            {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}};

bool is_e(int l) { return l < 6; }
bool is_g(int l) { return l >= 6 && l < 12; }
int idx(int l) { return is_e(l) ? l + 1 : l - 5; }  // subscript for E/G
FPair fpair(int l) { return kFPairs[l - 12]; }

bool meets_rule(int a, int b) {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  if (is_e(a) && is_e(b)) return false;
  if (is_g(a) && is_g(b)) return false;
  if (is_e(a) && is_g(b)) return idx(a) != idx(b);
  if (b >= 12 && a < 12) {
    FPair p = fpair(b);
    return idx(a) == p.i || idx(a) == p.j;
  }
  FPair p = fpair(a), q = fpair(b);
  return p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j;
}

struct Tables {
  std::array<std::array<bool, kNumLines>, kNumLines> meet{};
  std::array<std::array<int, kNumLines>, kNumLines> res{};
  std::array<std::array<int, kNumLines>, kNumLines> triple_of{};
  std::array<Triple, kNumTriples> triples{};

  Tables() {
    for (int a = 0; a < kNumLines; ++a) {
      for (int b = 0; b < kNumLines; ++b) {
        meet[a][b] = meets_rule(a, b);
        res[a][b] = -1;
        triple_of[a][b] = -1;
      }
    }
    int n = 0;
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        if (i != j) triples[n++] = {e_line(i), g_line(j), f_line(i, j)};
      }
    }
    // (F12,F34) (F12,F35) (F12,F36) (F13,F24) ... (F16,F25), third line on the complementary indices.
    const int f_rows[15][4] = {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 3, 2, 4}, {1, 3, 2, 5},
                               {1, 3, 2, 6}, {1, 4, 2, 3}, {1, 4, 2, 5}, {1, 4, 2, 6}, {1, 5, 2, 3},
                               {1, 5, 2, 4}, {1, 5, 2, 6}, {1, 6, 2, 3}, {1, 6, 2, 4}, {1, 6, 2, 5}};
    for (const auto& r : f_rows) {
      std::vector<int> rest;
      for (int k = 1; k <= 6; ++k) {
        if (k != r[0] && k != r[1] && k != r[2] && k != r[3]) rest.push_back(k);
      }
      triples[n++] = {f_line(r[0], r[1]), f_line(r[2], r[3]), f_line(rest[0], rest[1])};
    }
    for (int t = 0; t < kNumTriples; ++t) {
      const Triple& tr = triples[t];
      for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) {
          if (u == v) continue;
          res[tr[u]][tr[v]] = tr[3 - u - v];
          triple_of[tr[u]][tr[v]] = t;
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

int e_line(int i) { return i - 1; }
int g_line(int i) { return i + 5; }
int f_line(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 15; ++k) {
    if (kFPairs[k].i == i && kFPairs[k].j == j) return 12 + k;
  }
  throw Error(ErrorCode::UnknownLabel, "F" + std::to_string(i) + std::to_string(j));
}

std::string line_name(int line) {
  if (line < 0 || line >= kNumLines) throw Error(ErrorCode::UnknownLabel, std::to_string(line));
  if (is_e(line)) return "E" + std::to_string(idx(line));
  if (is_g(line)) return "G" + std::to_string(idx(line));
  FPair p = fpair(line);
  return "F" + std::to_string(p.i) + std::to_string(p.j);
}

int parse_line(std::string_view name) {
  for (int l = 0; l < kNumLines; ++l) {
    if (line_name(l) == name) return l;
  }
  throw Error(ErrorCode::UnknownLabel, std::string(name));
}

bool labels_meet(int a, int b) { return tables().meet[a][b]; }

int res_label(int a, int b) {
  int r = tables().res[a][b];
  if (r < 0) throw Error(ErrorCode::NotIncident, line_name(a) + " and " + line_name(b) + " do not meet");
  return r;
}

const std::array<Triple, kNumTriples>& triples() { return tables().triples; }

int triple_index(int a, int b, int c) {
  int t = tables().triple_of[a][b];
  if (t < 0) return -1;
  return tables().res[a][b] == c ? t : -1;
}

bool is_lset_pattern(const std::array<int, 5>& l) {
  // l2 meets l1, l3, l5; l4 meets l1, l3; all other pairs skew.
  static constexpr bool kMeet[5][5] = {{false, true, false, true, false},
                                       {true, false, true, false, true},
                                       {false, true, false, true, false},
                                       {true, false, true, false, false},
                                       {false, true, false, false, false}};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i == j) {
        continue;
      }
      if (l[i] == l[j] || labels_meet(l[i], l[j]) != kMeet[i][j]) return false;
    }
  }
  return true;
}

LSet basic_lset() { return {e_line(1), g_line(4), e_line(2), g_line(3), e_line(3)}; }
ExtLSet basic_extended_lset() { return {e_line(1), g_line(4), e_line(2), g_line(3), e_line(3), e_line(5)}; }

const std::vector<LSet>& enumerate_lsets() {
  static const std::vector<LSet> all = [] {
    std::vector<LSet> out;
    for (int l1 = 0; l1 < kNumLines; ++l1) {
      for (int l2 = 0; l2 < kNumLines; ++l2) {
        if (!labels_meet(l1, l2)) continue;
        for (int l3 = 0; l3 < kNumLines; ++l3) {
          if (!labels_meet(l2, l3) || l3 == l1 || labels_meet(l1, l3)) continue;
          for (int l4 = 0; l4 < kNumLines; ++l4) {
            if (!labels_meet(l4, l1) || !labels_meet(l4, l3) || l4 == l2 || labels_meet(l4, l2)) continue;
            for (int l5 = 0; l5 < kNumLines; ++l5) {
              LSet l{l1, l2, l3, l4, l5};
              if (is_lset_pattern(l)) out.push_back(l);
            }
          }
        }
      }
    }
    return out;
  }();
  return all;
}

std::array<int, 2> lset_extensions(const LSet& l) {
  const int excluded = res_label(l[1], l[4]);
  std::array<int, 2> out{-1, -1};
  int n = 0;
  for (int x = 0; x < kNumLines; ++x) {
    if (!labels_meet(x, l[1]) || !labels_meet(x, l[3])) continue;
    if (x == l[0] || x == l[2] || x == excluded) continue;
    if (n == 2) throw Error(ErrorCode::InvalidExtendedLSet, "more than two extensions");
    out[n++] = x;
  }
  if (n != 2) throw Error(ErrorCode::InvalidExtendedLSet, "expected two extensions");
  return out;
}

std::array<int, kNumLines> residuation_slots(const ExtLSet& l) {
  return run_residuation(l, [](int a, int b) {
    int r = tables().res[a][b];
    if (r < 0) throw Error(ErrorCode::InvalidExtendedLSet, "residuation program met a skew pair");
    return r;
  });
}

Perm identity_perm() {
  Perm p;
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  for (int i = 0; i < kNumLines; ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r;
  for (int i = 0; i < kNumLines; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int perm_order(const Perm& a) {
  int order = 1;
  auto type = cycle_type(a);
  for (int len = 1; len <= kNumLines; ++len) {
    if (type[len - 1]) order = std::lcm(order, len);
  }
  return order;
}

bool preserves_incidence(const Perm& p) {
  for (int a = 0; a < kNumLines; ++a) {
    for (int b = a + 1; b < kNumLines; ++b) {
      if (labels_meet(a, b) != labels_meet(p[a], p[b])) return false;
    }
  }
  return true;
}

std::array<int, kNumTriples> triple_action(const Perm& p) {
  std::array<int, kNumTriples> out{};
  for (int t = 0; t < kNumTriples; ++t) {
    const Triple& tr = triples()[t];
    out[t] = tables().triple_of[p[tr[0]]][p[tr[1]]];
  }
  return out;
}

Perm perm_from_extended(const ExtLSet& target) {
  LSet five{target[0], target[1], target[2], target[3], target[4]};
  if (!is_lset_pattern(five)) throw Error(ErrorCode::InvalidExtendedLSet, "first five labels are not an L-set");
  auto ext = lset_extensions(five);
  if (target[5] != ext[0] && target[5] != ext[1]) {
    throw Error(ErrorCode::InvalidExtendedLSet, "sixth label is not an extension");
  }
  static const std::array<int, kNumLines> base = residuation_slots(basic_extended_lset());
  auto slots = residuation_slots(target);
  Perm p{};
  std::array<bool, kNumLines> hit{};
  for (int k = 0; k < kNumLines; ++k) {
    p[base[k]] = static_cast<std::uint8_t>(slots[k]);
    if (hit[slots[k]]) throw Error(ErrorCode::InvalidExtendedLSet, "residuation program repeated a label");
    hit[slots[k]] = true;
  }
  return p;
}

const std::vector<Perm>& e6_group() {
  static const std::vector<Perm> group = [] {
    std::vector<Perm> out;
    out.reserve(51840);
    for (const auto& l : enumerate_lsets()) {
      for (int x : lset_extensions(l)) out.push_back(perm_from_extended({l[0], l[1], l[2], l[3], l[4], x}));
    }
    return out;
  }();
  return group;
}

AdmissibleGroup admissible_subgroup(std::vector<int> eckardt_ids) {
  std::sort(eckardt_ids.begin(), eckardt_ids.end());
  eckardt_ids.erase(std::unique(eckardt_ids.begin(), eckardt_ids.end()), eckardt_ids.end());
  std::array<bool, kNumTriples> marked{};
  for (int id : eckardt_ids) {
    if (id < 0 || id >= kNumTriples) throw Error(ErrorCode::InvalidArgument, "triple id out of range");
    marked[id] = true;
  }
  AdmissibleGroup g;
  g.eckardt_ids = eckardt_ids;
  std::set<LSet> images;
  for (const Perm& p : e6_group()) {
    bool ok = true;
    for (int id : eckardt_ids) {
      const Triple& tr = triples()[id];
      if (!marked[tables().triple_of[p[tr[0]]][p[tr[1]]]]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    g.elements.push_back(p);
    images.insert(lset_image(p));
  }
  g.lset_images.assign(images.begin(), images.end());
  return g;
}

LSet lset_image(const Perm& p) {
  LSet b = basic_lset();
  return {p[b[0]], p[b[1]], p[b[2]], p[b[3]], p[b[4]]};
}

std::array<int, kNumLines> cycle_type(const Perm& p) {
  std::array<int, kNumLines> counts{};
  std::array<bool, kNumLines> seen{};
  for (int i = 0; i < kNumLines; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

std::string cycle_notation(const Perm& p) {
  std::string s;
  std::array<bool, kNumLines> seen{};
  for (int i = 0; i < kNumLines; ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm parse_cycle_notation(std::string_view text) {
  Perm p = identity_perm();
  std::array<bool, kNumLines> used{};
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) { throw Error(ErrorCode::ParseError, msg + " in '" + std::string(text) + "'"); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (skip(); pos < text.size(); skip()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a point");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > kNumLines) fail("point out of range");
      if (used[v - 1]) fail("point repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
  }
  return p;
}

}  // namespace cubic27
