#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubic27 {

// Line labels are 0-based internally: E1..E6 = 0..5, G1..G6 = 6..11, F12..F56 = 12..26.
// Printed indices are 1-based.
constexpr int kNumLines = 27;
constexpr int kNumTriples = 45;

using Perm = std::array<std::uint8_t, kNumLines>;
using LSet = std::array<int, 5>;
using ExtLSet = std::array<int, 6>;
using Triple = std::array<int, 3>;

int e_line(int i);          // E_i, i in 1..6
int g_line(int i);          // G_i
int f_line(int i, int j);   // F_ij, i != j
std::string line_name(int line);
int parse_line(std::string_view name);  // throws UnknownLabel

bool labels_meet(int a, int b);
int res_label(int a, int b);  // throws NotIncident

// Table order: tau_1..tau_45 as (first, second, residue).
const std::array<Triple, kNumTriples>& triples();
int triple_index(int a, int b, int c);  // 0-based id or -1

bool is_lset_pattern(const std::array<int, 5>& l);
LSet basic_lset();
ExtLSet basic_extended_lset();

const std::vector<LSet>& enumerate_lsets();
std::array<int, 2> lset_extensions(const LSet& l);

// Canonical residuation program on an extended L-set (l1..l6): s1 = l2, s2 = l4, r1 = l1, r2 = l3,
// r3 = res(l2, l5), r4 = l6, t = res(res(r1, s1), res(r2, s2)), u = res(res(r3, s2), res(r4, t)),
// r5 = res(s1, u). Slots: s1, s2, r1..r5, res(r_i, s_j), res(res(r_i, s1), res(r_j, s2)) for i < j.
template <class T, class Res>
std::array<T, kNumLines> run_residuation(const std::array<T, 6>& l, Res res) {
  const T& s1 = l[1];
  const T& s2 = l[3];
  std::array<T, 5> r{l[0], l[2], res(l[1], l[4]), l[5], l[5]};
  std::array<T, 5> rs1, rs2;
  rs1[0] = res(r[0], s1);
  rs2[1] = res(r[1], s2);
  const T t = res(rs1[0], rs2[1]);
  rs2[2] = res(r[2], s2);
  const T u = res(rs2[2], res(r[3], t));
  r[4] = res(s1, u);
  for (int i = 0; i < 5; ++i) {
    if (i != 0) rs1[i] = res(r[i], s1);
    if (i != 1 && i != 2) rs2[i] = res(r[i], s2);
  }
  std::array<T, kNumLines> slots;
  int n = 0;
  slots[n++] = s1;
  slots[n++] = s2;
  for (int i = 0; i < 5; ++i) slots[n++] = r[i];
  for (int i = 0; i < 5; ++i) {
    slots[n++] = rs1[i];
    slots[n++] = rs2[i];
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) slots[n++] = (i == 0 && j == 1) ? t : res(rs1[i], rs2[j]);
  }
  return slots;
}

// Label values of the program's slots.
std::array<int, kNumLines> residuation_slots(const ExtLSet& l);

Perm identity_perm();
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a(b(i))
Perm inverse(const Perm& a);
int perm_order(const Perm& a);
bool preserves_incidence(const Perm& p);
std::array<int, kNumTriples> triple_action(const Perm& p);

Perm perm_from_extended(const ExtLSet& target);

// All 51,840 incidence-preserving permutations, in enumeration order of extended L-sets.
const std::vector<Perm>& e6_group();

struct AdmissibleGroup {
  std::vector<int> eckardt_ids;  // 0-based triple ids
  std::vector<Perm> elements;
  std::vector<LSet> lset_images;  // distinct images of L_b, sorted
};

AdmissibleGroup admissible_subgroup(std::vector<int> eckardt_ids);
LSet lset_image(const Perm& p);

std::string cycle_notation(const Perm& p);
Perm parse_cycle_notation(std::string_view text);  // 1-based cycles; throws ParseError
std::array<int, kNumLines> cycle_type(const Perm& p);  // count of cycles of each length

}  // namespace cubic27
