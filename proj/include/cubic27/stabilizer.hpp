#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubic27/families.hpp"

namespace cubic27 {

struct StabElement {
  Projectivity<NfElem> matrix;
  Perm perm;  // matrix maps line k to line perm[k]
};

struct StabilizerGroup {
  FamilyMember member;
  int candidate_count = 0;
  std::vector<StabElement> elements;  // identity first, then candidate order

  std::vector<Perm> perms() const;
  int order() const { return static_cast<int>(elements.size()); }
};

// M(L_b, image) for each distinct L-set image of the admissible group of the member's family.
std::vector<Projectivity<NfElem>> candidate_matrices(const FamilyMember& member, int jobs = 1);

// Relabeling induced on the attached lines; throws PostCheckFailed if a line is not mapped to a line.
Perm induced_permutation(const Projectivity<NfElem>& m, const LineTable<NfElem>& lines);

// Candidates fixing the form up to scale; throws ClosureViolation if they do not form a group.
StabilizerGroup compute_stabilizer(const FamilyMember& member, int jobs = 1);
StabilizerGroup compute_stabilizer(std::string_view family, const std::map<int, NfElem>& free, int jobs = 1);

// Subgroup generated by the permutations.
std::vector<Perm> generate_group(const std::vector<Perm>& gens);

struct GroupFingerprint {
  int order = 0;
  std::map<int, int> element_orders;  // order -> count
  bool abelian = false;
  int center_order = 0;
  int derived_order = 0;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint group_fingerprint(const std::vector<Perm>& group);

// Labels accept "x" or "×" for direct and ":" or "⋊" for semidirect products; spaces and underscores are ignored.
std::string normalize_label(std::string_view label);
const std::vector<std::string>& structure_labels();
// Permutation model of a labeled group on at most 27 points; throws UnknownLabel.
std::vector<Perm> reference_model(std::string_view label);
bool match_structure(const std::vector<Perm>& group, std::string_view label);

using Partition = std::vector<std::vector<int>>;
Partition line_orbits(const std::vector<Perm>& group);
Partition plane_orbits(const std::vector<Perm>& group);
// Number of distinct permutations the group induces on an orbit of lines or of tritangent planes.
int orbit_image_order(const std::vector<Perm>& group, const std::vector<int>& orbit, bool planes);

struct GeneratorMatch {
  std::string name;
  std::string cycles;
  bool cycle_type_found = false;  // some element has the same cycle type
  bool exact = false;             // the permutation itself lies in the group
  bool conjugate = false;         // a conjugate by an admissible permutation lies in the group
};

struct GeneratorReport {
  std::vector<Perm> generators;  // greedy, in element order
  std::vector<GeneratorMatch> table;
};

GeneratorReport generator_report(const StabilizerGroup& g);

}  // namespace cubic27
