#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cubic27/surface.hpp"

namespace cubic27 {

using NfRatFunc = RatFunc<NfElem>;

// Parameter vector (b, c, d, e, f).
template <class V>
using Params = std::array<V, 5>;

constexpr int param_slot(int var) { return var - Var::B; }

struct Substitution {
  int var;
  std::string expr;  // over the family field, in the symbols b..f and the generator
};

struct TableGenerator {
  std::string name;
  std::string cycles;  // 1-based cycle notation
};

struct FamilySpec {
  std::string name;
  std::string generator;
  UPoly minpoly;                    // low to high; t for the rationals
  std::vector<int> free_params;     // variable indices
  std::vector<Substitution> lambda; // in evaluation order
  std::vector<int> eckardt_ids;     // 0-based triple ids
  int dim = 0;
  std::string table_equation;
  int candidate_count = 0;          // |M_n|
  int stab_order = 0;
  std::string structure;
  std::vector<TableGenerator> generators;

  FieldRef field() const;
  bool is_rational() const { return minpoly.size() == 2; }
};

const std::vector<FamilySpec>& families();
const FamilySpec& family(std::string_view name);

// Auxiliary families used by the equivalence witnesses: T0 (Q2 = 0), T1 (Q6 = 0), T2 (Q14 = 0) inside Se3,
// and the conjugate of Se9 with e = -sqrt(-3) c.
const FamilySpec& aux_family(std::string_view name);

const QPoly& normal_form();
const std::vector<QPoly>& sigma0_factors();

// "c=1,e=2+w" -> values keyed by variable index; only free parameters are accepted.
std::map<int, NfElem> parse_params(const FamilySpec& spec, std::string_view text);

// Free values plus the Lambda substitutions. Throws MissingParameter, UnknownParameter, DenominatorVanishes.
Params<NfElem> family_parameters(const FamilySpec& spec, const std::map<int, NfElem>& free);

// Index of the first Sigma_0 factor vanishing at the parameters, if any.
std::optional<int> vanishing_sigma_factor(const Params<NfElem>& p);

CubicForm<NfElem> normal_form_at(const Params<NfElem>& p);
NfPoly form_poly(const CubicForm<NfElem>& form);
std::array<PluckerLine<NfElem>, 6> extended_lset_at(const Params<NfElem>& p);

struct FamilyMember {
  const FamilySpec* spec = nullptr;
  Params<NfElem> params;
  CubicSurface<NfElem> surface;
  const LineTable<NfElem>& lines() const { return *surface.lines; }
};

// Throws SingularMember when a Sigma_0 factor vanishes and check_smooth is set.
FamilyMember family_surface(const FamilySpec& spec, const std::map<int, NfElem>& free, bool check_smooth = true);
FamilyMember family_surface(std::string_view name, const std::map<int, NfElem>& free, bool check_smooth = true);

// Random smooth member with small integer parameters and no Eckardt points beyond the family's;
// deterministic for a given engine state.
std::map<int, NfElem> sample_parameters(const FamilySpec& spec, std::mt19937_64& rng, int range = 30);

// Lambda applied to symbolic free parameters.
Params<NfRatFunc> symbolic_parameters(const FamilySpec& spec);
Params<QRatFunc> symbolic_parameters_q(const FamilySpec& spec);  // rational families only

// Normal form with Lambda substituted, denominators cleared and parameter content removed.
NfPoly family_equation(const FamilySpec& spec);
NfPoly table_equation(const FamilySpec& spec);
bool table_equation_matches(const FamilySpec& spec);

CubicForm<QRatFunc> symbolic_form(const FamilySpec& spec);
CubicSurface<QRatFunc> symbolic_surface(const FamilySpec& spec);

struct QCondition {
  int index;  // 1..14
  QPoly poly;
  std::vector<int> planes;  // 0-based triple ids
};
const std::vector<QCondition>& q_conditions();

// Eckardt conditions of the generic normal form, one per triple (constant 1 when none).
const std::array<QPoly, kNumTriples>& generic_eckardt_conditions();

// Substitute rational-family Lambda into p and strip the factors shared with the Lambda denominators
// and the singular locus.
QPoly specialize(const QPoly& p, const FamilySpec& spec);

// Pairwise coprime squarefree factors of Sigma_0 after Lambda; Sigma_0 itself for Se0.
std::vector<NfPoly> singular_locus(const FamilySpec& spec);

struct CollinearityReport {
  std::vector<std::vector<int>> collinear;  // maximal sets of at least three triple ids
  std::optional<ProjPlane<NfElem>> common_plane;
};
CollinearityReport collinearity_report(const std::vector<EckardtPoint<NfElem>>& points);

// The linear forms y - z, x - y, x + t, x - 2y + t, 2x - y + z.
const std::array<NfPoly, 5>& sylvester_forms(FieldRef field);
// Weights l_i with form = sum l_i L_i^3, if the form lies in the span of the cubes.
std::optional<std::array<NfElem, 5>> sylvester_weights(const CubicForm<NfElem>& form);
// True iff the form is a sum of cubes of nonzero multiples of the five forms.
bool sylvester_check(const CubicForm<NfElem>& form);

enum class WitnessKind { Identity, T0T1, T0T2, Se9Pair };
WitnessKind parse_witness_kind(std::string_view s);

struct Witness {
  WitnessKind kind;
  FamilyMember source;
  Projectivity<NfElem> matrix;
  CubicForm<NfElem> image;  // form of M(S)
  std::string target;       // description of the verified target
};

// Projectivity carrying a source member into the target family; throws PostCheckFailed.
Witness equivalence_witness(WitnessKind kind, const std::map<int, NfElem>& free);

// L-set whose canonical Eckardt pattern (l1,l2), (l1,l4), (l3,l4), (res(l1,l4), res(l2,l3)) is the given set.
std::optional<LSet> lset_with_pattern(const std::vector<int>& triple_ids);

// Coordinates (a, b, c, d, g) of a form in the span of the cubics through the basic L-set.
std::optional<std::array<NfElem, 5>> basis_coordinates(const CubicForm<NfElem>& form);

}  // namespace cubic27
