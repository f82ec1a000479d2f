#include "cubic27/families.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "cubic27/parser.hpp"

namespace cubic27 {

namespace {

constexpr const char* kNormalForm =
    "b*c*(t-x)*(x*z+y*t) + c^2*(z+t)*(x*z-y*t) - c*d*(y-z)*(x*z+y*t) + c*(e+f)*(x-y)*(x*z-y*t)"
    " - e*f*(2x^2*y - 2x*y^2 + x*z^2 - x*z*t + y*z*t - y*t^2)";

constexpr const char* kLambda1 = "-(c^2 + e*f)/c";
constexpr const char* kLambda3 = "(3*e*f - c^2 + c*f + c*e)/(2*c)";
constexpr const char* kLambda4 = "c*(3*c - e)/(c + e)";

const std::string kG1 = "(2,19)(3,22)(4,7)(5,25)(6,26)(8,13)(9,14)(11,16)(12,17)(18,27)(20,24)(21,23)";
const std::string kH3 = "(1,9,14)(2,19,10)(3,13,4)(5,21,17)(6,20,16)(7,8,22)(11,24,26)(12,23,25)(15,18,27)";

UPoly upoly(std::initializer_list<long> c) {
  UPoly p;
  for (long x : c) p.push_back(Rational(x));
  return p;
}

// Value of e on the one-parameter sublocus, with the square root of -1 given as an expression in the generator.
std::string sublocus_e(const std::string& i) {
  return "(2*" + i + " - 1)*c*(5*c - (4*" + i + " - 3)*f)/(5*(c - f))";
}
std::string sublocus_d(const std::string& i) {
  return "(2*" + i + " + 1)*(5*c^2 - (4*" + i + " + 8)*c*f - 5*f^2)/(5*(f - c))";
}

std::vector<FamilySpec> build_families() {
  const int B = Var::B, C = Var::C, D = Var::D, E = Var::E, F = Var::F;
  const UPoly q = upoly({0, 1});
  std::vector<FamilySpec> v;
  v.push_back({"Se0", "w", q, {B, C, D, E, F}, {}, {}, 4, kNormalForm, 25920, 1, "1", {}});
  v.push_back({"Se1", "w", q, {C, D, E, F}, {{B, kLambda1}}, {2}, 3,
               "(-x^2*z - x*z^2 - x*y*t + y*z*t + 2*y*t^2)*c^2 + (x*y*z - x*z^2 + y^2*t - y*z*t)*c*d"
               " - (x^2*z - x*y*z - x*y*t + y^2*t)*c*(e+f)"
               " + (2*x^2*y - 2*x*y^2 - x^2*z + x*z^2 - x*y*t + y*z*t)*e*f",
               576, 2, "C2", {{"g1", kG1}}});
  // w = i - 1.
  v.push_back({"Se1p", "w", upoly({2, 2, 1}), {C, F},
               {{E, sublocus_e("(w+1)")}, {D, sublocus_d("(w+1)")}, {B, kLambda1}}, {2}, 1,
               "(x^2*z - (w+1)*x*y*z - x*z^2 - (w+2)*x*y*t + 2*y^2*t + w*y*z*t + (w+1)*y*t^2)*c^2"
               " + (-(w+3)*x^2*y + (w+3)*x*y^2 + 2*x^2*z + (w-2)*x*y*z + x*z^2 + 2*(w+1)*x*y*t"
               " - (w+2)*y^2*t - w*y*z*t - (w+1)*y*t^2)*c*f"
               " + ((w-1)*x^2*y - (w-1)*x*y^2 + x^2*z - x*y*z - w*x*y*t + w*y^2*t)*f^2",
               576, 4, "C4", {{"g1'", "(2,3,19,22)(4,21,7,23)(5,26,25,6)(8,16,13,11)(9,12,14,17)(18,24,27,20)"}}});
  // w = i - sqrt(2), which is the value of c; i = (w^3 + w)/6.
  const std::string i2 = "((w^3 + w)/6)";
  v.push_back({"Se1pp", "w", upoly({9, 0, -2, 0, 1}), {},
               {{C, "w"}, {F, "3"}, {E, sublocus_e(i2)}, {D, sublocus_d(i2)}, {B, kLambda1}}, {2}, 0,
               "18x^2y - 18xy^2 - 6(w+1)x^2z - 3(w^2 - 4w - 1)xyz + (w^3 - 5w + 6)xz^2"
               " + (w^3 - 3w^2 + 7w - 9)xyt - (w^3 + w - 6)y^2t + 3(w^2 - 2w + 1)yzt"
               " - (w^3 - 3w^2 + w + 3)yt^2",
               576, 8, "C8",
               {{"g1''", "(1,10)(2,11,3,8,19,16,22,13)(4,24,21,27,7,20,23,18)(5,17,26,9,25,12,6,14)"}}});
  v.push_back({"Se2", "w", q, {C, E, F}, {{D, "(c^2 + e*f)/c"}, {B, kLambda1}}, {2, 7}, 2,
               "(-x^2z + xyz - 2xz^2 - xyt + y^2t + 2yt^2)c^2 + (-x^2z + xyz + xyt - y^2t)c(e+f)"
               " + (2x^2y - 2xy^2 - x^2z + xyz - xyt + y^2t)ef",
               96, 4, "C2 x C2",
               {{"g2", "(1,15)(3,22)(4,8)(5,25)(6,26)(7,13)(9,18)(11,20)(12,21)(14,27)(16,24)(17,23)"},
                {"h2", kG1}}});
  v.push_back({"Se3", "w", q, {C, E, F}, {{D, kLambda3}, {B, kLambda1}}, {2, 6, 33}, 2,
               "(2x^2z + xyz + xz^2 + 2xyt + y^2t - 3yzt - 4yt^2)c^2"
               " + (2x^2z - 3xyz + xz^2 - 2xyt + y^2t + yzt)c(e+f)"
               " + (-4x^2y + 4xy^2 + 2x^2z - 3xyz + xz^2 + 2xyt - 3y^2t + yzt)ef",
               108, 6, "S3", {{"g3", kG1}, {"h3", kH3}}});
  v.push_back({"Se4", "w", q, {C, E}, {{F, kLambda4}, {D, kLambda3}, {B, kLambda1}}, {2, 6, 7, 33}, 1,
               "(-2x^2z + 2xyz - xz^2 + xyt - y^2t + yt^2)c^2"
               " + (3x^2y - 3xy^2 - 2x^2z + 2xyz - xz^2 - 2xyt + 2y^2t + yt^2)ce"
               " + (-x^2y + xy^2 + xyt - y^2t)e^2",
               36, 12, "C2 x S3",
               {{"g4", kG1},
                {"h4", "(1,18,14,15,9,27)(2,19,10)(3,7,4,22,13,8)(5,12,17,25,21,23)(6,11,16,26,20,24)"}}});
  v.push_back({"Se6", "w", q, {C, E}, {{F, "-c*(5*c + e)/(c + e)"}, {D, kLambda3}, {B, kLambda1}},
               {2, 5, 6, 12, 16, 33}, 1,
               "(2x^2z - 4xyz + xz^2 - 3xyt + y^2t + 2yzt + yt^2)c^2"
               " + (-5x^2y + 5xy^2 + 2x^2z - 4xyz + xz^2 + 2xyt - 4y^2t + 2yzt + yt^2)ce"
               " + (-x^2y + xy^2 + xyt - y^2t)e^2",
               48, 24, "S4",
               {{"g6", "(1,13)(2,10)(3,18)(5,20)(6,21)(7,15)(9,22)(11,25)(12,26)(14,27)(16,24)(17,23)"},
                {"h6", "(1,3,15,22)(2,19)(4,13,14,18)(5,6)(7,27,9,8)(11,23,21,16)(12,24,20,17)(25,26)"}}});
  const std::vector<int> nine{2, 6, 13, 19, 21, 25, 32, 33, 41};
  const std::vector<TableGenerator> gens9{
      {"g9", kG1},
      {"h9", kH3},
      {"k9", "(1,21,3)(2,7,13)(4,27,20)(5,26,19)(6,24,9)(8,12,14)(10,16,23)(11,15,22)(17,25,18)"}};
  // w = sqrt(-3) + 1.
  v.push_back({"Se9", "w", upoly({4, -2, 1}), {C, F}, {{E, "(w - 1)*c"}, {D, kLambda3}, {B, kLambda1}}, nine, 1,
               "(2x^2z - (w+1)xyz + xz^2 - wxyt + y^2t + (w-1)yzt + (w-2)yt^2)c"
               " + ((w+2)xy(y-x) + 2x^2z - 3xyz + xz^2 + wxyt - (w+1)y^2t + yzt)f",
               1296, 54, "((C3 x C3) : C3) : C2", gens9});
  // w = i - sqrt(3), so sqrt(-3) = (2 - w^2)/2.
  v.push_back({"Se9p", "w", upoly({16, 0, -4, 0, 1}), {},
               {{C, "1"}, {F, "w^3/4 - w - 1"}, {E, "(2 - w^2)/2*c"}, {D, kLambda3}, {B, kLambda1}}, nine, 0,
               "312x^2y - 312xy^2 + 2(5w^3 - 20w^2 + 8w - 32)x^2z - (w^3 - 56w^2 + 64w - 152)xyz"
               " + (5w^3 - 20w^2 + 8w - 32)xz^2 + 4(w^3 + 9w^2 - 14w - 48)xyt"
               " + (5w^3 - 20w^2 + 8w + 280)y^2t - (9w^3 + 16w^2 - 48w + 88)yzt"
               " - 2(7w^3 - 2w^2 - 20w + 28)yt^2",
               1296, 108, "((C3 x C3) : C3) : C4",
               {{"g9'", "(2,3,19,22)(4,20,7,24)(5,6,25,26)(8,17,13,12)(9,11,14,16)(18,23,27,21)"},
                {"h9'", "(1,4,6)(2,3,5)(7,10,12)(8,9,11)(13,22,27)(14,25,21)(15,26,17)(16,19,24)(18,23,20)"}}});
  // w = sqrt(5).
  v.push_back({"Se10", "w", upoly({-5, 0, 1}), {},
               {{C, "1"}, {E, "(2 - w)*c"}, {F, kLambda4}, {D, kLambda3}, {B, kLambda1}},
               {0, 2, 6, 7, 10, 11, 15, 17, 30, 33}, 0, "x^2y - xy^2 + 2x^2z - 2xyz + xz^2 - 2xyt + 2y^2t - yt^2",
               120, 120, "S5",
               {{"g10", "(1,13)(2,9)(4,19)(5,20)(6,21)(7,14)(10,22)(11,23)(12,24)(15,27)(16,26)(17,25)"},
                {"h10", "(1,3,15,8,7)(2,9,22,27,19)(4,13,14,10,18)(5,17,11,24,21)(6,16,12,23,20)"}}});
  // w = sqrt(-3).
  v.push_back({"Se18", "w", upoly({3, 0, 1}), {}, {{C, "1"}, {E, "w*c"}, {F, kLambda4}, {D, kLambda3}, {B, kLambda1}},
               {1, 2, 6, 7, 13, 14, 18, 19, 20, 21, 25, 26, 31, 32, 33, 36, 41, 44}, 0,
               "3x^2y - 3xy^2 - 2x^2z + 2xyz - xz^2 - 2xyt + 2y^2t + yt^2", 648, 648, "(C3 x C3 x C3) : S4",
               {{"g18", "(1,17)(2,5)(3,4,24,26)(6,14,22,15)(7,9,20,10)(8,19,16,18)(11,25,13,23)(21,27)"},
                {"h18", "(1,26,7)(2,11,20)(3,8,18)(4,17,10)(5,9,23)(6,15,12)(13,16,14)(19,25,22)(21,27,24)"}}});
  return v;
}

std::vector<FamilySpec> build_aux() {
  const int B = Var::B, C = Var::C, D = Var::D, E = Var::E, F = Var::F;
  const UPoly q = upoly({0, 1});
  std::vector<FamilySpec> v;
  v.push_back({"T0", "w", q, {C, E}, {{F, "-c*(3*c + e)/(c - e)"}, {D, kLambda3}, {B, kLambda1}}, {1, 2, 6, 33}, 1, "", 0, 0, "", {}});
  v.push_back({"T1", "w", q, {C, E}, {{F, kLambda4}, {D, kLambda3}, {B, kLambda1}}, {2, 6, 7, 33}, 1, "", 0, 0, "", {}});
  v.push_back({"T2", "w", q, {C, E}, {{F, "-e"}, {D, kLambda3}, {B, kLambda1}}, {2, 6, 33, 36}, 1, "", 0, 0, "", {}});
  // Se9 with the conjugate root, e = -sqrt(-3) c; same generator w = sqrt(-3) + 1.
  v.push_back({"Se9conj", "w", upoly({4, -2, 1}), {C, F}, {{E, "-(w - 1)*c"}, {D, kLambda3}, {B, kLambda1}},
               {2, 6, 13, 19, 21, 25, 32, 33, 41}, 1, "", 0, 0, "", {}});
  return v;
}

NfElem eval_at(const NfPoly& p, const std::array<const NfElem*, kNumVars>& vals, FieldRef k) {
  return p.evaluate<NfElem>(vals, k->zero(), [](const NfElem& c) { return c; });
}

NfRatFunc eval_at(const NfPoly& p, const std::array<const NfRatFunc*, kNumVars>& vals, FieldRef k) {
  return p.evaluate<NfRatFunc>(vals, NfRatFunc(NfPoly(k)), [](const NfElem& c) { return NfRatFunc(NfPoly::constant(c)); });
}

template <class V>
std::array<const V*, kNumVars> param_ptrs(const std::array<std::optional<V>, 5>& p) {
  std::array<const V*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = p[i] ? &*p[i] : nullptr;
  return vals;
}

template <class V>
Params<V> apply_lambda(const FamilySpec& spec, std::array<std::optional<V>, 5> p, FieldRef k) {
  for (const auto& s : spec.lambda) {
    NfRatFunc r = parse_ratfunc(s.expr, k);
    auto vals = param_ptrs(p);
    V den = eval_at(r.den(), vals, k);
    if (is_zero(den)) {
      throw Error(ErrorCode::DenominatorVanishes, std::string(var_name(s.var)) + " = " + s.expr);
    }
    p[param_slot(s.var)] = eval_at(r.num(), vals, k) / den;
  }
  Params<V> out;
  for (int i = 0; i < 5; ++i) {
    if (!p[i]) throw Error(ErrorCode::MissingParameter, std::string("no value for ") + var_name(Var::B + i));
    out[i] = *p[i];
  }
  return out;
}

QRatFunc to_q(const NfRatFunc& r) { return QRatFunc(to_qpoly(r.num()), to_qpoly(r.den())); }

NfPoly lcm(const NfPoly& a, const NfPoly& b) { return exact_div_or_throw(a * b, gcd(a, b)); }

// Integral content-1 representative over Q; monic otherwise.
NfPoly tidy(const NfPoly& p) {
  if (p.is_zero()) return p;
  if (p.ctx()->is_rationals()) return to_nfpoly(primitive_integral(to_qpoly(p)), p.ctx());
  return p.monic();
}

NfPoly strip(NfPoly p, const std::vector<NfPoly>& dens) {
  for (const auto& d : dens) {
    if (d.is_constant()) continue;
    for (;;) {
      NfPoly g = gcd(p, d);
      if (g.is_constant()) break;
      p = exact_div_or_throw(p, g);
    }
  }
  return p;
}

std::vector<NfPoly> lambda_denominators(const Params<NfRatFunc>& p) {
  std::vector<NfPoly> dens;
  for (const auto& x : p) {
    if (!x.den().is_constant()) dens.push_back(x.den());
  }
  return dens;
}

std::vector<NfPoly> coprime_basis(const std::vector<NfPoly>& in) {
  std::vector<NfPoly> basis, work;
  for (const auto& p : in) {
    if (!p.is_constant()) work.push_back(squarefree_part(p));
  }
  while (!work.empty()) {
    NfPoly q = std::move(work.back());
    work.pop_back();
    if (q.is_constant()) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      NfPoly g = gcd(basis[i], q);
      if (g.is_constant()) continue;
      NfPoly bq = exact_div_or_throw(basis[i], g), qq = exact_div_or_throw(q, g);
      split = true;
      if (bq.is_constant() && qq.is_constant()) break;
      basis.erase(basis.begin() + static_cast<long>(i));
      work.push_back(g);
      work.push_back(bq);
      work.push_back(qq);
      break;
    }
    if (!split) basis.push_back(std::move(q));
  }
  for (auto& b : basis) b = tidy(b);
  std::sort(basis.begin(), basis.end(), [](const NfPoly& a, const NfPoly& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.str() < b.str();
  });
  return basis;
}

const NfPoly& basis_poly(int k) {
  static const std::array<NfPoly, 5> basis = [] {
    FieldRef q = NumberField::rationals();
    return std::array<NfPoly, 5>{parse_nfpoly("2x^2y - 2xy^2 + xz^2 - xzt - yt^2 + yzt", q),
                                 parse_nfpoly("(x - t)(xz + yt)", q), parse_nfpoly("(z + t)(yt - xz)", q),
                                 parse_nfpoly("(y - z)(xz + yt)", q), parse_nfpoly("(x - y)(yt - xz)", q)};
  }();
  return basis[k];
}

CubicForm<NfElem> to_form(const NfPoly& p, FieldRef k) {
  NfPoly q = p.ctx() == k ? p : to_nfpoly(to_qpoly(p), k);
  return cubic_from_poly<NfElem>(q, k->zero(), [](const NfPoly& c) { return c.constant_value(); });
}

// Unique coefficients expressing the form in the given five cubics.
std::optional<std::array<NfElem, 5>> solve_span(const std::array<CubicForm<NfElem>, 5>& basis,
                                                const CubicForm<NfElem>& form) {
  FieldRef k = form[0].field();
  std::vector<std::vector<NfElem>> rows;
  for (std::size_t m = 0; m < form.size(); ++m) {
    std::vector<NfElem> row;
    for (int j = 0; j < 5; ++j) row.push_back(basis[j][m]);
    row.push_back(-form[m]);
    rows.push_back(std::move(row));
  }
  auto ker = kernel(rows, 6, k->zero());
  if (ker.size() != 1 || ker[0][5].is_zero()) return std::nullopt;
  NfElem inv = ker[0][5].inverse();
  std::array<NfElem, 5> out;
  for (int j = 0; j < 5; ++j) out[j] = ker[0][j] * inv;
  return out;
}

std::array<int, 4> lset_pattern(const LSet& l) {
  auto tri = [](int a, int b) { return triple_index(a, b, res_label(a, b)); };
  return {tri(l[0], l[1]), tri(l[0], l[3]), tri(l[2], l[3]), tri(res_label(l[0], l[3]), res_label(l[1], l[2]))};
}

std::vector<PluckerLine<NfElem>> pick(const LineTable<NfElem>& t, const LSet& l) {
  std::vector<PluckerLine<NfElem>> out;
  for (int x : l) out.push_back(t[x]);
  return out;
}

}  // namespace

FieldRef FamilySpec::field() const {
  if (is_rational()) return NumberField::rationals();
  return NumberField::create(generator, minpoly);
}

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> v = build_families();
  return v;
}

const FamilySpec& family(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::UnknownFamily, std::string(name));
}

const FamilySpec& aux_family(std::string_view name) {
  static const std::vector<FamilySpec> v = build_aux();
  for (const auto& f : v) {
    if (f.name == name) return f;
  }
  return family(name);
}

const QPoly& normal_form() {
  static const QPoly p = parse_qpoly(kNormalForm);
  return p;
}

const std::vector<QPoly>& sigma0_factors() {
  static const std::vector<QPoly> v = [] {
    std::vector<QPoly> out;
    for (const char* s : {"c", "c - f", "-c + e", "c + f", "c + e", "-e + f", "-c*d + c*f + e*f", "-c*d + c*e + e*f",
                          "-c^2 - c*d + e*f", "b*c - c*f + e*f", "b*c - c*e + e*f", "b*c - c*d + 2*e*f",
                          "b*c - c^2 + e*f", "b*c^2 + c^2*d + b*c*f - 2*c^2*f - c*d*f + 2*e*f^2",
                          "b*c^2 + c^2*d + b*c*e - 2*c^2*e - c*d*e + 2*e^2*f",
                          "-b*c^3 - 2*b*c^2*d + c^3*d + b*c^2*e + c^2*d*e + b*c^2*f + c^2*d*f + 3*b*c*e*f"
                          " - 4*c^2*e*f - 3*c*d*e*f + 4*e^2*f^2"}) {
      out.push_back(parse_qpoly(s));
    }
    return out;
  }();
  return v;
}

std::map<int, NfElem> parse_params(const FamilySpec& spec, std::string_view text) {
  std::map<int, NfElem> out;
  FieldRef k = spec.field();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected name=value in '" + std::string(item) + "'");
    std::string name(item.substr(0, eq));
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    int v = name.size() == 1 ? var_index(name[0]) : -1;
    if (v < 0 || std::find(spec.free_params.begin(), spec.free_params.end(), v) == spec.free_params.end()) {
      throw Error(ErrorCode::UnknownParameter, "'" + name + "' is not a free parameter of " + spec.name);
    }
    if (out.count(v)) throw Error(ErrorCode::InvalidArgument, "parameter '" + name + "' given twice");
    out.emplace(v, parse_nfelem(item.substr(eq + 1), k));
  }
  return out;
}

Params<NfElem> family_parameters(const FamilySpec& spec, const std::map<int, NfElem>& free) {
  FieldRef k = spec.field();
  std::array<std::optional<NfElem>, 5> p;
  for (const auto& [v, x] : free) {
    if (std::find(spec.free_params.begin(), spec.free_params.end(), v) == spec.free_params.end()) {
      throw Error(ErrorCode::UnknownParameter, std::string(var_name(v)) + " is not a free parameter of " + spec.name);
    }
    if (x.field() != k) throw Error(ErrorCode::FieldMismatch, std::string("parameter ") + var_name(v));
    p[param_slot(v)] = x;
  }
  for (int v : spec.free_params) {
    if (!p[param_slot(v)]) throw Error(ErrorCode::MissingParameter, std::string("no value for ") + var_name(v));
  }
  return apply_lambda<NfElem>(spec, p, k);
}

std::optional<int> vanishing_sigma_factor(const Params<NfElem>& p) {
  FieldRef k = p[0].field();
  std::array<const NfElem*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &p[i];
  const auto& fs = sigma0_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    NfElem x = fs[i].evaluate<NfElem>(vals, k->zero(), [k](const Rational& r) { return NfElem(k, r); });
    if (x.is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

CubicForm<NfElem> normal_form_at(const Params<NfElem>& p) {
  FieldRef k = p[0].field();
  std::array<const NfElem*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &p[i];
  return cubic_from_poly<NfElem>(normal_form(), k->zero(), [&](const QPoly& c) {
    return c.evaluate<NfElem>(vals, k->zero(), [k](const Rational& r) { return NfElem(k, r); });
  });
}

std::array<PluckerLine<NfElem>, 6> extended_lset_at(const Params<NfElem>& p) {
  auto l = basic_lset_lines(p[0]);
  return {l[0], l[1], l[2], l[3], l[4], sixth_line(p[0], p[1], p[2], p[3], p[4])};
}

NfPoly form_poly(const CubicForm<NfElem>& form) {
  FieldRef k = form[0].field();
  NfPoly out = NfPoly::constant(k, 0);
  for (int m = 0; m < static_cast<int>(form.size()); ++m) {
    if (form[m].is_zero()) continue;
    NfPoly t = NfPoly::constant(form[m]);
    for (int v : kCubicMonomials<4>.mono[m]) t *= NfPoly::variable(k, v);
    out += t;
  }
  return out;
}

FamilyMember family_surface(const FamilySpec& spec, const std::map<int, NfElem>& free, bool check_smooth) {
  FamilyMember m;
  m.spec = &spec;
  m.params = family_parameters(spec, free);
  if (auto bad = vanishing_sigma_factor(m.params)) {
    if (check_smooth) throw Error(ErrorCode::SingularMember, "factor " + sigma0_factors()[*bad].str() + " vanishes");
  }
  m.surface.form = normal_form_at(m.params);
  m.surface.lines = lines_from_extended(m.surface.form, extended_lset_at(m.params));
  return m;
}

FamilyMember family_surface(std::string_view name, const std::map<int, NfElem>& free, bool check_smooth) {
  return family_surface(family(name), free, check_smooth);
}

namespace {

// Some triple outside the family's set satisfies its generic Eckardt condition.
bool extra_eckardt(const FamilySpec& spec, const Params<NfElem>& p) {
  FieldRef k = spec.field();
  std::array<const NfElem*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &p[i];
  const auto& gen = generic_eckardt_conditions();
  for (int t = 0; t < kNumTriples; ++t) {
    if (std::binary_search(spec.eckardt_ids.begin(), spec.eckardt_ids.end(), t)) continue;
    if (eval_at(to_nfpoly(gen[t], k), vals, k).is_zero()) return true;
  }
  return false;
}

}  // namespace

std::map<int, NfElem> sample_parameters(const FamilySpec& spec, std::mt19937_64& rng, int range) {
  FieldRef k = spec.field();
  std::uniform_int_distribution<int> dist(-range, range);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::map<int, NfElem> free;
    for (int v : spec.free_params) {
      int x = 0;
      while (x == 0) x = dist(rng);
      free.emplace(v, NfElem(k, x));
    }
    try {
      auto p = family_parameters(spec, free);
      if (!vanishing_sigma_factor(p) && !extra_eckardt(spec, p)) return free;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DenominatorVanishes) throw;
    }
    if (spec.free_params.empty()) break;
  }
  throw Error(ErrorCode::SingularMember, "no smooth member of " + spec.name + " found");
}

Params<NfRatFunc> symbolic_parameters(const FamilySpec& spec) {
  FieldRef k = spec.field();
  std::array<std::optional<NfRatFunc>, 5> p;
  for (int v : spec.free_params) p[param_slot(v)] = NfRatFunc(NfPoly::variable(k, v));
  return apply_lambda<NfRatFunc>(spec, p, k);
}

Params<QRatFunc> symbolic_parameters_q(const FamilySpec& spec) {
  if (!spec.is_rational()) throw Error(ErrorCode::InvalidArgument, spec.name + " is not defined over Q");
  auto p = symbolic_parameters(spec);
  Params<QRatFunc> out;
  for (int i = 0; i < 5; ++i) out[i] = to_q(p[i]);
  return out;
}

NfPoly family_equation(const FamilySpec& spec) {
  FieldRef k = spec.field();
  auto p = symbolic_parameters(spec);
  std::array<const NfRatFunc*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &p[i];
  auto parts = to_nfpoly(normal_form(), k).split(kCoordMask);
  std::vector<std::pair<Exponents, NfRatFunc>> coeffs;
  NfPoly den = NfPoly::constant(k, 1);
  for (auto& [mono, c] : parts) {
    NfRatFunc v = eval_at(c, vals, k);
    if (v.is_zero()) continue;
    den = lcm(den, v.den());
    coeffs.push_back({mono, std::move(v)});
  }
  NfPoly content;
  std::vector<std::pair<Exponents, NfPoly>> nums;
  for (auto& [mono, v] : coeffs) {
    NfPoly n = v.num() * exact_div_or_throw(den, v.den());
    content = content.is_zero() ? n : gcd(content, n);
    nums.push_back({mono, std::move(n)});
  }
  NfPoly out(k);
  for (auto& [mono, n] : nums) out += NfPoly::monomial(mono, k->one()) * exact_div_or_throw(n, content);
  return tidy(out);
}

NfPoly table_equation(const FamilySpec& spec) { return parse_nfpoly(spec.table_equation, spec.field()); }

bool table_equation_matches(const FamilySpec& spec) {
  return proportional(family_equation(spec), table_equation(spec), kCoordMask);
}

CubicForm<QRatFunc> symbolic_form(const FamilySpec& spec) {
  auto p = symbolic_parameters_q(spec);
  std::array<const QRatFunc*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &p[i];
  const QRatFunc zero = QRatFunc::constant({}, 0);
  return cubic_from_poly<QRatFunc>(normal_form(), zero, [&](const QPoly& c) {
    return c.evaluate<QRatFunc>(vals, zero, [](const Rational& r) { return QRatFunc::constant({}, r); });
  });
}

CubicSurface<QRatFunc> symbolic_surface(const FamilySpec& spec) {
  auto p = symbolic_parameters_q(spec);
  CubicSurface<QRatFunc> s{symbolic_form(spec), std::nullopt};
  auto l = basic_lset_lines(p[0]);
  std::array<PluckerLine<QRatFunc>, 6> ext{l[0], l[1], l[2], l[3], l[4], sixth_line(p[0], p[1], p[2], p[3], p[4])};
  s.lines = lines_from_extended(s.form, ext);
  return s;
}

const std::vector<QCondition>& q_conditions() {
  static const std::vector<QCondition> v = [] {
    const std::vector<std::pair<const char*, std::vector<int>>> rows = {
        {"5c^2 - c*e - c*f + e*f", {1, 11, 18}},
        {"3c^2 + c*e + c*f - e*f", {2}},
        {"c^2 + 3c*e - c*f + e*f", {4, 28, 35}},
        {"c^2 - c*e + 3c*f + e*f", {5, 23, 36}},
        {"5c^2 + c*e + c*f + e*f", {6, 13, 17}},
        {"3c^2 - c*e - c*f - e*f", {8}},
        {"c^2 + c*e - 3c*f + e*f", {9, 29, 41}},
        {"c^2 - 3c*e + c*f + e*f", {10, 24, 44}},
        {"c^2 + e*f", {12, 16, 31}},
        {"3c^2 + e^2", {14, 20, 22, 26, 33, 42}},
        {"3c^2 + f^2", {15, 19, 21, 27, 32, 45}},
        {"2c - e + f", {25, 39, 43}},
        {"2c + e - f", {30, 38, 40}},
        {"e + f", {37}},
    };
    std::vector<QCondition> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<int> planes;
      for (int t : rows[i].second) planes.push_back(t - 1);
      out.push_back({static_cast<int>(i) + 1, parse_qpoly(rows[i].first), planes});
    }
    return out;
  }();
  return v;
}

const std::array<QPoly, kNumTriples>& generic_eckardt_conditions() {
  static const std::array<QPoly, kNumTriples> v = [] {
    auto s = symbolic_surface(family("Se0"));
    std::array<QPoly, kNumTriples> out;
    for (int t = 0; t < kNumTriples; ++t) out[t] = eckardt_condition(*s.lines, t);
    return out;
  }();
  return v;
}

QPoly specialize(const QPoly& p, const FamilySpec& spec) {
  FieldRef k = NumberField::rationals();
  auto params = symbolic_parameters(spec);
  std::array<const NfRatFunc*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &params[i];
  NfRatFunc r = eval_at(to_nfpoly(p, k), vals, k);
  if (r.is_zero()) return QPoly();
  auto drop = lambda_denominators(params);
  for (auto& f : singular_locus(spec)) drop.push_back(std::move(f));
  return primitive_integral(to_qpoly(strip(r.num(), drop)));
}

std::vector<NfPoly> singular_locus(const FamilySpec& spec) {
  FieldRef k = spec.field();
  auto params = symbolic_parameters(spec);
  std::array<const NfRatFunc*, kNumVars> vals{};
  for (int i = 0; i < 5; ++i) vals[Var::B + i] = &params[i];
  auto dens = lambda_denominators(params);
  std::vector<NfPoly> parts;
  for (const auto& f : sigma0_factors()) {
    NfRatFunc r = eval_at(to_nfpoly(f, k), vals, k);
    if (r.is_zero()) throw Error(ErrorCode::SingularMember, spec.name + " lies in the singular locus");
    parts.push_back(strip(r.num(), dens));
  }
  // Denominators of Lambda are excluded values as well.
  for (const auto& d : dens) parts.push_back(d);
  return coprime_basis(parts);
}

CollinearityReport collinearity_report(const std::vector<EckardtPoint<NfElem>>& points) {
  CollinearityReport rep;
  std::set<std::vector<int>> seen;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto l = line_from_points(points[i].point, points[j].point);
      std::vector<int> on;
      for (const auto& p : points) {
        if (point_on_line(p.point, l)) on.push_back(p.triple_id);
      }
      if (on.size() >= 3) seen.insert(on);
    }
  }
  rep.collinear.assign(seen.begin(), seen.end());
  if (n < 3) return rep;
  auto l = line_from_points(points[0].point, points[1].point);
  for (std::size_t k = 2; k < n; ++k) {
    if (point_on_line(points[k].point, l)) continue;
    auto plane = span_plane(l, line_from_points(points[0].point, points[k].point));
    for (const auto& p : points) {
      if (!point_on_plane(p.point, plane)) return rep;
    }
    rep.common_plane = plane;
    break;
  }
  return rep;
}

const std::array<NfPoly, 5>& sylvester_forms(FieldRef field) {
  static std::mutex mu;
  static std::map<FieldRef, std::array<NfPoly, 5>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(field);
  if (it == cache.end()) {
    std::array<NfPoly, 5> f{parse_nfpoly("y - z", field), parse_nfpoly("x - y", field), parse_nfpoly("x + t", field),
                            parse_nfpoly("x - 2y + t", field), parse_nfpoly("2x - y + z", field)};
    it = cache.emplace(field, std::move(f)).first;
  }
  return it->second;
}

std::optional<std::array<NfElem, 5>> sylvester_weights(const CubicForm<NfElem>& form) {
  FieldRef k = form[0].field();
  std::array<CubicForm<NfElem>, 5> cubes;
  for (int j = 0; j < 5; ++j) cubes[j] = to_form(sylvester_forms(k)[j].pow(3), k);
  return solve_span(cubes, form);
}

bool sylvester_check(const CubicForm<NfElem>& form) {
  auto w = sylvester_weights(form);
  return w && std::none_of(w->begin(), w->end(), [](const NfElem& x) { return x.is_zero(); });
}

WitnessKind parse_witness_kind(std::string_view s) {
  if (s == "identity") return WitnessKind::Identity;
  if (s == "T0T1") return WitnessKind::T0T1;
  if (s == "T0T2") return WitnessKind::T0T2;
  if (s == "Se9pair") return WitnessKind::Se9Pair;
  throw Error(ErrorCode::InvalidArgument, "unknown witness kind '" + std::string(s) + "'");
}

std::optional<LSet> lset_with_pattern(const std::vector<int>& triple_ids) {
  std::vector<int> want = triple_ids;
  std::sort(want.begin(), want.end());
  for (const auto& l : enumerate_lsets()) {
    auto p = lset_pattern(l);
    std::vector<int> got(p.begin(), p.end());
    std::sort(got.begin(), got.end());
    if (got == want) return l;
  }
  return std::nullopt;
}

std::optional<std::array<NfElem, 5>> basis_coordinates(const CubicForm<NfElem>& form) {
  FieldRef k = form[0].field();
  std::array<CubicForm<NfElem>, 5> basis;
  for (int j = 0; j < 5; ++j) basis[j] = to_form(basis_poly(j), k);
  return solve_span(basis, form);
}

namespace {

// Membership of a form through L_b in T0 or T1, in the (a, b, c, d, g) coordinates of the basis cubics.
bool in_subfamily(const CubicForm<NfElem>& form, int sign) {
  auto co = basis_coordinates(form);
  if (!co) return false;
  const auto& [a, b, c, d, g] = *co;
  FieldRef k = a.field();
  NfElem two(k, 2), three(k, 3);
  bool l1 = (a + b + c).is_zero();
  bool l3 = (two * d - (three * a - c + g)).is_zero();
  bool q = (three * c + NfElem(k, sign) * g - a).is_zero();
  return l1 && l3 && q && !c.is_zero();
}

}  // namespace

Witness equivalence_witness(WitnessKind kind, const std::map<int, NfElem>& free) {
  auto build = [&](const FamilySpec& spec, const LSet& l) {
    Witness w{kind, family_surface(spec, free), {}, {}, {}};
    w.matrix = find_projectivity(pick(w.source.lines(), l), basic_lset_lines(w.source.params[0]));
    w.image = map_cubic(w.matrix, w.source.surface.form);
    return w;
  };
  switch (kind) {
    case WitnessKind::Identity: {
      Witness w = build(family("Se0"), basic_lset());
      if (!proportional_vec(w.image, w.source.surface.form)) throw Error(ErrorCode::PostCheckFailed, "identity");
      w.target = "Se0 (same parameters)";
      return w;
    }
    case WitnessKind::T0T1: {
      LSet l{g_line(4), e_line(1), g_line(3), e_line(2), g_line(2)};
      Witness w = build(aux_family("T1"), l);
      if (!in_subfamily(w.image, 1)) throw Error(ErrorCode::PostCheckFailed, "image of T1 member is not in T0");
      w.target = "T0";
      return w;
    }
    case WitnessKind::T0T2: {
      auto l = lset_with_pattern(aux_family("T2").eckardt_ids);
      if (!l) throw Error(ErrorCode::PostCheckFailed, "no L-set with the T2 pattern");
      Witness w = build(aux_family("T2"), *l);
      if (!in_subfamily(w.image, 1)) throw Error(ErrorCode::PostCheckFailed, "image of T2 member is not in T0");
      w.target = "T0";
      return w;
    }
    case WitnessKind::Se9Pair: {
      LSet l{f_line(4, 6), g_line(6), f_line(2, 6), f_line(1, 5), e_line(3)};
      Witness w = build(family("Se9"), l);
      const auto& p = w.source.params;
      FieldRef k = p[0].field();
      NfElem s3 = k->gen() - k->one();  // sqrt(-3)
      NfElem c = p[1], f = p[4];
      std::map<int, NfElem> tp{{Var::C, f - c}, {Var::F, -c + NfElem(k, 2) * s3 * c - f}};
      auto target = family_surface(aux_family("Se9conj"), tp, false);
      if (!proportional_vec(w.image, target.surface.form)) {
        throw Error(ErrorCode::PostCheckFailed, "image of Se9 member is not the conjugate member");
      }
      w.target = "Se9conj(c = " + tp.at(Var::C).str() + ", f = " + tp.at(Var::F).str() + ")";
      return w;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "witness kind");
}

}  // namespace cubic27
