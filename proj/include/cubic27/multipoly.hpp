#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic27/coeff_traits.hpp"
#include "cubic27/error.hpp"

namespace cubic27 {

// Fixed variable universe; deg-lex order with x > y > z > t > b > c > d > e > f.
enum Var : int { X = 0, Y, Z, T, B, C, D, E, F };
constexpr int kNumVars = 9;
constexpr std::uint32_t kCoordMask = 0xF;  // x, y, z, t

const char* var_name(int v);
int var_index(char ch);  // -1 if not a variable letter

using Exponents = std::array<std::uint16_t, kNumVars>;

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

inline bool mono_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

inline bool mono_divides(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

inline Exponents mono_div(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

inline Exponents mono_var(int v, int power = 1) {
  Exponents e{};
  e[v] = static_cast<std::uint16_t>(power);
  return e;
}

template <class C>
class MultiPoly {
 public:
  using Traits = CoeffTraits<C>;
  using Ctx = typename Traits::Ctx;
  struct Term {
    Exponents mono;
    C coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(Ctx ctx) : ctx_(ctx) {}

  static MultiPoly constant(const C& c) {
    MultiPoly p(Traits::ctx_of(c));
    if (!Traits::is_zero(c)) p.terms_.push_back({Exponents{}, c});
    return p;
  }
  static MultiPoly constant(Ctx ctx, const Rational& q) { return constant(Traits::from_rational(ctx, q)); }
  static MultiPoly variable(Ctx ctx, int v) { return monomial(mono_var(v), Traits::from_rational(ctx, 1)); }
  static MultiPoly monomial(const Exponents& e, const C& c) {
    MultiPoly p(Traits::ctx_of(c));
    if (!Traits::is_zero(c)) p.terms_.push_back({e, c});
    return p;
  }
  // Terms in any order; equal monomials are combined.
  static MultiPoly from_terms(Ctx ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
    MultiPoly p(ctx);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!Traits::is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  Ctx ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && cubic27::total_degree(terms_[0].mono) == 0); }
  bool is_one() const { return is_constant() && !terms_.empty() && Traits::is_one(terms_[0].coeff); }
  C zero_coeff() const { return Traits::from_rational(ctx_, 0); }
  C one_coeff() const { return Traits::from_rational(ctx_, 1); }
  C constant_value() const { return terms_.empty() ? zero_coeff() : terms_.back().coeff; }
  const C& leading_coeff() const { return terms_.front().coeff; }
  const Exponents& leading_mono() const { return terms_.front().mono; }

  int total_degree() const { return terms_.empty() ? -1 : cubic27::total_degree(terms_.front().mono); }
  int degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono[v]);
    return d;
  }
  std::uint32_t var_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_) {
      for (int i = 0; i < kNumVars; ++i) {
        if (t.mono[i]) m |= 1u << i;
      }
    }
    return m;
  }
  bool is_homogeneous_in(std::uint32_t mask, int degree) const {
    for (const auto& t : terms_) {
      int d = 0;
      for (int i = 0; i < kNumVars; ++i) {
        if (mask >> i & 1u) d += t.mono[i];
      }
      if (d != degree) return false;
    }
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(*this, o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const C& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  friend MultiPoly operator*(MultiPoly a, const C& c) { return a *= c; }
  friend MultiPoly operator*(const C& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() > b.terms_.size()) return b * a;
    if (a.terms_.empty()) return MultiPoly(b.ctx_);
    std::vector<MultiPoly> parts;
    parts.reserve(a.terms_.size());
    for (const auto& t : a.terms_) parts.push_back(b.mul_term(t.mono, t.coeff));
    while (parts.size() > 1) {
      std::vector<MultiPoly> next;
      next.reserve(parts.size() / 2 + 1);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(merge(parts[i], parts[i + 1], false));
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return std::move(parts.front());
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly mul_term(const Exponents& e, const C& c) const {
    MultiPoly r(ctx_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, e), t.coeff * c});
    return r;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(ctx_, 1), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  // Coefficients as polynomials in the remaining variables, indexed by the power of v.
  std::vector<MultiPoly> coefficients_in(int v) const {
    std::vector<std::vector<Term>> buckets(std::max(degree_in(v), 0) + 1);
    for (const auto& t : terms_) {
      Term u = t;
      u.mono[v] = 0;
      buckets[t.mono[v]].push_back(std::move(u));
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      MultiPoly p(ctx_);
      p.terms_ = std::move(b);  // already sorted: removing one variable keeps relative deg-lex order within a fixed power
      out.push_back(std::move(p));
    }
    return out;
  }
  static MultiPoly from_coefficients(Ctx ctx, int v, const std::vector<MultiPoly>& cs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (const auto& t : cs[i].terms_) {
        Term u = t;
        u.mono[v] = static_cast<std::uint16_t>(u.mono[v] + i);
        terms.push_back(std::move(u));
      }
    }
    return from_terms(ctx, std::move(terms));
  }

  // Group by the exponents of the variables in mask; remaining variables go into the coefficient.
  std::vector<std::pair<Exponents, MultiPoly>> split(std::uint32_t mask) const {
    std::vector<std::pair<Exponents, std::vector<Term>>> groups;
    for (const auto& t : terms_) {
      Exponents key{}, rest = t.mono;
      for (int i = 0; i < kNumVars; ++i) {
        if (mask >> i & 1u) {
          key[i] = t.mono[i];
          rest[i] = 0;
        }
      }
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) {
        groups.push_back({key, {}});
        it = groups.end() - 1;
      }
      it->second.push_back({rest, t.coeff});
    }
    std::vector<std::pair<Exponents, MultiPoly>> out;
    for (auto& g : groups) out.push_back({g.first, from_terms(ctx_, std::move(g.second))});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return mono_greater(a.first, b.first); });
    return out;
  }

  MultiPoly substitute(int v, const MultiPoly& value) const {
    if (degree_in(v) <= 0) return *this;
    auto cs = coefficients_in(v);
    MultiPoly acc(ctx_);
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * value + cs[i];
    return acc;
  }

  MultiPoly derivative(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (!t.mono[v]) continue;
      Term u = t;
      u.coeff *= Traits::from_rational(ctx_, Rational(t.mono[v]));
      --u.mono[v];
      out.push_back(std::move(u));
    }
    return from_terms(ctx_, std::move(out));
  }

  // Evaluates with every variable that occurs bound; conv maps coefficients into V.
  template <class V, class Conv>
  V evaluate(const std::array<const V*, kNumVars>& values, const V& zero, Conv conv) const {
    std::array<std::vector<V>, kNumVars> powers;
    V acc = zero;
    for (const auto& t : terms_) {
      V term = conv(t.coeff);
      for (int i = 0; i < kNumVars; ++i) {
        if (!t.mono[i]) continue;
        if (!values[i]) throw Error(ErrorCode::MissingParameter, std::string("no value for ") + var_name(i));
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(*values[i]);
        while (pw.size() < t.mono[i]) pw.push_back(pw.back() * *values[i]);
        term = term * pw[t.mono[i] - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Substitutes constants for the variables with a value; others stay symbolic.
  MultiPoly partial_evaluate(const std::array<const C*, kNumVars>& values) const {
    std::vector<Term> out;
    std::array<std::vector<C>, kNumVars> powers;
    for (const auto& t : terms_) {
      Term u = t;
      for (int i = 0; i < kNumVars; ++i) {
        if (!t.mono[i] || !values[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(*values[i]);
        while (pw.size() < t.mono[i]) pw.push_back(pw.back() * *values[i]);
        u.coeff *= pw[t.mono[i] - 1];
        u.mono[i] = 0;
      }
      out.push_back(std::move(u));
    }
    return from_terms(ctx_, std::move(out));
  }

  template <class D, class Conv>
  MultiPoly<D> map_coeffs(typename CoeffTraits<D>::Ctx ctx, Conv conv) const {
    std::vector<typename MultiPoly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, conv(t.coeff)});
    return MultiPoly<D>::from_terms(ctx, std::move(out));
  }

  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    return *this * Traits::inverse(leading_coeff());
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      for (auto e : t.mono) h = hash_combine(h, e);
      h = hash_combine(h, Traits::hash(t.coeff));
    }
    return h;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      bool has_mono = cubic27::total_degree(t.mono) > 0;
      std::string mono;
      for (int i = 0; i < kNumVars; ++i) {
        if (!t.mono[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(i);
        if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
      }
      if (Traits::is_sum(t.coeff)) {
        s += s.empty() ? "" : " + ";
        s += "(" + Traits::str(t.coeff) + ")";
        if (has_mono) s += "*" + mono;
        continue;
      }
      bool neg = Traits::is_negative(t.coeff);
      C a = neg ? C(-t.coeff) : t.coeff;
      if (s.empty()) {
        s += neg ? "-" : "";
      } else {
        s += neg ? " - " : " + ";
      }
      if (!has_mono) {
        s += Traits::str(a);
      } else if (Traits::is_one(a)) {
        s += mono;
      } else {
        s += Traits::str(a) + "*" + mono;
      }
    }
    return s;
  }

 private:
  template <class>
  friend class MultiPoly;

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r(a.terms_.empty() ? b.ctx_ : a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && mono_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || mono_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? C(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!Traits::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ctx ctx_{};
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<Rational>;
using NfPoly = MultiPoly<NfElem>;

// Exact quotient p / q, or nullopt when q does not divide p.
template <class C>
std::optional<MultiPoly<C>> exact_div(const MultiPoly<C>& p, const MultiPoly<C>& q) {
  using P = MultiPoly<C>;
  using Traits = CoeffTraits<C>;
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (p.is_zero()) return P(p.ctx());
  if (q.is_constant()) return p * Traits::inverse(q.leading_coeff());
  for (int v = 0; v < kNumVars; ++v) {
    if (q.degree_in(v) > p.degree_in(v)) return std::nullopt;
  }
  const C inv_lc = Traits::inverse(q.leading_coeff());
  const Exponents& lq = q.leading_mono();
  std::vector<typename P::Term> quot;
  P r = p;
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_mono();
    if (!mono_divides(lq, lr)) return std::nullopt;
    Exponents m = mono_div(lr, lq);
    C c = r.leading_coeff() * inv_lc;
    r -= q.mul_term(m, c);
    quot.push_back({m, std::move(c)});
  }
  return P::from_terms(p.ctx(), std::move(quot));
}

template <class C>
MultiPoly<C> exact_div_or_throw(const MultiPoly<C>& p, const MultiPoly<C>& q) {
  auto r = exact_div(p, q);
  if (!r) throw Error(ErrorCode::DivisionFailed, "polynomial does not divide exactly");
  return std::move(*r);
}

// p and q differ by a nonzero factor that involves no variable in main_mask.
// With main_mask == all variables the factor is a constant.
template <class C>
bool proportional(const MultiPoly<C>& p, const MultiPoly<C>& q, std::uint32_t main_mask = (1u << kNumVars) - 1) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  auto sp = p.split(main_mask), sq = q.split(main_mask);
  if (sp.size() != sq.size()) return false;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (sp[i].first != sq[i].first) return false;
  }
  for (std::size_t i = 1; i < sp.size(); ++i) {
    if (sp[i].second * sq[0].second != sp[0].second * sq[i].second) return false;
  }
  return true;
}

namespace detail {

template <class C>
using UniPoly = std::vector<C>;

template <class C>
void uni_trim(UniPoly<C>& p) {
  while (!p.empty() && CoeffTraits<C>::is_zero(p.back())) p.pop_back();
}

template <class C>
int uni_gcd_degree(UniPoly<C> a, UniPoly<C> b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    // a <- a mod b
    C inv = CoeffTraits<C>::inverse(b.back());
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t k = a.size() - b.size();
      C f = a.back() * inv;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
      a.pop_back();
      uni_trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Cheap deterministic pseudo-random evaluation points.
inline long eval_point(unsigned& state) {
  state = state * 1103515245u + 12345u;
  return static_cast<long>((state >> 16) % 89u) + 2;
}

template <class C>
MultiPoly<C> poly_gcd_impl(const MultiPoly<C>& a, const MultiPoly<C>& b);

template <class C>
MultiPoly<C> content_in(const std::vector<MultiPoly<C>>& cs) {
  std::vector<const MultiPoly<C>*> order;
  for (const auto& c : cs) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  MultiPoly<C> g = *order.front();
  for (std::size_t i = 1; i < order.size() && !g.is_constant(); ++i) g = poly_gcd_impl(g, *order[i]);
  return g.is_constant() ? MultiPoly<C>::constant(g.ctx(), 1) : g;
}

template <class C>
std::vector<MultiPoly<C>> uni_trimmed(std::vector<MultiPoly<C>> cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

template <class C>
std::vector<MultiPoly<C>> prem(const std::vector<MultiPoly<C>>& a, const std::vector<MultiPoly<C>>& b) {
  std::vector<MultiPoly<C>> r = a;
  const auto& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    MultiPoly<C> lr = r.back();
    std::size_t k = r.size() - 1 - db;
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= lr * b[j];
    r = uni_trimmed(std::move(r));
  }
  return r;
}

template <class C>
std::vector<MultiPoly<C>> primitive_in(const std::vector<MultiPoly<C>>& cs) {
  MultiPoly<C> g = content_in(cs);
  if (g.is_constant()) {
    std::vector<MultiPoly<C>> out = cs;
    C inv = CoeffTraits<C>::inverse(out.back().leading_coeff());
    for (auto& c : out) c *= inv;
    return out;
  }
  std::vector<MultiPoly<C>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(exact_div_or_throw(c, g));
  return out;
}

template <class C>
MultiPoly<C> monomial_content(const MultiPoly<C>& p) {
  Exponents m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.mono[i]);
  }
  return MultiPoly<C>::monomial(m, p.one_coeff());
}

template <class C>
MultiPoly<C> poly_gcd_impl(const MultiPoly<C>& a_in, const MultiPoly<C>& b_in) {
  using P = MultiPoly<C>;
  using Traits = CoeffTraits<C>;
  const auto ctx = a_in.is_zero() ? b_in.ctx() : a_in.ctx();
  if (a_in.is_zero()) return b_in.monic();
  if (b_in.is_zero()) return a_in.monic();
  if (a_in.is_constant() || b_in.is_constant()) return P::constant(ctx, 1);

  P ma = monomial_content(a_in), mb = monomial_content(b_in);
  Exponents mg;
  for (int i = 0; i < kNumVars; ++i) mg[i] = std::min(ma.leading_mono()[i], mb.leading_mono()[i]);
  P gm = P::monomial(mg, a_in.one_coeff());
  P a = ma.is_one() ? a_in : exact_div_or_throw(a_in, ma);
  P b = mb.is_one() ? b_in : exact_div_or_throw(b_in, mb);
  if (a.is_constant() || b.is_constant()) return gm;

  if (a.size() > b.size()) std::swap(a, b);
  if (auto q = exact_div(b, a)) return gm * a.monic();

  std::uint32_t ma_mask = a.var_mask(), mb_mask = b.var_mask();
  // A variable in only one argument: the gcd lives in its coefficients.
  for (int v = 0; v < kNumVars; ++v) {
    bool in_a = ma_mask >> v & 1u, in_b = mb_mask >> v & 1u;
    if (in_a == in_b) continue;
    const P& with = in_a ? a : b;
    P g = in_a ? b : a;
    auto cs = with.coefficients_in(v);
    std::sort(cs.begin(), cs.end(), [](const P& x, const P& y) { return x.size() < y.size(); });
    for (const auto& c : cs) {
      if (c.is_zero()) continue;
      g = poly_gcd_impl(g, c);
      if (g.is_constant()) return gm;
    }
    return gm * g.monic();
  }

  // Both share every variable; choose the main variable of smallest degree.
  int v = -1, best = 1 << 30;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(ma_mask >> i & 1u)) continue;
    int d = std::max(a.degree_in(i), b.degree_in(i));
    if (d < best) {
      best = d;
      v = i;
    }
  }
  auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
  P conta = content_in(ca), contb = content_in(cb);
  P gc = (conta.is_one() || contb.is_one()) ? P::constant(ctx, 1) : poly_gcd_impl(conta, contb);
  if (!conta.is_one()) {
    for (auto& c : ca) c = exact_div_or_throw(c, conta);
  }
  if (!contb.is_one()) {
    for (auto& c : cb) c = exact_div_or_throw(c, contb);
  }
  P pa = P::from_coefficients(ctx, v, ca), pb = P::from_coefficients(ctx, v, cb);

  // Degree bound in v from a random specialization of the other variables.
  int bound = -1;
  unsigned state = 0x2545F491u;
  for (int attempt = 0; attempt < 4 && bound < 0; ++attempt) {
    std::array<C, kNumVars> vals;
    std::array<const C*, kNumVars> ptr{};
    for (int i = 0; i < kNumVars; ++i) {
      if (i == v) continue;
      vals[i] = Traits::from_rational(ctx, Rational(eval_point(state)));
      ptr[i] = &vals[i];
    }
    auto image = [&](const std::vector<P>& cs) {
      UniPoly<C> u;
      for (const auto& c : cs) u.push_back(c.is_zero() ? c.zero_coeff() : c.partial_evaluate(ptr).constant_value());
      return u;
    };
    UniPoly<C> ua = image(ca), ub = image(cb);
    if (Traits::is_zero(ua.back()) || Traits::is_zero(ub.back())) continue;
    bound = uni_gcd_degree(ua, ub);
  }
  if (bound == 0) return (gm * gc).monic();

  std::vector<P> A = ca, Bv = cb;
  if (A.size() < Bv.size()) std::swap(A, Bv);
  auto try_candidate = [&](const std::vector<P>& cand) -> std::optional<P> {
    P g = P::from_coefficients(ctx, v, cand);
    if (exact_div(pa, g) && exact_div(pb, g)) return g;
    return std::nullopt;
  };
  if (bound > 0 && static_cast<int>(Bv.size()) - 1 == bound) {
    if (auto g = try_candidate(Bv)) return (gm * gc * g->monic()).monic();
  }
  for (;;) {
    auto R = prem(A, Bv);
    if (R.empty()) {
      P g = P::from_coefficients(ctx, v, primitive_in(Bv));
      return (gm * gc * g).monic();
    }
    if (R.size() == 1) return (gm * gc).monic();
    A = std::move(Bv);
    Bv = primitive_in(R);
    if (bound > 0 && static_cast<int>(Bv.size()) - 1 == bound) {
      if (auto g = try_candidate(Bv)) return (gm * gc * g->monic()).monic();
    }
  }
}

}  // namespace detail

// Monic (in the deg-lex leading term) greatest common divisor; gcd(0, 0) = 0.
template <class C>
MultiPoly<C> gcd(const MultiPoly<C>& a, const MultiPoly<C>& b) {
  if (a.is_zero() && b.is_zero()) return a;
  return detail::poly_gcd_impl(a, b);
}

// Integral representative with content 1 and positive leading coefficient.
QPoly primitive_integral(const QPoly& p);

// Squarefree part of p (monic).
template <class C>
MultiPoly<C> squarefree_part(const MultiPoly<C>& p) {
  MultiPoly<C> g = p;
  for (int v = 0; v < kNumVars; ++v) {
    if (p.degree_in(v) > 0) g = gcd(g, p.derivative(v));
  }
  return exact_div_or_throw(p, g).monic();
}

}  // namespace cubic27
