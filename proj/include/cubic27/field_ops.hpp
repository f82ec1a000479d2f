#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "cubic27/ratfunc.hpp"

namespace cubic27 {

// Uniform access to the two scalar fields used by the geometry layer:
// NfElem (a number field) and QRatFunc (the rational function field Q(b,c,d,e,f)).
template <class F>
struct FieldOps;

template <>
struct FieldOps<NfElem> {
  static NfElem zero(const NfElem& like) { return like.field()->zero(); }
  static NfElem one(const NfElem& like) { return like.field()->one(); }
  static NfElem from_rational(const NfElem& like, const Rational& q) { return NfElem(like.field(), q); }
  static bool is_zero(const NfElem& x) { return x.is_zero(); }
  static std::string str(const NfElem& x) { return x.str(); }
  static std::size_t hash(const NfElem& x) { return x.hash(); }

  // First nonzero entry becomes 1. Returns false for the zero vector.
  template <std::size_t N>
  static bool normalize(std::array<NfElem, N>& v) {
    for (std::size_t i = 0; i < N; ++i) {
      if (v[i].is_zero()) continue;
      if (v[i].is_one()) return true;
      NfElem inv = v[i].inverse();
      for (std::size_t j = i; j < N; ++j) {
        if (!v[j].is_zero()) v[j] *= inv;
      }
      return true;
    }
    return false;
  }
};

template <>
struct FieldOps<QRatFunc> {
  static QRatFunc zero(const QRatFunc&) { return QRatFunc::constant({}, 0); }
  static QRatFunc one(const QRatFunc&) { return QRatFunc::constant({}, 1); }
  static QRatFunc from_rational(const QRatFunc&, const Rational& q) { return QRatFunc::constant({}, q); }
  static bool is_zero(const QRatFunc& x) { return x.is_zero(); }
  static std::string str(const QRatFunc& x) { return x.str(); }
  static std::size_t hash(const QRatFunc& x) { return hash_combine(x.num().hash(), x.den().hash()); }

  // Polynomial entries with no common factor, integral coefficients of content 1,
  // first nonzero entry with positive leading coefficient.
  template <std::size_t N>
  static bool normalize(std::array<QRatFunc, N>& v) {
    QPoly l = QPoly::constant({}, 1);
    bool any = false;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      any = true;
      if (!x.den().is_constant()) l = l * exact_div_or_throw(x.den(), gcd(l, x.den()));
    }
    if (!any) return false;
    std::array<QPoly, N> nums;
    QPoly g;
    for (std::size_t i = 0; i < N; ++i) {
      if (v[i].is_zero()) continue;
      nums[i] = v[i].num() * exact_div_or_throw(l, v[i].den());
      g = g.is_zero() ? nums[i] : gcd(g, nums[i]);
    }
    mpz_class num = 0, den = 1;
    int first = -1;
    for (std::size_t i = 0; i < N; ++i) {
      if (nums[i].is_zero()) continue;
      if (!g.is_constant()) nums[i] = exact_div_or_throw(nums[i], g);
      if (first < 0) first = static_cast<int>(i);
      for (const auto& t : nums[i].terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      }
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (nums[first].leading_coeff() < 0) scale = -scale;
    for (std::size_t i = 0; i < N; ++i) {
      v[i] = nums[i].is_zero() ? zero(v[i]) : QRatFunc(nums[i] * scale);
    }
    return true;
  }
};

}  // namespace cubic27
