#pragma once

#include <string>

#include "cubic27/number_field.hpp"
#include "cubic27/rational.hpp"

namespace cubic27 {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  struct Ctx {
    friend bool operator==(Ctx, Ctx) { return true; }
  };
  static Ctx ctx_of(const Rational&) { return {}; }
  static Rational from_rational(Ctx, const Rational& q) { return q; }
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational inverse(const Rational& c) { return 1 / c; }
  static bool is_sum(const Rational&) { return false; }
  static bool is_negative(const Rational& c) { return c < 0; }
  static std::string str(const Rational& c) { return c.get_str(); }
  static std::size_t hash(const Rational& c) { return hash_value(c); }
};

template <>
struct CoeffTraits<NfElem> {
  using Ctx = FieldRef;
  static Ctx ctx_of(const NfElem& c) { return c.field(); }
  static NfElem from_rational(Ctx k, const Rational& q) { return NfElem(k, q); }
  static bool is_zero(const NfElem& c) { return c.is_zero(); }
  static bool is_one(const NfElem& c) { return c.is_one(); }
  static NfElem inverse(const NfElem& c) { return c.inverse(); }
  static bool is_sum(const NfElem& c) {
    int n = 0;
    for (const auto& q : c.coeffs()) n += q != 0;
    return n > 1;
  }
  static bool is_negative(const NfElem& c) {
    if (is_sum(c)) return false;
    for (const auto& q : c.coeffs()) {
      if (q != 0) return q < 0;
    }
    return false;
  }
  static std::string str(const NfElem& c) { return c.str(); }
  static std::size_t hash(const NfElem& c) { return c.hash(); }
};

}  // namespace cubic27
