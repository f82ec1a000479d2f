#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "cubic27/rational.hpp"

namespace cubic27 {

class NumberField;
using FieldRef = const NumberField*;

// Dense univariate polynomial over Q, coefficients from low to high degree.
using UPoly = std::vector<Rational>;

namespace upoly {
void trim(UPoly& p);
int degree(const UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& p);
bool has_rational_root(const UPoly& p);
}  // namespace upoly

// Element of Q(w) stored as the reduced coefficient vector in the power basis 1, w, ..., w^(d-1).
class NfElem {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  NfElem() = default;
  NfElem(FieldRef field, const Rational& q);
  NfElem(FieldRef field, long q) : NfElem(field, Rational(q)) {}
  NfElem(FieldRef field, Coeffs coeffs);

  FieldRef field() const { return field_; }
  const Coeffs& coeffs() const { return c_; }
  const Rational& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  NfElem inverse() const;

  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o) { return *this *= o.inverse(); }
  NfElem& operator*=(const Rational& q);

  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(const NfElem& a, const NfElem& b);
  friend NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inverse(); }
  friend NfElem operator*(NfElem a, const Rational& q) { return a *= q; }
  friend NfElem operator*(const Rational& q, NfElem a) { return a *= q; }
  NfElem operator-() const;

  friend bool operator==(const NfElem& a, const NfElem& b);
  friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

  std::string str() const;
  std::size_t hash() const;

 private:
  void check_same(const NfElem& o) const;

  FieldRef field_ = nullptr;
  Coeffs c_;
};

class NumberField {
 public:
  // minpoly holds coefficients from low to high degree and must be monic.
  // Fields are interned: equal (generator, minpoly) pairs return the same handle.
  static FieldRef create(const std::string& generator, const UPoly& minpoly);
  static FieldRef rationals();

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::string& generator() const { return generator_; }
  const UPoly& minpoly() const { return minpoly_; }
  bool is_rationals() const { return degree() == 1; }

  NfElem zero() const { return NfElem(this, Rational(0)); }
  NfElem one() const { return NfElem(this, Rational(1)); }
  NfElem gen() const;
  NfElem element(const Rational& q) const { return NfElem(this, q); }

  std::string minpoly_str(const std::string& var = "t") const;

 private:
  NumberField(std::string generator, UPoly minpoly)
      : generator_(std::move(generator)), minpoly_(std::move(minpoly)) {}

  std::string generator_;
  UPoly minpoly_;
};

}  // namespace cubic27
