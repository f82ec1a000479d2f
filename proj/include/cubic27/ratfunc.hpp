#pragma once

#include <string>

#include "cubic27/multipoly.hpp"

namespace cubic27 {

// Element of the fraction field of C[b..f]; num/den coprime, den monic.
template <class C>
class RatFunc {
 public:
  using Poly = MultiPoly<C>;
  using Ctx = typename Poly::Ctx;

  RatFunc() = default;
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ctx(), 1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  static RatFunc constant(Ctx ctx, const Rational& q) { return RatFunc(Poly::constant(ctx, q)); }

  Ctx ctx() const { return num_.ctx(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(Poly(a.ctx()));
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel before multiplying.
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = exact_div_or_throw(a.num_, g1) * exact_div_or_throw(b.num_, g2);
    r.den_ = exact_div_or_throw(a.den_, g2) * exact_div_or_throw(b.den_, g1);
    r.normalize_den();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_den();
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool sub) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    RatFunc r;
    if (a.den_ == b.den_) {
      r.num_ = sub ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.reduce();
      return r;
    }
    Poly g = gcd(a.den_, b.den_);
    Poly ad = exact_div_or_throw(a.den_, g), bd = exact_div_or_throw(b.den_, g);
    r.num_ = sub ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
    r.den_ = a.den_ * bd;
    r.reduce();
    return r;
  }

  void reduce() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(den_.ctx(), 1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_div_or_throw(num_, g);
        den_ = exact_div_or_throw(den_, g);
      }
    }
    normalize_den();
  }

  void normalize_den() {
    auto inv = CoeffTraits<C>::inverse(den_.leading_coeff());
    if (!CoeffTraits<C>::is_one(inv)) {
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_, den_;
};

using QRatFunc = RatFunc<Rational>;

template <class C>
bool is_zero(const RatFunc<C>& x) {
  return x.is_zero();
}
inline bool is_zero(const NfElem& x) { return x.is_zero(); }

}  // namespace cubic27
