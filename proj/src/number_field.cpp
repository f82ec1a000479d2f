#include "cubic27/number_field.hpp"

#include <memory>
#include <mutex>

#include "cubic27/error.hpp"

namespace cubic27 {

namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  trim(r);
  int db = degree(b);
  q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && degree(r) >= db) {
    int k = degree(r) - db;
    Rational f = r.back() / lb;
    q[k] = f;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b[j];
    trim(r);
  }
  trim(q);
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b, q, r;
  trim(x);
  trim(y);
  while (!y.empty()) {
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    Rational lc = x.back();
    for (auto& c : x) c /= lc;
  }
  return x;
}

UPoly derivative(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
  trim(r);
  return r;
}

namespace {

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (!n.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidArgument, "minimal polynomial coefficients too large for root test");
  }
  unsigned long v = n.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return out;
}

}  // namespace

bool has_rational_root(const UPoly& p) {
  if (degree(p) < 1) return false;
  if (p[0] == 0) return true;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class a0 = mpz_class(p.front() * l), ad = mpz_class(p.back() * l);
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(ad)) {
      Rational x(num, den);
      x.canonicalize();
      if (eval(p, x) == 0 || eval(p, -x) == 0) return true;
    }
  }
  return false;
}

}  // namespace upoly

FieldRef NumberField::create(const std::string& generator, const UPoly& minpoly_in) {
  UPoly m = minpoly_in;
  upoly::trim(m);
  if (m.size() < 2) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (m.back() != 1) throw Error(ErrorCode::NotMonic, "minimal polynomial must be monic");
  if (upoly::degree(upoly::gcd(m, upoly::derivative(m))) > 0) {
    throw Error(ErrorCode::NotSquarefree, "minimal polynomial is not squarefree");
  }
  if (m.size() > 2 && upoly::has_rational_root(m)) {
    throw Error(ErrorCode::RationalRootFound, "minimal polynomial has a rational root");
  }
  static std::mutex mu;
  static std::vector<std::unique_ptr<NumberField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& f : registry) {
    if (f->generator_ == generator && f->minpoly_ == m) return f.get();
  }
  registry.emplace_back(new NumberField(generator, m));
  return registry.back().get();
}

FieldRef NumberField::rationals() {
  static FieldRef q = create("w", UPoly{Rational(0), Rational(1)});
  return q;
}

NfElem NumberField::gen() const {
  if (degree() == 1) return NfElem(this, -minpoly_[0]);
  NfElem::Coeffs c(degree());
  c[1] = 1;
  return NfElem(this, std::move(c));
}

std::string NumberField::minpoly_str(const std::string& var) const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = minpoly_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) s += a.get_str() + (i > 0 ? "*" : "");
    if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

NfElem::NfElem(FieldRef field, const Rational& q) : field_(field), c_(field->degree()) {
  c_[0] = q;
}

NfElem::NfElem(FieldRef field, Coeffs coeffs) : field_(field), c_(std::move(coeffs)) {
  const int d = field_->degree();
  const UPoly& m = field_->minpoly();
  for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
    if (c_[k] == 0) continue;
    Rational f = c_[k];
    for (int j = 0; j < d; ++j) {
      if (m[j] != 0) c_[k - d + j] -= f * m[j];
    }
  }
  c_.resize(d);
}

bool NfElem::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool NfElem::is_one() const { return c_[0] == 1 && is_rational(); }

bool NfElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void NfElem::check_same(const NfElem& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "operands live in different number fields");
}

NfElem& NfElem::operator+=(const NfElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NfElem& NfElem::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) { return *this = *this * o; }

NfElem operator*(const NfElem& a, const NfElem& b) {
  a.check_same(b);
  const int d = static_cast<int>(a.c_.size());
  if (d == 1) {
    NfElem r = a;
    r.c_[0] *= b.c_[0];
    return r;
  }
  NfElem::Coeffs prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return NfElem(a.field_, std::move(prod));
}

NfElem NfElem::operator-() const {
  NfElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const NfElem& a, const NfElem& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

NfElem NfElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_->generator() + "-field");
  if (c_.size() == 1) return NfElem(field_, Rational(1) / c_[0]);
  // Extended Euclid: track s with s*a = r (mod m).
  UPoly r0 = field_->minpoly(), r1(c_.begin(), c_.end());
  upoly::trim(r1);
  UPoly s0, s1{Rational(1)}, q, r;
  while (upoly::degree(r1) > 0) {
    upoly::divmod(r0, r1, q, r);
    UPoly s = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "element is a zero divisor; minimal polynomial is reducible");
  Coeffs out(s1.begin(), s1.end());
  for (auto& c : out) c /= r1[0];
  return NfElem(field_, std::move(out));
}

std::string NfElem::str() const {
  if (!field_) return "<null>";
  const std::string& w = field_->generator();
  std::string s;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += w;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::size_t NfElem::hash() const {
  std::size_t h = reinterpret_cast<std::size_t>(field_);
  for (const auto& c : c_) h = hash_combine(h, hash_value(c));
  return h;
}

}  // namespace cubic27
