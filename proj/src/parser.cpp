#include "cubic27/parser.hpp"

#include <cctype>
#include <string>

namespace cubic27 {

namespace {

using RF = RatFunc<NfElem>;

class Parser {
 public:
  Parser(std::string_view text, FieldRef field) : s_(text), field_(field) {}

  RF parse() {
    RF r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_atom(char ch) const {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || var_index(ch) >= 0 || is_gen(ch);
  }

  bool is_gen(char ch) const {
    const std::string& g = field_->generator();
    return field_->degree() > 1 && g.size() == 1 && g[0] == ch;
  }

  RF expr() {
    RF acc = term();
    for (;;) {
      char ch = peek();
      if (ch == '+') {
        ++pos_;
        acc += term();
      } else if (ch == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RF term() {
    RF acc = unary();
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc *= unary();
      } else if (ch == '/') {
        ++pos_;
        RF d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (starts_atom(ch)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RF unary() {
    char ch = peek();
    if (ch == '-') {
      ++pos_;
      return -unary();
    }
    if (ch == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RF power() {
    RF base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long n = std::stoul(std::string(s_.substr(start, pos_ - start)));
      RF r = RF::constant(field_, 1);
      for (unsigned long i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  RF atom() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      RF r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return RF::constant(field_, Rational(n));
    }
    if (is_gen(ch)) {
      ++pos_;
      return RF(NfPoly::constant(field_->gen()));
    }
    int v = var_index(ch);
    if (v >= 0) {
      ++pos_;
      return RF(NfPoly::variable(field_, v));
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  FieldRef field_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc<NfElem> parse_ratfunc(std::string_view text, FieldRef field) { return Parser(text, field).parse(); }

NfPoly parse_nfpoly(std::string_view text, FieldRef field) {
  RF r = parse_ratfunc(text, field);
  if (!r.is_polynomial()) throw Error(ErrorCode::ParseError, "expected a polynomial: '" + std::string(text) + "'");
  return r.num() * r.den().constant_value().inverse();
}

QPoly parse_qpoly(std::string_view text) { return to_qpoly(parse_nfpoly(text, NumberField::rationals())); }

NfElem parse_nfelem(std::string_view text, FieldRef field) {
  NfPoly p = parse_nfpoly(text, field);
  if (!p.is_constant()) throw Error(ErrorCode::ParseError, "expected a constant: '" + std::string(text) + "'");
  return p.is_zero() ? field->zero() : p.constant_value();
}

QPoly to_qpoly(const NfPoly& p) {
  return p.map_coeffs<Rational>({}, [](const NfElem& c) {
    if (!c.is_rational()) throw Error(ErrorCode::FieldMismatch, "coefficient " + c.str() + " is not rational");
    return c.coeff(0);
  });
}

NfPoly to_nfpoly(const QPoly& p, FieldRef field) {
  return p.map_coeffs<NfElem>(field, [field](const Rational& q) { return NfElem(field, q); });
}

}  // namespace cubic27
