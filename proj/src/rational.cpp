#include "cubic27/rational.hpp"

#include "cubic27/error.hpp"

namespace cubic27 {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string str(s);
  Rational q;
  if (str.empty() || q.set_str(str, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + str + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + str + "'");
  q.canonicalize();
  return q;
}

std::size_t hash_value(const Rational& q) {
  auto limb_hash = [](mpz_srcptr z) -> std::size_t {
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < n; ++i) h = hash_combine(h, static_cast<std::size_t>(z->_mp_d[i]));
    return h;
  };
  return hash_combine(limb_hash(q.get_num_mpz_t()), limb_hash(q.get_den_mpz_t()));
}

}  // namespace cubic27
