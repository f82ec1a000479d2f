#include "cubic27/multipoly.hpp"

namespace cubic27 {

namespace {
constexpr const char* kNames[kNumVars] = {"x", "y", "z", "t", "b", "c", "d", "e", "f"};
}

const char* var_name(int v) { return kNames[v]; }

int var_index(char ch) {
  for (int i = 0; i < kNumVars; ++i) {
    if (kNames[i][0] == ch) return i;
  }
  return -1;
}

QPoly primitive_integral(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading_coeff() < 0) scale = -scale;
  return p * scale;
}

}  // namespace cubic27
