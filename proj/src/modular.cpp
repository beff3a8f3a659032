#include "orbicalc/exactmath/modular.hpp"

#include "orbicalc/errors.hpp"

namespace orbicalc::exactmath {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& b, const Integer& m) {
  if (m < 1) throw ValidationError("modulus must be positive, got " + m.get_str());
  Integer g;
  mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw NotInvertible(b.get_str() + " is not invertible modulo " + m.get_str() + " (gcd " + g.get_str() + ")");
  }
  if (m == 1) return 0;
  Integer x;
  mpz_invert(x.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  return mod_floor(x, m);
}

}  // namespace orbicalc::exactmath
