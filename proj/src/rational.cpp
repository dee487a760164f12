#include "tropcov/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tropcov {

mpz_class Rational::int_to_mpz(long long n) {
  mpz_class z;
  // mpz_class has no long long constructor on LP64-unfriendly platforms;
  // go through the decimal string to stay portable.
  z.set_str(std::to_string(n), 10);
  return z;
}

Rational::Rational(long long num, long long den)
    : v_(int_to_mpz(num), int_to_mpz(den)) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: 0 to a negative power");
    return (Rational(1) / *this).pow(-e);
  }
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(out);  // canonical since the base is canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

}  // namespace tropcov
