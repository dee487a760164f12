#pragma once

#include <vector>

#include "tropcov/rational.hpp"

namespace tropcov {

/// Truncated univariate power series over Rational. A Series of order n
/// stores the coefficients of z^0 .. z^n and knows nothing beyond z^n;
/// every operation takes an explicit target order so precision loss is
/// always deliberate.
class Series {
 public:
  explicit Series(int order);
  Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  void set_coeff(int k, const Rational& v);
  const std::vector<Rational>& coeffs() const { return c_; }

  Series truncated(int order) const;
  /// Substitutes z -> a*z.
  Series scaled_argument(const Rational& a) const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

Series add(const Series& a, const Series& b, int order);
Series sub(const Series& a, const Series& b, int order);
Series mul(const Series& a, const Series& b, int order);
/// Throws std::domain_error if b has zero constant term.
Series div(const Series& a, const Series& b, int order);
Series inverse(const Series& a, int order);

/// B_k under the convention t/(e^t - 1) = sum B_k t^k / k!, so B_1 = -1/2.
Rational bernoulli(unsigned k);

/// Laurent coefficients of 1/(2 sinh(z/2)): c_{-1} = 1 and, for m >= 1,
/// c_{2m-1} = -((2^{2m-1} - 1)/2^{2m-1}) * B_{2m}/(2m)!.
/// Only odd l >= -1 index a coefficient; even l throws (callers treat
/// them as zero).
Rational c_coeff(long l);

/// Expansion of 2*sinh(z/2); an odd series.
Series varsigma_series(int order);

/// Expansion of S(z) = 2*sinh(z/2)/z; an even series with constant term 1.
Series s_series(int order);

}  // namespace tropcov
