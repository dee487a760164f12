#include "tropcov/series.hpp"

#include <mutex>
#include <stdexcept>

namespace tropcov {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  c_.assign(order + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

const Rational& Series::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("Series: coefficient index out of range");
  return c_[k];
}

void Series::set_coeff(int k, const Rational& v) {
  if (k < 0 || k > order()) throw std::out_of_range("Series: coefficient index out of range");
  c_[k] = v;
}

Series Series::truncated(int order) const {
  Series out(order);
  for (int k = 0; k <= order && k <= this->order(); ++k) out.c_[k] = c_[k];
  return out;
}

Series Series::scaled_argument(const Rational& a) const {
  Series out(order());
  Rational p(1);
  for (int k = 0; k <= order(); ++k) {
    out.c_[k] = c_[k] * p;
    p *= a;
  }
  return out;
}

Series add(const Series& a, const Series& b, int order) {
  Series out(order);
  for (int k = 0; k <= order; ++k) {
    Rational v(0);
    if (k <= a.order()) v += a.coeff(k);
    if (k <= b.order()) v += b.coeff(k);
    out.set_coeff(k, v);
  }
  return out;
}

Series sub(const Series& a, const Series& b, int order) {
  Series out(order);
  for (int k = 0; k <= order; ++k) {
    Rational v(0);
    if (k <= a.order()) v += a.coeff(k);
    if (k <= b.order()) v -= b.coeff(k);
    out.set_coeff(k, v);
  }
  return out;
}

Series mul(const Series& a, const Series& b, int order) {
  Series out(order);
  for (int i = 0; i <= order && i <= a.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j + i <= order && j <= b.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

Series inverse(const Series& a, int order) {
  if (a.coeff(0).is_zero())
    throw std::domain_error("Series: inverse of a series with zero constant term");
  Series out(order);
  Rational c0inv = Rational(1) / a.coeff(0);
  out.set_coeff(0, c0inv);
  // b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}
  for (int k = 1; k <= order; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k && j <= a.order(); ++j) acc += a.coeff(j) * out.coeff(k - j);
    out.set_coeff(k, -(c0inv * acc));
  }
  return out;
}

Series div(const Series& a, const Series& b, int order) {
  return mul(a, inverse(b, order), order);
}

Rational bernoulli(unsigned k) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::scoped_lock lock(mu);
  // B_n = -(1/(n+1)) sum_{j<n} C(n+1, j) B_j
  while (cache.size() <= k) {
    unsigned n = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < n; ++j) acc += binomial(n + 1, j) * cache[j];
    cache.push_back(-acc / Rational(static_cast<long long>(n) + 1));
  }
  return cache[k];
}

Rational c_coeff(long l) {
  if (l % 2 == 0)
    throw std::invalid_argument("c_coeff: no coefficient at even index " + std::to_string(l));
  if (l < -1) throw std::invalid_argument("c_coeff: index below -1");
  if (l == -1) return Rational(1);
  // l = 2m-1 with m >= 1
  unsigned m = static_cast<unsigned>((l + 1) / 2);
  Rational two_pow = Rational(2).pow(2 * m - 1);
  Rational front = -(two_pow - Rational(1)) / two_pow;
  return front * bernoulli(2 * m) / factorial(2 * m);
}

Series varsigma_series(int order) {
  Series out(order);
  // 2 sinh(z/2) = sum_k 2 (z/2)^{2k+1} / (2k+1)!
  for (int e = 1; e <= order; e += 2) {
    Rational half_pow = Rational(1, 2).pow(e);
    out.set_coeff(e, Rational(2) * half_pow / factorial(static_cast<unsigned>(e)));
  }
  return out;
}

Series s_series(int order) {
  Series vs = varsigma_series(order + 1);
  Series out(order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, vs.coeff(k + 1));
  return out;
}

}  // namespace tropcov
