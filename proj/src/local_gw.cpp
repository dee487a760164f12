#include "tropcov/local_gw.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tropcov/series.hpp"

namespace tropcov {

namespace {

// S(z) and 1/S(z), cached by order.
const Series& s_cached(int order) {
  static std::map<int, Series> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, s_series(order)).first;
  return it->second;
}

const Series& s_inverse_cached(int order) {
  static std::map<int, Series> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, inverse(s_series(order), order)).first;
  return it->second;
}

}  // namespace

Rational one_point_gw(const Partition& x_plus, const Partition& x_minus, int g) {
  if (x_plus.size() != x_minus.size())
    throw std::invalid_argument("one_point_gw: |x+| != |x-| (" + x_plus.str() + " vs " + x_minus.str() + ")");
  if (g < 0) throw std::invalid_argument("one_point_gw: negative genus");
  if (x_plus.empty() && x_minus.empty()) return c_coeff(2L * g - 1);
  int order = 2 * g;
  Series prod = s_inverse_cached(order);
  const Series& s = s_cached(order);
  for (int part : x_plus.parts()) prod = mul(prod, s.scaled_argument(Rational(part)), order);
  for (int part : x_minus.parts()) prod = mul(prod, s.scaled_argument(Rational(part)), order);
  return prod.coeff(order) / (aut_order(x_plus) * aut_order(x_minus));
}

Rational hodge_factor(int g2) {
  if (g2 < 0) throw std::invalid_argument("hodge_factor: negative genus");
  return c_coeff(2L * g2 - 1);
}

Rational vertex_multiplicity(const LocalVertexData& v) {
  int valence = v.x_plus.length() + v.x_minus.length();
  int lp = valence + 2 * (v.g1 + v.g2) - 2;
  if (lp < 1)
    throw std::invalid_argument("vertex_multiplicity: valence + 2(g1+g2) - 2 must be >= 1");
  return factorial(static_cast<unsigned>(lp - 1)) * aut_order(v.x_plus) * aut_order(v.x_minus) *
         hodge_factor(v.g2) * one_point_gw(v.x_plus, v.x_minus, v.g1);
}

}  // namespace tropcov
