#include "tropcov/symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tropcov {

Rational power_sum(unsigned k, const std::vector<long long>& x) {
  Rational acc(0);
  for (long long v : x) acc += Rational(v).pow(static_cast<long>(k));
  return acc;
}

namespace {

Rational newton_sum(unsigned m, const std::vector<long long>& x, bool elementary) {
  if (m == 0) return Rational(1);
  // Power sums are shared across all partitions of m.
  std::vector<Rational> p(m + 1, Rational(0));
  for (unsigned k = 1; k <= m; ++k) p[k] = power_sum(k, x);
  Rational acc(0);
  for (const Partition& lambda : partitions_of(static_cast<int>(m))) {
    Rational term = Rational(1) / aut_order(lambda);
    for (int part : lambda.parts()) term *= p[part] / Rational(part);
    if (elementary && (m + lambda.length()) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

Rational complete_homogeneous(unsigned m, const std::vector<long long>& x) {
  return newton_sum(m, x, false);
}

Rational elementary_symmetric(unsigned m, const std::vector<long long>& x) {
  if (m > x.size()) return Rational(0);
  return newton_sum(m, x, true);
}

namespace {

void gen_partitions(int remaining, int max_part, int max_parts,
                    std::vector<int>& stack, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    gen_partitions(remaining - p, p, max_parts - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, n, stack, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_max_parts(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("partitions_max_parts: negative argument");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, k, stack, out);
  return out;
}

std::vector<Partition> partitions_exact_parts(int n, int k) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_max_parts(n, k))
    if (p.length() == k) out.push_back(p);
  return out;
}

std::vector<std::vector<int>> set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("set_partitions: negative n");
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> rgs(n, 0);
  // Lexicographic enumeration of restricted-growth strings.
  auto max_prefix = [&](int i) {
    int m = -1;
    for (int j = 0; j < i; ++j) m = std::max(m, rgs[j]);
    return m;
  };
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    while (i > 0 && rgs[i] == max_prefix(i) + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

}  // namespace tropcov
