#include "tropcov/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropcov {

namespace {

// Removing a border strip of length r corresponds to lowering one beta
// number b = lambda_i + N - i by r, provided b - r is nonnegative and not
// already occupied; the strip height is the number of beta values strictly
// between b - r and b.
long long mn_recurse(std::vector<int> beta, const std::vector<int>& mu, size_t mi) {
  if (mi == mu.size()) return 1;
  int r = mu[mi];
  long long acc = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) { occupied = true; break; }
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    long long sub = mn_recurse(std::move(next), mu, mi + 1);
    acc += (height % 2 == 0) ? sub : -sub;
  }
  return acc;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: |lambda| != |mu| (" + lambda.str() + " vs " + mu.str() + ")");

  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  static std::mutex memo_mu;
  const auto key = std::make_pair(lambda.parts(), mu.parts());
  {
    std::scoped_lock lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::vector<int> beta;
  int n = lambda.length();
  for (int i = 0; i < n; ++i) beta.push_back(lambda.part(i) + (n - 1 - i));
  long long value = mn_recurse(std::move(beta), mu.parts(), 0);

  std::scoped_lock lock(memo_mu);
  memo.emplace(key, value);
  return value;
}

}  // namespace tropcov
