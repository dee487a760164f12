#include "tropcov/factorizations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tropcov {

Partition cycle_type(const std::vector<int>& perm) {
  int d = static_cast<int>(perm.size());
  std::vector<bool> seen(d, false);
  std::vector<int> lengths;
  for (int s = 0; s < d; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = perm[x]) {
      if (perm[x] < 0 || perm[x] >= d) throw std::invalid_argument("cycle_type: not a permutation");
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

struct SearchState {
  int d;
  int m;
  bool strict;
  bool connected;
  const Partition* nu;
  std::vector<int> perm;                    // running product tau_t ... tau_1 sigma
  std::vector<std::pair<int, int>> taus;    // chosen transpositions
  const std::vector<int>* sigma;
  long long count = 0;

  void leaf() {
    if (cycle_type(perm) != *nu) return;
    if (connected) {
      UnionFind uf(d);
      for (int x = 0; x < d; ++x) uf.unite(x, (*sigma)[x]);
      for (auto [a, b] : taus) uf.unite(a, b);
      if (uf.components() != 1) return;
    }
    ++count;
  }

  // Transpositions are applied on the left: next = (a b) o current. In
  // image terms this swaps the values a and b wherever they occur.
  void dfs(int t, int min_b) {
    if (t == m) {
      leaf();
      return;
    }
    for (int b = min_b; b < d; ++b) {
      for (int a = 0; a < b; ++a) {
        for (int& v : perm) {
          if (v == a) v = b;
          else if (v == b) v = a;
        }
        taus.emplace_back(a, b);
        dfs(t + 1, strict ? b + 1 : b);
        taus.pop_back();
        for (int& v : perm) {
          if (v == a) v = b;
          else if (v == b) v = a;
        }
      }
    }
  }
};

void permutations_of_type(const Partition& mu, int d, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (cycle_type(p) == mu) f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

bool is_transitive(const std::vector<std::vector<int>>& generators, int d) {
  UnionFind uf(d);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("is_transitive: generator size mismatch");
    for (int x = 0; x < d; ++x) uf.unite(x, g[x]);
  }
  return uf.components() == 1;
}

FactorizationCount count_factorizations(int genus, const Partition& mu, const Partition& nu,
                                        Variant variant, bool connected) {
  if (mu.size() != nu.size() || mu.size() == 0)
    throw std::invalid_argument("count_factorizations: need |mu| = |nu| >= 1");
  int d = mu.size();
  int m = 2 * genus - 2 + mu.length() + nu.length();
  FactorizationCount out;
  if (m < 0) {
    out.normalized = Rational(0);
    return out;
  }
  long long total = 0;
  permutations_of_type(mu, d, [&](const std::vector<int>& sigma) {
    SearchState st{d, m, variant == Variant::strict, connected, &nu, sigma, {}, &sigma, 0};
    st.dfs(0, 1);
    total += st.count;
  });
  out.raw = total;
  out.normalized = Rational(total) / factorial(static_cast<unsigned>(d));
  return out;
}

Rational hurwitz_bruteforce(const HurwitzQuery& q) {
  q.validate();
  FactorizationCount c = count_factorizations(q.genus, q.mu, q.nu, q.variant, q.connected);
  return aut_order(q.mu) * aut_order(q.nu) * c.normalized;
}

}  // namespace tropcov
