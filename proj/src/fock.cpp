#include "tropcov/fock.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tropcov/characters.hpp"
#include "tropcov/series.hpp"
#include "tropcov/symmetric.hpp"

namespace tropcov {

void HurwitzQuery::validate() const {
  if (mu.size() != nu.size())
    throw std::invalid_argument("hurwitz query: |mu| != |nu| (" + mu.str() + " vs " + nu.str() + ")");
  if (mu.size() == 0) throw std::invalid_argument("hurwitz query: degree must be positive");
  if (genus < 0) throw std::invalid_argument("hurwitz query: negative genus");
}

void DescendantQuery::validate() const {
  if (mu.size() != nu.size())
    throw std::invalid_argument("descendant query: |mu| != |nu| (" + mu.str() + " vs " + nu.str() + ")");
  if (mu.size() == 0) throw std::invalid_argument("descendant query: degree must be positive");
  for (int k : descendants)
    if (k < 0) throw std::invalid_argument("descendant query: negative descendant index");
}

Rational f_eigenvalue(int l, const Partition& lambda, bool shifted) {
  if (l <= 0) return Rational(0);
  Rational acc(0);
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational occupied(2LL * (lambda.part(i - 1) - i) + 1, 2);
    Rational vacuum(-2LL * i + 1, 2);
    acc += occupied.pow(l) - vacuum.pow(l);
  }
  acc /= factorial(static_cast<unsigned>(l));
  if (shifted && l % 2 == 1) acc += c_coeff(l);
  return acc;
}

Rational hurwitz_disconnected_steps(Variant v, int m, const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("hurwitz: |mu| != |nu|");
  if (m < 0) return Rational(0);
  int d = mu.size();
  Rational acc(0);
  for (const Partition& lambda : partitions_of(d)) {
    long long cm = character(lambda, mu);
    if (cm == 0) continue;
    long long cn = character(lambda, nu);
    if (cn == 0) continue;
    const auto cr = contents(lambda);
    Rational eig = (v == Variant::monotone) ? complete_homogeneous(static_cast<unsigned>(m), cr)
                                            : elementary_symmetric(static_cast<unsigned>(m), cr);
    acc += Rational(cm) * Rational(cn) * eig;
  }
  return acc / (parts_product(mu) * parts_product(nu));
}

Rational gw_fock_disconnected(const Partition& mu, const Partition& nu,
                              const std::vector<int>& ks) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("descendants: |mu| != |nu|");
  int d = mu.size();
  Rational acc(0);
  for (const Partition& lambda : partitions_of(d)) {
    long long cm = character(lambda, mu);
    if (cm == 0) continue;
    long long cn = character(lambda, nu);
    if (cn == 0) continue;
    Rational term = Rational(cm) * Rational(cn);
    for (int k : ks) term *= f_eigenvalue(k + 1, lambda, /*shifted=*/true);
    acc += term;
  }
  return acc / (parts_product(mu) * parts_product(nu));
}

namespace {

// Multiset state for the inclusion-exclusion recursion: parts of mu, parts
// of nu, descendant indices; each stored sorted decreasing.
struct BlockKey {
  std::vector<int> mu, nu, ks;
  bool operator<(const BlockKey& o) const {
    if (mu != o.mu) return mu < o.mu;
    if (nu != o.nu) return nu < o.nu;
    return ks < o.ks;
  }
  bool empty() const { return mu.empty() && nu.empty() && ks.empty(); }
};

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

// Distinct values with multiplicities, preserving the sorted order.
std::vector<std::pair<int, int>> grouped(const std::vector<int>& sorted) {
  std::vector<std::pair<int, int>> out;
  for (int v : sorted) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

// Enumerates sub-multisets A of S that contain one distinguished (anchor)
// element of the first nonempty class, together with the number of labeled
// subsets realizing A. Calls f(A, count, complementOfA).
template <typename F>
void for_each_anchored_subset(const BlockKey& s, const F& f) {
  auto gm = grouped(s.mu), gn = grouped(s.nu), gk = grouped(s.ks);
  // Anchor class: first mu class if any, else first nu class, else first k class.
  int anchor_list = !gm.empty() ? 0 : (!gn.empty() ? 1 : 2);
  struct Class { int list; int value; int avail; int min_take; };
  std::vector<Class> classes;
  auto push = [&](int list, const std::vector<std::pair<int, int>>& g) {
    for (size_t i = 0; i < g.size(); ++i)
      classes.push_back({list, g[i].first, g[i].second,
                         (list == anchor_list && i == 0) ? 1 : 0});
  };
  push(0, gm);
  push(1, gn);
  push(2, gk);

  std::vector<int> take(classes.size(), 0);
  auto emit = [&]() {
    BlockKey a, rest;
    Rational count(1);
    for (size_t i = 0; i < classes.size(); ++i) {
      const Class& c = classes[i];
      auto& av = (c.list == 0) ? a.mu : (c.list == 1) ? a.nu : a.ks;
      auto& rv = (c.list == 0) ? rest.mu : (c.list == 1) ? rest.nu : rest.ks;
      av.insert(av.end(), take[i], c.value);
      rv.insert(rv.end(), c.avail - take[i], c.value);
      // The anchor occupies one slot of its class.
      if (c.min_take == 1)
        count *= binomial(static_cast<unsigned>(c.avail - 1), static_cast<unsigned>(take[i] - 1));
      else
        count *= binomial(static_cast<unsigned>(c.avail), static_cast<unsigned>(take[i]));
    }
    f(a, count, rest);
  };
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == classes.size()) {
      emit();
      return;
    }
    for (int t = classes[i].min_take; t <= classes[i].avail; ++t) {
      take[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

// ---- Hurwitz: values are u-truncated polynomials, coefficient m' =
// disconnected/connected value with m' steps. Blocks convolve in m.

using StepPoly = std::vector<Rational>;  // index = step count, length M+1

StepPoly convolve(const StepPoly& a, const StepPoly& b, int order) {
  StepPoly out(order + 1, Rational(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

struct HurwitzConnector {
  const HurwitzBlockEval& disc_eval;
  int order;
  std::map<BlockKey, StepPoly> disc_memo, conn_memo;

  const StepPoly& disc(const BlockKey& s) {
    auto it = disc_memo.find(s);
    if (it != disc_memo.end()) return it->second;
    StepPoly p(order + 1, Rational(0));
    long long mu_sum = 0, nu_sum = 0;
    for (int v : s.mu) mu_sum += v;
    for (int v : s.nu) nu_sum += v;
    if (mu_sum == nu_sum) {
      Partition mu = to_partition(s.mu), nu = to_partition(s.nu);
      for (int m = 0; m <= order; ++m) p[m] = disc_eval(m, mu, nu);
    }
    return disc_memo.emplace(s, std::move(p)).first->second;
  }

  const StepPoly& conn(const BlockKey& s) {
    auto it = conn_memo.find(s);
    if (it != conn_memo.end()) return it->second;
    StepPoly acc = disc(s);
    for_each_anchored_subset(s, [&](const BlockKey& a, const Rational& count, const BlockKey& rest) {
      if (rest.empty()) return;  // a == s
      StepPoly prod = convolve(conn(a), disc(rest), order);
      for (int m = 0; m <= order; ++m) acc[m] -= count * prod[m];
    });
    return conn_memo.emplace(s, std::move(acc)).first->second;
  }
};

// ---- Descendants: plain scalars, insertions are labeled slots.

struct DescendantConnector {
  const DescendantBlockEval& disc_eval;
  std::map<BlockKey, Rational> disc_memo, conn_memo;

  Rational disc(const BlockKey& s) {
    auto it = disc_memo.find(s);
    if (it != disc_memo.end()) return it->second;
    long long mu_sum = 0, nu_sum = 0;
    for (int v : s.mu) mu_sum += v;
    for (int v : s.nu) nu_sum += v;
    Rational value(0);
    if (mu_sum == nu_sum)
      value = disc_eval(to_partition(s.mu), to_partition(s.nu), s.ks);
    return disc_memo.emplace(s, value).first->second;
  }

  Rational conn(const BlockKey& s) {
    auto it = conn_memo.find(s);
    if (it != conn_memo.end()) return it->second;
    Rational acc = disc(s);
    for_each_anchored_subset(s, [&](const BlockKey& a, const Rational& count, const BlockKey& rest) {
      if (rest.empty()) return;
      acc -= count * conn(a) * disc(rest);
    });
    return conn_memo.emplace(s, acc).first->second;
  }
};

}  // namespace

Rational connect_hurwitz(const HurwitzBlockEval& disconnected, int m, const Partition& mu,
                         const Partition& nu) {
  if (m < 0) return Rational(0);
  HurwitzConnector c{disconnected, m, {}, {}};
  BlockKey full{mu.parts(), nu.parts(), {}};
  return c.conn(full)[m];
}

Rational connect_descendants(const DescendantBlockEval& disconnected, const Partition& mu,
                             const Partition& nu, const std::vector<int>& ks) {
  DescendantConnector c{disconnected, {}, {}};
  BlockKey full{mu.parts(), nu.parts(), sorted_desc(ks)};
  return c.conn(full);
}

Rational hurwitz_fock(const HurwitzQuery& q) {
  q.validate();
  int m = q.steps();
  if (m < 0) return Rational(0);
  if (!q.connected) return hurwitz_disconnected_steps(q.variant, m, q.mu, q.nu);
  return connect_hurwitz(
      [&](int mb, const Partition& mb_mu, const Partition& mb_nu) {
        return hurwitz_disconnected_steps(q.variant, mb, mb_mu, mb_nu);
      },
      m, q.mu, q.nu);
}

Rational gw_fock(const DescendantQuery& q) {
  q.validate();
  if (!q.connected) return gw_fock_disconnected(q.mu, q.nu, q.descendants);
  return connect_descendants(
      [](const Partition& mu, const Partition& nu, const std::vector<int>& ks) {
        return gw_fock_disconnected(mu, nu, ks);
      },
      q.mu, q.nu, q.descendants);
}

}  // namespace tropcov
