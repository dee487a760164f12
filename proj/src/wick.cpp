#include "tropcov/wick.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tropcov/local_gw.hpp"
#include "tropcov/series.hpp"
#include "tropcov/symmetric.hpp"

namespace tropcov {

std::vector<int> VertexTerm::germs() const {
  std::vector<int> out;
  for (int i = 0; i < x_minus.length(); ++i) out.push_back(-x_minus.part(i));
  for (int i = x_plus.length() - 1; i >= 0; --i) out.push_back(x_plus.part(i));
  return out;
}

void upoly_add(UPoly& p, int power, const Rational& v) {
  if (v.is_zero()) return;
  Rational& slot = p[power];
  slot += v;
  if (slot.is_zero()) p.erase(power);
}

Rational upoly_at(const UPoly& p, int power) {
  auto it = p.find(power);
  return it == p.end() ? Rational(0) : it->second;
}

Rational upoly_at_one(const UPoly& p) {
  Rational acc(0);
  for (const auto& [k, v] : p) acc += v;
  return acc;
}

namespace {

std::vector<VertexTerm> build_g_terms(int l, int d) {
  std::vector<VertexTerm> out;
  Rational pre = factorial(static_cast<unsigned>(l - 1));
  for (int g2 = 0; 2 * g2 <= l; ++g2) {
    Rational hodge = hodge_factor(g2);
    for (int g1 = 0; l + 2 - 2 * g1 - 2 * g2 >= 2; ++g1) {
      int count = l + 2 - 2 * g1 - 2 * g2;
      for (int s = 1; s <= d; ++s) {
        for (int q = 1; q <= count - 1; ++q) {
          int p = count - q;
          for (const Partition& xp : partitions_exact_parts(s, q)) {
            for (const Partition& xm : partitions_exact_parts(s, p)) {
              VertexTerm t;
              t.coeff = pre * hodge * one_point_gw(xp, xm, g1);
              t.x_plus = xp;
              t.x_minus = xm;
              t.g1 = g1;
              t.g2 = g2;
              t.u_power = 0;
              out.push_back(std::move(t));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<VertexTerm> build_m_terms(int k, int d) {
  std::vector<VertexTerm> out;
  for (int g = 0; k + 2 - 2 * g >= 0; ++g) {
    int count = k + 2 - 2 * g;
    if (count == 0) {
      // Empty string: the degree-zero one-point correlator.
      VertexTerm t;
      t.coeff = one_point_gw(Partition(), Partition(), g);
      t.g1 = g;
      t.u_power = g - 1;
      out.push_back(std::move(t));
      continue;
    }
    if (count < 2) continue;  // a balanced nonempty string needs both signs
    for (int s = 1; s <= d; ++s) {
      for (int q = 1; q <= count - 1; ++q) {
        int p = count - q;
        for (const Partition& xp : partitions_exact_parts(s, q)) {
          for (const Partition& xm : partitions_exact_parts(s, p)) {
            VertexTerm t;
            t.coeff = one_point_gw(xp, xm, g);
            t.x_plus = xp;
            t.x_minus = xm;
            t.g1 = g;
            t.u_power = p + g - 1;
            out.push_back(std::move(t));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<VertexTerm> expand_G(int l_part, int degree_bound) {
  if (l_part < 1) throw std::invalid_argument("expand_G: l_part must be >= 1");
  if (degree_bound < 1) throw std::invalid_argument("expand_G: degree bound must be >= 1");
  static std::map<std::pair<int, int>, std::vector<VertexTerm>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(l_part, degree_bound);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_g_terms(l_part, degree_bound)).first;
  return it->second;
}

std::vector<VertexTerm> expand_M(int k, int degree_bound) {
  if (k < 0) throw std::invalid_argument("expand_M: k must be >= 0");
  if (degree_bound < 1) throw std::invalid_argument("expand_M: degree bound must be >= 1");
  static std::map<std::pair<int, int>, std::vector<VertexTerm>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(k, degree_bound);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_m_terms(k, degree_bound)).first;
  return it->second;
}

namespace {

struct Strand {
  int weight;
  int source;
};

// Depth-first matcher. Left ends are node ids 0..lmu-1, vertices follow,
// right ends come last. Open strands flow left to right: a vertex consumes
// its left-going germs from the open pool, one matched pair per consumed
// strand (factor = weight), then emits its right-going germs. Whatever is
// open after the last vertex must match nu exactly.
//
// Equal-weight germ instances at one site are interchangeable, so subsets
// are enumerated once and weighted by the number of instance orderings
// (need! per weight at a vertex, multiplicity! per weight at the nu ends).
struct Engine {
  const Partition& mu;
  const Partition& nu;
  const std::vector<std::vector<VertexTerm>>& streams;
  bool connected_only;
  const std::function<void(const WickDiagram&)>& emit;

  int lmu, n, lnu;
  WickDiagram diag;
  std::vector<int> dsu;
  Rational scalar;
  long long multiplicity = 1;
  int u_power = 0;

  Engine(const Partition& mu_, const Partition& nu_,
         const std::vector<std::vector<VertexTerm>>& streams_, bool connected_only_,
         const std::function<void(const WickDiagram&)>& emit_)
      : mu(mu_), nu(nu_), streams(streams_), connected_only(connected_only_), emit(emit_) {
    lmu = mu.length();
    n = static_cast<int>(streams.size());
    lnu = nu.length();
  }

  int find(int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  }

  void run() {
    diag.term_index.assign(n, -1);
    dsu.resize(lmu + n);
    std::iota(dsu.begin(), dsu.end(), 0);
    scalar = Rational(1);
    multiplicity = 1;
    u_power = 0;
    std::vector<Strand> open;
    for (int i = 0; i < lmu; ++i) open.push_back({mu.part(i), i});
    vertex(0, open);
  }

  void vertex(int i, const std::vector<Strand>& open) {
    if (i == n) {
      finish(open);
      return;
    }
    const int vnode = lmu + i;
    for (size_t t = 0; t < streams[i].size(); ++t) {
      const VertexTerm& term = streams[i][t];
      if (term.coeff.is_zero()) continue;
      if (connected_only && term.valence() == 0) continue;

      // Group the left-going germs by weight.
      std::vector<std::pair<int, int>> need;  // (weight, count)
      for (int p : term.x_minus.parts()) {
        if (!need.empty() && need.back().first == p)
          ++need.back().second;
        else
          need.emplace_back(p, 1);
      }
      // Feasibility: enough open strands of every weight.
      bool feasible = true;
      for (auto [w, c] : need) {
        int avail = 0;
        for (const Strand& s : open)
          if (s.weight == w) ++avail;
        if (avail < c) { feasible = false; break; }
      }
      if (!feasible) continue;

      std::vector<char> taken(open.size(), 0);
      choose_group(i, static_cast<int>(t), term, open, need, 0, taken, vnode);
    }
  }

  // Chooses, for each required weight, which open strands the vertex
  // consumes; every unordered choice stands for need! germ-instance
  // matchings.
  void choose_group(int i, int t, const VertexTerm& term, const std::vector<Strand>& open,
                    const std::vector<std::pair<int, int>>& need, size_t gi,
                    std::vector<char>& taken, int vnode) {
    if (gi == need.size()) {
      apply_term(i, t, term, open, taken, vnode);
      return;
    }
    auto [w, c] = need[gi];
    std::vector<int> avail;
    for (size_t idx = 0; idx < open.size(); ++idx)
      if (!taken[idx] && open[idx].weight == w) avail.push_back(static_cast<int>(idx));
    std::vector<int> pick;
    combos(i, t, term, open, need, gi, taken, vnode, avail, 0, c, pick);
  }

  void combos(int i, int t, const VertexTerm& term, const std::vector<Strand>& open,
              const std::vector<std::pair<int, int>>& need, size_t gi, std::vector<char>& taken,
              int vnode, const std::vector<int>& avail, size_t from, int remaining,
              std::vector<int>& pick) {
    if (remaining == 0) {
      for (int idx : pick) taken[idx] = 1;
      choose_group(i, t, term, open, need, gi + 1, taken, vnode);
      for (int idx : pick) taken[idx] = 0;
      return;
    }
    if (avail.size() - from < static_cast<size_t>(remaining)) return;
    for (size_t j = from; j + remaining <= avail.size(); ++j) {
      pick.push_back(avail[j]);
      combos(i, t, term, open, need, gi, taken, vnode, avail, j + 1, remaining - 1, pick);
      pick.pop_back();
    }
  }

  void apply_term(int i, int t, const VertexTerm& term, const std::vector<Strand>& open,
                  const std::vector<char>& taken, int vnode) {
    const std::vector<int> dsu_save = dsu;
    const Rational scalar_save = scalar;
    const long long multiplicity_save = multiplicity;
    const int u_save = u_power;
    const size_t edges_save = diag.edges.size();

    diag.term_index[i] = t;
    scalar *= term.coeff;
    u_power += term.u_power;
    // Orderings of equal-weight germ instances.
    {
      int run = 1;
      const auto& xm = term.x_minus.parts();
      for (size_t j = 1; j <= xm.size(); ++j) {
        if (j < xm.size() && xm[j] == xm[j - 1]) {
          ++run;
        } else {
          for (int f = 2; f <= run; ++f) multiplicity *= f;
          run = 1;
        }
      }
    }
    std::vector<Strand> next;
    for (size_t idx = 0; idx < open.size(); ++idx) {
      if (taken[idx]) {
        const Strand& s = open[idx];
        scalar *= Rational(s.weight);
        diag.edges.push_back({s.source, vnode, s.weight});
        dsu[find(s.source)] = find(vnode);
      } else {
        next.push_back(open[idx]);
      }
    }
    for (int p : term.x_plus.parts()) next.push_back({p, vnode});

    vertex(i + 1, next);

    diag.term_index[i] = -1;
    diag.edges.resize(edges_save);
    dsu = dsu_save;
    scalar = scalar_save;
    multiplicity = multiplicity_save;
    u_power = u_save;
  }

  void finish(const std::vector<Strand>& open) {
    if (static_cast<int>(open.size()) != lnu) return;
    std::vector<Strand> rest = open;
    std::sort(rest.begin(), rest.end(), [](const Strand& a, const Strand& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.source < b.source;
    });
    for (int j = 0; j < lnu; ++j)
      if (rest[j].weight != nu.part(j)) return;

    int components = 0;
    for (int x = 0; x < lmu + n; ++x)
      if (find(x) == x) ++components;
    if (connected_only && components != 1) return;

    const Rational scalar_save = scalar;
    const long long multiplicity_save = multiplicity;
    const size_t edges_save = diag.edges.size();

    for (int j = 0; j < lnu; ++j) {
      scalar *= Rational(rest[j].weight);
      diag.edges.push_back({rest[j].source, lmu + n + j, rest[j].weight});
    }
    {
      int run = 1;
      for (int j = 1; j <= lnu; ++j) {
        if (j < lnu && nu.part(j) == nu.part(j - 1)) {
          ++run;
        } else {
          for (int f = 2; f <= run; ++f) multiplicity *= f;
          run = 1;
        }
      }
    }

    diag.multiplicity = multiplicity;
    diag.value = Rational(multiplicity) * scalar;
    diag.u_power = u_power;
    diag.components = components;
    emit(diag);

    diag.edges.resize(edges_save);
    scalar = scalar_save;
    multiplicity = multiplicity_save;
  }
};

}  // namespace

void wick_enumerate(const Partition& mu, const Partition& nu,
                    const std::vector<std::vector<VertexTerm>>& streams, bool connected_only,
                    const std::function<void(const WickDiagram&)>& emit) {
  Engine e(mu, nu, streams, connected_only, emit);
  e.run();
}

UPoly wick_sum(const Partition& mu, const Partition& nu,
               const std::vector<std::vector<VertexTerm>>& streams, bool connected) {
  UPoly out;
  wick_enumerate(mu, nu, streams, connected,
                 [&](const WickDiagram& d) { upoly_add(out, d.u_power, d.value); });
  return out;
}

namespace {

std::vector<std::vector<VertexTerm>> hurwitz_streams(const Partition& lambda, int d,
                                                     Variant variant) {
  std::vector<std::vector<VertexTerm>> streams;
  streams.reserve(lambda.length());
  for (int part : lambda.parts()) {
    std::vector<VertexTerm> s = expand_G(part, d);
    if (variant == Variant::strict) {
      for (VertexTerm& t : s)
        if (t.valence() % 2 == 0) t.coeff = -t.coeff;  // (-1)^{1 + valence}
    }
    streams.push_back(std::move(s));
  }
  return streams;
}

}  // namespace

Rational hurwitz_tropical(const HurwitzQuery& q) {
  q.validate();
  int m = q.steps();
  if (m < 0) return Rational(0);
  int d = q.mu.size();
  Rational total(0);
  for (const Partition& lambda : partitions_of(m)) {
    auto streams = hurwitz_streams(lambda, d, q.variant);
    UPoly poly = wick_sum(q.mu, q.nu, streams, q.connected);
    total += upoly_at_one(poly) / aut_order(lambda);
  }
  return total / (parts_product(q.mu) * parts_product(q.nu));
}

UPoly gw_tropical_poly(const DescendantQuery& q) {
  q.validate();
  int d = q.mu.size();
  std::vector<std::vector<VertexTerm>> streams;
  streams.reserve(q.descendants.size());
  for (int k : q.descendants) streams.push_back(expand_M(k, d));
  UPoly raw = wick_sum(q.mu, q.nu, streams, q.connected);
  Rational norm = parts_product(q.mu) * parts_product(q.nu);
  UPoly out;
  for (const auto& [k, v] : raw) out.emplace(k, v / norm);
  return out;
}

Rational gw_tropical(const DescendantQuery& q) { return upoly_at_one(gw_tropical_poly(q)); }

bool ConcentrationReport::concentrated() const {
  for (const auto& [k, v] : poly) {
    if (v.is_zero()) continue;
    if (k0_twice % 2 != 0 || k != k0_twice / 2) return false;
  }
  return true;
}

ConcentrationReport concentration_check(const DescendantQuery& q) {
  q.validate();
  int d = q.mu.size();
  std::vector<std::vector<VertexTerm>> streams;
  for (int k : q.descendants) streams.push_back(expand_M(k, d));

  ConcentrationReport report;
  int ksum = 0;
  for (int k : q.descendants) ksum += k;
  report.k0_twice = ksum + q.mu.length() - q.nu.length();

  Rational norm = parts_product(q.mu) * parts_product(q.nu);
  wick_enumerate(q.mu, q.nu, streams, /*connected_only=*/true, [&](const WickDiagram& diag) {
    if (diag.value.is_zero()) return;
    upoly_add(report.poly, diag.u_power, diag.value / norm);
    if (2 * diag.u_power != report.k0_twice) {
      ConcentrationViolation v;
      for (int i = 0; i < static_cast<int>(streams.size()); ++i)
        v.terms.push_back(streams[i][diag.term_index[i]]);
      v.u_power = diag.u_power;
      v.value = diag.value / norm;
      report.violations.push_back(std::move(v));
    }
  });
  return report;
}

int TropicalCover::lambda_part(int vertex) const {
  const VertexTerm& t = vertices[vertex];
  return t.valence() + 2 * (t.g1 + t.g2) - 2;
}

namespace {

struct CatalogBuilder {
  int lmu, n, lnu;
  Rational mu_aut_nu_aut;  // |Aut(mu)| |Aut(nu)|
  std::map<std::string, TropicalCover> acc;

  void add(const std::vector<std::vector<VertexTerm>>& streams, const WickDiagram& diag,
           const Rational& scale) {
    TropicalCover cover;
    for (int i = 0; i < n; ++i) cover.vertices.push_back(streams[i][diag.term_index[i]]);
    for (const auto& e : diag.edges) {
      int src = e[0], dst = e[1], w = e[2];
      bool src_end = src < lmu;
      bool dst_end = dst >= lmu + n;
      if (src_end && dst_end)
        cover.through_strands.push_back(w);
      else if (src_end)
        cover.left_ends.emplace_back(dst - lmu, w);
      else if (dst_end)
        cover.right_ends.emplace_back(src - lmu, w);
      else
        cover.internal_edges.push_back({src - lmu, dst - lmu, w});
    }
    std::sort(cover.through_strands.begin(), cover.through_strands.end());
    std::sort(cover.left_ends.begin(), cover.left_ends.end());
    std::sort(cover.right_ends.begin(), cover.right_ends.end());
    std::sort(cover.internal_edges.begin(), cover.internal_edges.end());

    std::ostringstream key;
    for (const VertexTerm& t : cover.vertices) {
      key << "V" << t.g1 << ',' << t.g2 << ':';
      for (int g : t.germs()) key << g << ',';
    }
    key << "|E";
    for (const auto& e : cover.internal_edges) key << e[0] << ',' << e[1] << ',' << e[2] << ';';
    key << "|L";
    for (const auto& p : cover.left_ends) key << p.first << ',' << p.second << ';';
    key << "|R";
    for (const auto& p : cover.right_ends) key << p.first << ',' << p.second << ';';
    key << "|T";
    for (int w : cover.through_strands) key << w << ',';

    auto it = acc.find(key.str());
    if (it == acc.end()) {
      cover.weight = scale * diag.value;
      cover.matchings = diag.multiplicity;
      cover.u_power = diag.u_power;
      cover.components = diag.components;
      int vcount = lmu + n + lnu;
      cover.h1 = static_cast<int>(diag.edges.size()) - vcount + diag.components;
      int vertex_genus = 0;
      for (const VertexTerm& t : cover.vertices) vertex_genus += t.g1 + t.g2;
      cover.genus = cover.h1 + vertex_genus;
      acc.emplace(key.str(), std::move(cover));
    } else {
      it->second.weight += scale * diag.value;
      it->second.matchings += diag.multiplicity;
    }
  }

  CoverCatalog catalog() {
    CoverCatalog out;
    out.total = Rational(0);
    for (auto& [key, cover] : acc) {
      Rational site_auts = mu_aut_nu_aut;
      for (const VertexTerm& t : cover.vertices)
        site_auts *= aut_order(t.x_plus) * aut_order(t.x_minus);
      cover.aut = site_auts / Rational(cover.matchings);
      out.total += cover.weight;
      out.covers.push_back(std::move(cover));
    }
    return out;
  }
};

}  // namespace

CoverCatalog covers_hurwitz(const HurwitzQuery& q) {
  q.validate();
  int m = q.steps();
  CoverCatalog empty;
  empty.total = Rational(0);
  if (m < 0) return empty;
  int d = q.mu.size();
  Rational norm = parts_product(q.mu) * parts_product(q.nu);

  CatalogBuilder builder;
  builder.lmu = q.mu.length();
  builder.lnu = q.nu.length();
  builder.mu_aut_nu_aut = aut_order(q.mu) * aut_order(q.nu);

  for (const Partition& lambda : partitions_of(m)) {
    auto streams = hurwitz_streams(lambda, d, q.variant);
    builder.n = lambda.length();
    Rational scale = Rational(1) / (aut_order(lambda) * norm);
    wick_enumerate(q.mu, q.nu, streams, q.connected,
                   [&](const WickDiagram& diag) { builder.add(streams, diag, scale); });
  }
  return builder.catalog();
}

CoverCatalog covers_gw(const DescendantQuery& q) {
  q.validate();
  int d = q.mu.size();
  std::vector<std::vector<VertexTerm>> streams;
  for (int k : q.descendants) streams.push_back(expand_M(k, d));
  Rational scale = Rational(1) / (parts_product(q.mu) * parts_product(q.nu));

  CatalogBuilder builder;
  builder.lmu = q.mu.length();
  builder.lnu = q.nu.length();
  builder.n = static_cast<int>(streams.size());
  builder.mu_aut_nu_aut = aut_order(q.mu) * aut_order(q.nu);
  wick_enumerate(q.mu, q.nu, streams, q.connected,
                 [&](const WickDiagram& diag) { builder.add(streams, diag, scale); });
  return builder.catalog();
}

}  // namespace tropcov
