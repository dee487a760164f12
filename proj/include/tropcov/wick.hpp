#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "tropcov/fock.hpp"
#include "tropcov/partition.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

/// One summand of an expanded diagonal operator at a vertex: a scalar
/// coefficient on a string of creation/annihilation operators whose
/// germ weights are x_minus (left-going) and x_plus (right-going).
struct VertexTerm {
  Rational coeff;
  Partition x_plus, x_minus;
  int g1 = 0;
  int g2 = 0;
  int u_power = 0;

  int valence() const { return x_plus.length() + x_minus.length(); }
  /// Germs as signed weights, negatives ascending then positives ascending.
  std::vector<int> germs() const;
};

/// Expansion of the l-th Hurwitz vertex operator (prefactor (l-1)!) into
/// vertex terms, keeping only germ strings whose one-sided weight sum is
/// at most degree_bound. Terms have l + 2 - 2 g1 - 2 g2 germs (>= 2, both
/// signs present) and coefficient
///   (l-1)! * hodge_factor(g2) * one_point_gw(x+, x-, g1).
std::vector<VertexTerm> expand_G(int l_part, int degree_bound);

/// Expansion of the descendant vertex operator for tau_k insertions.
/// Terms have k + 2 - 2g germs; the empty string (coefficient c_{2g-1})
/// is included. u_power = len(x-) + g - 1, the grading that makes the
/// connected correlator concentrate in a single degree.
std::vector<VertexTerm> expand_M(int k, int degree_bound);

/// Sparse polynomial in the formal variable u.
using UPoly = std::map<int, Rational>;
void upoly_add(UPoly& p, int power, const Rational& v);
Rational upoly_at(const UPoly& p, int power);
Rational upoly_at_one(const UPoly& p);

/// One fully matched diagram: a choice of term per vertex plus a perfect
/// matching of germs. Node ids: 0..len(mu)-1 are left ends, then the
/// internal vertices, then the right ends.
struct WickDiagram {
  std::vector<int> term_index;                 // per internal vertex
  std::vector<std::array<int, 3>> edges;       // (source node, consumer node, weight)
  long long multiplicity = 1;                  // equivalent germ-instance matchings
  Rational value;                              // multiplicity * prod coeff * prod edge weight
  int u_power = 0;
  int components = 1;
};

/// Enumerates all matchings of the given per-vertex term streams against
/// the mu / nu end germs, depth-first, left to right. Matchings whose
/// diagram is disconnected are skipped when connected_only is set.
void wick_enumerate(const Partition& mu, const Partition& nu,
                    const std::vector<std::vector<VertexTerm>>& streams, bool connected_only,
                    const std::function<void(const WickDiagram&)>& emit);

/// Vacuum expectation of mu-ends, the vertex operators, nu-ends: the sum
/// over matchings of coefficient products times matched-weight products,
/// graded by u. The caller divides by prod(mu) prod(nu) where needed.
UPoly wick_sum(const Partition& mu, const Partition& nu,
               const std::vector<std::vector<VertexTerm>>& streams, bool connected);

/// Monotone / strictly monotone double Hurwitz number through the tropical
/// vertex-operator expansion.
Rational hurwitz_tropical(const HurwitzQuery& q);

/// Descendant correlator (|Aut| normalization included) as a u-polynomial,
/// and its evaluation at u = 1.
UPoly gw_tropical_poly(const DescendantQuery& q);
Rational gw_tropical(const DescendantQuery& q);

struct ConcentrationViolation {
  std::vector<VertexTerm> terms;
  int u_power = 0;
  Rational value;
};

/// Degree-concentration verdict for the connected descendant correlator.
struct ConcentrationReport {
  int k0_twice = 0;  // 2*K0; K0 = (sum k_i + len(mu) - len(nu))/2
  UPoly poly;
  std::vector<ConcentrationViolation> violations;

  bool per_summand_ok() const { return violations.empty(); }
  bool concentrated() const;
  bool passed() const { return per_summand_ok() && concentrated(); }
};

ConcentrationReport concentration_check(const DescendantQuery& q);

/// A tropical cover: ordered internal vertices with genus decorations and
/// germ data, internal edges, end attachments. Derived bookkeeping comes
/// from grouping the matchings that realize the cover.
struct TropicalCover {
  std::vector<VertexTerm> vertices;
  std::vector<std::array<int, 3>> internal_edges;  // (left vertex, right vertex, weight)
  std::vector<std::pair<int, int>> left_ends;      // (vertex, weight)
  std::vector<std::pair<int, int>> right_ends;     // (vertex, weight)
  std::vector<int> through_strands;                // mu-end matched straight to a nu-end
  long long matchings = 0;
  Rational weight;   // full contribution to the query value
  Rational aut;      // reported automorphism count (see module notes)
  int h1 = 0;
  int genus = 0;     // h1 + sum of vertex genera
  int u_power = 0;
  int components = 1;

  int lambda_part(int vertex) const;  // valence + 2(g1+g2) - 2
};

struct CoverCatalog {
  std::vector<TropicalCover> covers;
  Rational total;
};

CoverCatalog covers_hurwitz(const HurwitzQuery& q);
CoverCatalog covers_gw(const DescendantQuery& q);

}  // namespace tropcov
