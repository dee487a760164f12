#pragma once

#include "tropcov/partition.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

/// Local data of one internal vertex: right-going and left-going germ
/// weights, plus the two genus decorations.
struct LocalVertexData {
  Partition x_plus, x_minus;
  int g1 = 0;
  int g2 = 0;
};

/// Connected one-point relative invariant of the projective line with
/// profiles (x_plus, x_minus) and genus g, by coefficient extraction:
///   (1/(|Aut x+||Aut x-|)) [z^{2g}] prod_i S(x_i z) / S(z)
/// over the parts of both profiles. For two empty profiles this is the
/// degree-zero correlator c_{2g-1}.
Rational one_point_gw(const Partition& x_plus, const Partition& x_minus, int g);

/// Degree-zero one-point correlator: 1 for g2 = 0, c_{2*g2-1} for g2 >= 1.
Rational hodge_factor(int g2);

/// Vertex multiplicity
///   (lp - 1)! |Aut x+| |Aut x-| hodge_factor(g2) one_point_gw(x+, x-, g1)
/// with lp = valence + 2(g1+g2) - 2; requires lp >= 1.
Rational vertex_multiplicity(const LocalVertexData& v);

}  // namespace tropcov
