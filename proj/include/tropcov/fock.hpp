#pragma once

#include <functional>
#include <vector>

#include "tropcov/partition.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

enum class Variant { monotone, strict };

/// Double Hurwitz number query. The number of factorization steps is
/// m = 2g - 2 + len(mu) + len(nu); queries with m < 0 evaluate to 0.
struct HurwitzQuery {
  Variant variant = Variant::monotone;
  int genus = 0;
  Partition mu, nu;
  bool connected = true;

  int steps() const { return 2 * genus - 2 + mu.length() + nu.length(); }
  void validate() const;
};

/// Stationary descendant query: insertions with descendant indices k_i.
/// Values carry the |Aut(mu)||Aut(nu)| normalization of the correlator.
struct DescendantQuery {
  Partition mu, nu;
  std::vector<int> descendants;
  bool connected = true;

  void validate() const;
};

/// Eigenvalue of the l-th diagonal operator on the basis vector of lambda:
///   sum_i [ (lambda_i - i + 1/2)^l - (-i + 1/2)^l ] / l!,
/// plus c_l when shifted (c_l = 0 for even l). Returns 0 for l <= 0.
Rational f_eigenvalue(int l, const Partition& lambda, bool shifted);

/// Disconnected monotone/strict Hurwitz number with m factorization steps:
/// (1/(prod mu_i prod nu_j)) sum_{lambda |- d} chi_mu chi_nu P_m(contents),
/// P_m = complete homogeneous (monotone) or elementary symmetric (strict).
Rational hurwitz_disconnected_steps(Variant v, int m, const Partition& mu, const Partition& nu);

/// Disconnected descendant value
/// (1/(prod mu_i prod nu_j)) sum_lambda chi_mu chi_nu prod_i F^sh_{k_i+1}-eigenvalue.
Rational gw_fock_disconnected(const Partition& mu, const Partition& nu,
                              const std::vector<int>& ks);

Rational hurwitz_fock(const HurwitzQuery& q);
Rational gw_fock(const DescendantQuery& q);

/// Connected value from a disconnected evaluator by inclusion-exclusion
/// over set partitions of the labeled parts (Moebius inversion in the
/// partition lattice), with the step count m distributed over blocks.
/// The evaluator receives (m_block, mu_block, nu_block).
using HurwitzBlockEval = std::function<Rational(int, const Partition&, const Partition&)>;
Rational connect_hurwitz(const HurwitzBlockEval& disconnected, int m,
                         const Partition& mu, const Partition& nu);

/// Same over labeled parts plus labeled insertion slots.
using DescendantBlockEval =
    std::function<Rational(const Partition&, const Partition&, const std::vector<int>&)>;
Rational connect_descendants(const DescendantBlockEval& disconnected, const Partition& mu,
                             const Partition& nu, const std::vector<int>& ks);

}  // namespace tropcov
