#pragma once

#include <vector>

#include "tropcov/fock.hpp"
#include "tropcov/partition.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

struct FactorizationCount {
  long long raw = 0;        // number of tuples
  Rational normalized;      // raw / d!
};

/// Cycle type of a permutation given as 0-based images.
Partition cycle_type(const std::vector<int>& perm);

/// Whether the group generated by the permutations acts transitively
/// on {0, .., d-1}.
bool is_transitive(const std::vector<std::vector<int>>& generators, int d);

/// Counts tuples (sigma, tau_1, .., tau_m): sigma of cycle type mu, each
/// tau_t a transposition (a_t b_t) with a_t < b_t, the larger entries
/// weakly increasing (monotone) or strictly increasing (strict), and
/// tau_m ... tau_1 sigma of cycle type nu; m = 2g - 2 + len(mu) + len(nu).
/// With connected set, only tuples whose entries generate a transitive
/// group are counted. m < 0 yields zero tuples.
FactorizationCount count_factorizations(int genus, const Partition& mu, const Partition& nu,
                                        Variant variant, bool connected);

/// The Hurwitz number this count calibrates to:
/// |Aut(mu)| |Aut(nu)| * raw / d!.
Rational hurwitz_bruteforce(const HurwitzQuery& q);

}  // namespace tropcov
