#pragma once

#include <vector>

#include "tropcov/partition.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

/// p_k(X) = sum of k-th powers; p_0 = |X|.
Rational power_sum(unsigned k, const std::vector<long long>& x);

/// Complete homogeneous polynomial h_m(X), evaluated through Newton's
/// identities as a sum over partitions of m:
///   h_m = sum_{lambda |- m} (1/prod_j mult_j(lambda)!) prod_i p_{lambda_i}/lambda_i.
Rational complete_homogeneous(unsigned m, const std::vector<long long>& x);

/// Elementary symmetric polynomial sigma_m(X); same partition sum with the
/// extra sign (-1)^{m + length(lambda)}. Zero for m > |X|.
Rational elementary_symmetric(unsigned m, const std::vector<long long>& x);

/// All partitions of n, in lexicographically decreasing order of the part
/// list ((n), (n-1,1), ..., (1,...,1)). partitions_of(0) = { () }.
const std::vector<Partition>& partitions_of(int n);

/// Partitions of n with at most k parts, in the same order.
std::vector<Partition> partitions_max_parts(int n, int k);

/// Partitions of n with exactly k parts, in the same order.
std::vector<Partition> partitions_exact_parts(int n, int k);

/// Set partitions of {0, .., n-1} as restricted-growth strings: r[i] is the
/// block index of element i, blocks numbered by first appearance. Listed in
/// lexicographic order of the strings; there are Bell(n) of them.
std::vector<std::vector<int>> set_partitions(int n);

}  // namespace tropcov
