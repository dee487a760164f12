#pragma once

#include "tropcov/partition.hpp"

namespace tropcov {

/// Irreducible character of the symmetric group, chi^lambda evaluated on
/// cycle type mu. Murnaghan-Nakayama over beta-sets, memoized on
/// (lambda, mu); the memo table is internally synchronized. Throws on
/// |lambda| != |mu|.
long long character(const Partition& lambda, const Partition& mu);

}  // namespace tropcov
