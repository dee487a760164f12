#pragma once

#include <optional>
#include <vector>

#include "tropcov/fock.hpp"
#include "tropcov/rational.hpp"

namespace tropcov {

/// One comparison row: a Hurwitz query evaluated by all three routes.
struct OracleRow {
  HurwitzQuery query;
  Rational fock, bruteforce, tropical;
  bool agree() const { return fock == bruteforce && bruteforce == tropical; }
};

OracleRow evaluate_row(const HurwitzQuery& q);

/// Every query with degree <= max_size and step count m <= max_m, both
/// variants, connected and disconnected, evaluated by all three methods.
/// Deterministic row order; workers > 1 fans the rows out over threads.
std::vector<OracleRow> triple_oracle_grid(int max_size, int max_m, int workers = 1);

/// Worker count from the TROPCOV_WORKERS environment variable (default 1).
int worker_count_from_env();

}  // namespace tropcov
