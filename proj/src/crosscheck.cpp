#include "tropcov/crosscheck.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "tropcov/factorizations.hpp"
#include "tropcov/symmetric.hpp"
#include "tropcov/wick.hpp"

namespace tropcov {

OracleRow evaluate_row(const HurwitzQuery& q) {
  OracleRow row;
  row.query = q;
  row.fock = hurwitz_fock(q);
  row.bruteforce = hurwitz_bruteforce(q);
  row.tropical = hurwitz_tropical(q);
  return row;
}

std::vector<OracleRow> triple_oracle_grid(int max_size, int max_m, int workers) {
  std::vector<HurwitzQuery> queries;
  for (int d = 1; d <= max_size; ++d) {
    for (const Partition& mu : partitions_of(d)) {
      for (const Partition& nu : partitions_of(d)) {
        for (int g = 0;; ++g) {
          int m = 2 * g - 2 + mu.length() + nu.length();
          if (m > max_m) break;
          if (m < 0) continue;
          for (Variant v : {Variant::monotone, Variant::strict}) {
            for (bool connected : {true, false}) {
              queries.push_back(HurwitzQuery{v, g, mu, nu, connected});
            }
          }
        }
      }
    }
  }

  std::vector<OracleRow> rows(queries.size());
  if (workers <= 1) {
    for (size_t i = 0; i < queries.size(); ++i) rows[i] = evaluate_row(queries[i]);
    return rows;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < queries.size(); i = next.fetch_add(1))
        rows[i] = evaluate_row(queries[i]);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

int worker_count_from_env() {
  const char* env = std::getenv("TROPCOV_WORKERS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace tropcov
