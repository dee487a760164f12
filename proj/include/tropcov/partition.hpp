#pragma once

#include <string>
#include <vector>

#include "tropcov/rational.hpp"

namespace tropcov {

/// Integer partition: weakly decreasing positive parts. Doubles as a
/// ramification profile and as a permutation cycle type. The empty
/// partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; sorts them decreasing. Throws on
  /// non-positive parts.
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }

  Partition conjugate() const;
  /// Multiplicity of value v among the parts.
  int multiplicity(int v) const;

  /// Renders as "(3,1)"; the empty partition as "()".
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Young-diagram contents j - i, listed box by box in row order.
/// The multiset is what matters to every consumer.
std::vector<long long> contents(const Partition& p);

/// |Aut| = product of m_i! over part multiplicities.
Rational aut_order(const Partition& p);

/// z_mu = prod i^{m_i} m_i!; the centralizer order of the cycle type.
Rational z_order(const Partition& p);

/// Product of the parts.
Rational parts_product(const Partition& p);

/// Parses a comma-separated list of positive integers ("3,1" or "1,3");
/// normalizes to weakly decreasing order. Throws std::invalid_argument
/// on empty/zero/negative/non-integer tokens. "()" or "" is rejected;
/// use Partition() for the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace tropcov
