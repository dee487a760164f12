#include "tropcov/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropcov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<long long> contents(const Partition& p) {
  std::vector<long long> out;
  out.reserve(p.size());
  for (int i = 0; i < p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.push_back(j - (i + 1));
  return out;
}

Rational aut_order(const Partition& p) {
  Rational out(1);
  int run = 1;
  for (int i = 1; i <= p.length(); ++i) {
    if (i < p.length() && p.part(i) == p.part(i - 1)) {
      ++run;
    } else {
      out *= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return out;
}

Rational z_order(const Partition& p) {
  Rational out = aut_order(p);
  for (int part : p.parts()) out *= Rational(part);
  return out;
}

Rational parts_product(const Partition& p) {
  Rational out(1);
  for (int part : p.parts()) out *= Rational(part);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: bad token '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("partition: bad token '" + tok + "'");
    if (value <= 0)
      throw std::invalid_argument("partition: parts must be positive, got '" + tok + "'");
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace tropcov
