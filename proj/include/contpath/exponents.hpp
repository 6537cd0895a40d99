#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace contpath {

// A vector of non-negative integer exponents (equivalently, a frequency
// vector).  Ordered lexicographically; total degree is cached.
class Exponents {
 public:
  Exponents() = default;

  explicit Exponents(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
      if (e < 0) throw std::invalid_argument("Exponents: negative entry");
      degree_ += e;
    }
  }

  Exponents(std::initializer_list<int> entries)
      : Exponents(std::vector<int>(entries)) {}

  static Exponents zeros(int dimension) {
    if (dimension < 0) throw std::invalid_argument("Exponents: negative dimension");
    return Exponents(std::vector<int>(static_cast<std::size_t>(dimension), 0));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int total_degree() const { return degree_; }
  const std::vector<int>& entries() const { return entries_; }

  // Copy with entry `axis` (0-based) changed by `delta`; validates the result.
  Exponents bumped(int axis, int delta) const {
    if (axis < 0 || axis >= size()) {
      throw std::invalid_argument("Exponents::bumped: axis out of range");
    }
    std::vector<int> next = entries_;
    next[static_cast<std::size_t>(axis)] += delta;
    return Exponents(std::move(next));
  }

  int min_entry() const {
    if (entries_.empty()) throw std::logic_error("Exponents::min_entry: empty");
    int m = entries_.front();
    for (int e : entries_) m = e < m ? e : m;
    return m;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(entries_[i]);
    }
    out += ")";
    return out;
  }

  bool operator==(const Exponents& other) const { return entries_ == other.entries_; }
  std::strong_ordering operator<=>(const Exponents& other) const {
    return entries_ <=> other.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

inline Exponents operator+(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Exponents: dimension mismatch in +");
  }
  std::vector<int> sum(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Exponents(std::move(sum));
}

}  // namespace contpath
