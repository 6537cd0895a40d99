#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contpath/exponents.hpp"
#include "contpath/multiseries.hpp"
#include "contpath/numeric.hpp"

namespace contpath::smirnov {

inline constexpr int kDefaultEnumerationLimit = 12;

// Word over the alphabet {1, ..., alphabet_size} in which no two adjacent
// letters are equal.  The empty word is allowed.
class SmirnovWord {
 public:
  SmirnovWord(int alphabet_size, std::vector<int> letters);
  // Parses a digit string such as "1213" (alphabet sizes up to 9).
  static SmirnovWord parse(int alphabet_size, std::string_view digits);

  int alphabet_size() const { return alphabet_size_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;

  bool operator==(const SmirnovWord& other) const = default;

 private:
  int alphabet_size_;
  std::vector<int> letters_;
};

using FrequencyVector = Exponents;

FrequencyVector frequency_vector(const SmirnovWord& word);

// All words of the given length in lexicographic order.  `length` beyond
// `limit` raises ResourceLimitError (the census grows exponentially).
std::vector<SmirnovWord> enumerate_smirnov(int alphabet_size, int length,
                                           int limit = kDefaultEnumerationLimit);

// Number of words with letter frequencies nu (alphabet size = nu.size()).
BigInt count_smirnov(const FrequencyVector& nu);

// Precomputed counts for every nu with total <= cap; cheap repeated queries.
class SmirnovCountTable {
 public:
  SmirnovCountTable(int alphabet_size, int cap);

  int alphabet_size() const { return gf_.dimension(); }
  int cap() const { return gf_.cap(); }
  const series::MultiSeries& generating_function() const { return gf_; }

  // Requires nu.size() == alphabet_size and nu.total_degree() <= cap.
  BigInt count(const FrequencyVector& nu) const;

 private:
  series::MultiSeries gf_;
};

}  // namespace contpath::smirnov
