#include "contpath/smirnov.hpp"

#include <stdexcept>

namespace contpath::smirnov {

SmirnovWord::SmirnovWord(int alphabet_size, std::vector<int> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
  if (alphabet_size_ < 1) {
    throw std::invalid_argument("SmirnovWord: alphabet size must be >= 1");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > alphabet_size_) {
      throw std::invalid_argument("SmirnovWord: letter out of range");
    }
    if (i > 0 && letters_[i] == letters_[i - 1]) {
      throw std::invalid_argument("SmirnovWord: equal adjacent letters");
    }
  }
}

SmirnovWord SmirnovWord::parse(int alphabet_size, std::string_view digits) {
  std::vector<int> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument("SmirnovWord::parse: expected digits 1-9");
    }
    letters.push_back(c - '0');
  }
  return SmirnovWord(alphabet_size, std::move(letters));
}

std::string SmirnovWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (int l : letters_) out += static_cast<char>('0' + (l <= 9 ? l : 0));
  return out;
}

FrequencyVector frequency_vector(const SmirnovWord& word) {
  std::vector<int> freq(static_cast<std::size_t>(word.alphabet_size()), 0);
  for (int l : word.letters()) ++freq[static_cast<std::size_t>(l - 1)];
  return FrequencyVector(std::move(freq));
}

namespace {

void extend_words(int alphabet_size, int length, std::vector<int>& prefix,
                  std::vector<SmirnovWord>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.emplace_back(alphabet_size, prefix);
    return;
  }
  for (int letter = 1; letter <= alphabet_size; ++letter) {
    if (!prefix.empty() && prefix.back() == letter) continue;
    prefix.push_back(letter);
    extend_words(alphabet_size, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SmirnovWord> enumerate_smirnov(int alphabet_size, int length, int limit) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("enumerate_smirnov: alphabet size must be >= 1");
  }
  if (length < 0) throw std::invalid_argument("enumerate_smirnov: negative length");
  if (length > limit) {
    throw ResourceLimitError("enumerate_smirnov: length " + std::to_string(length) +
                             " exceeds the enumeration limit " + std::to_string(limit));
  }
  std::vector<SmirnovWord> out;
  std::vector<int> prefix;
  extend_words(alphabet_size, length, prefix, out);
  return out;
}

BigInt count_smirnov(const FrequencyVector& nu) {
  SmirnovCountTable table(nu.size(), nu.total_degree());
  return table.count(nu);
}

SmirnovCountTable::SmirnovCountTable(int alphabet_size, int cap)
    : gf_(series::expand_smirnov_gf(alphabet_size, cap)) {}

BigInt SmirnovCountTable::count(const FrequencyVector& nu) const {
  if (nu.size() != gf_.dimension()) {
    throw std::invalid_argument("SmirnovCountTable::count: dimension mismatch");
  }
  if (nu.total_degree() > gf_.cap()) {
    throw std::invalid_argument("SmirnovCountTable::count: total frequency exceeds cap");
  }
  const Rational& c = gf_.coefficient(nu);
  if (denominator(c) != 1) {
    throw std::logic_error("SmirnovCountTable::count: non-integer coefficient");
  }
  return numerator(c);
}

}  // namespace contpath::smirnov
