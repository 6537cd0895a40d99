#include "doctest.h"

#include <map>
#include <vector>

#include "contpath/smirnov.hpp"

using namespace contpath;
using smirnov::SmirnovWord;

TEST_SUITE("smirnov") {

TEST_CASE("word validation") {
  CHECK_NOTHROW(SmirnovWord(2, {1, 2, 1, 2}));
  CHECK_NOTHROW(SmirnovWord(3, {}));  // empty word is fine
  CHECK_THROWS_AS(SmirnovWord(2, {1, 1}), std::invalid_argument);     // adjacent repeat
  CHECK_THROWS_AS(SmirnovWord(2, {1, 3}), std::invalid_argument);     // letter out of range
  CHECK_THROWS_AS(SmirnovWord(2, {0, 1}), std::invalid_argument);     // letters start at 1
  CHECK_THROWS_AS(SmirnovWord(0, {}), std::invalid_argument);         // empty alphabet

  const SmirnovWord w = SmirnovWord::parse(3, "1213");
  CHECK(w.letters() == std::vector<int>{1, 2, 1, 3});
  CHECK(w.str() == "1213");
  CHECK(w.length() == 4);
  CHECK_THROWS_AS(SmirnovWord::parse(2, "1x2"), std::invalid_argument);
  CHECK_THROWS_AS(SmirnovWord::parse(2, "123"), std::invalid_argument);  // 3 > alphabet
  CHECK_THROWS_AS(SmirnovWord::parse(2, "11"), std::invalid_argument);
}

TEST_CASE("frequency vectors") {
  CHECK(frequency_vector(SmirnovWord::parse(2, "1212")) == Exponents({2, 2}));
  CHECK(frequency_vector(SmirnovWord::parse(3, "131")) == Exponents({2, 0, 1}));
  CHECK(frequency_vector(SmirnovWord(4, {})) == Exponents::zeros(4));
}

TEST_CASE("enumeration") {
  const auto words_23 = smirnov::enumerate_smirnov(2, 3);
  REQUIRE(words_23.size() == 2);
  CHECK(words_23[0].str() == "121");
  CHECK(words_23[1].str() == "212");

  CHECK(smirnov::enumerate_smirnov(1, 2).empty());  // "11" is the only candidate
  CHECK(smirnov::enumerate_smirnov(1, 1).size() == 1);

  const auto words_32 = smirnov::enumerate_smirnov(3, 2);
  REQUIRE(words_32.size() == 6);  // 3 * 2 words of length 2
  CHECK(words_32.front().str() == "12");
  CHECK(words_32.back().str() == "32");
  for (std::size_t i = 1; i < words_32.size(); ++i) {
    CHECK(words_32[i - 1].str() < words_32[i].str());  // lexicographic order
  }

  const auto empty_only = smirnov::enumerate_smirnov(3, 0);
  REQUIRE(empty_only.size() == 1);
  CHECK(empty_only[0].length() == 0);

  CHECK_THROWS_AS(smirnov::enumerate_smirnov(2, 13), ResourceLimitError);
  CHECK(smirnov::enumerate_smirnov(2, 13, 13).size() == 2);  // explicit limit override
  CHECK_THROWS_AS(smirnov::enumerate_smirnov(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(smirnov::enumerate_smirnov(2, -1), std::invalid_argument);
}

TEST_CASE("counting known frequency vectors") {
  CHECK(smirnov::count_smirnov(Exponents({1, 1})) == 2);    // 12, 21
  CHECK(smirnov::count_smirnov(Exponents({2, 1})) == 1);    // 121
  CHECK(smirnov::count_smirnov(Exponents({2, 2})) == 2);    // 1212, 2121
  CHECK(smirnov::count_smirnov(Exponents({3, 0})) == 0);    // needs 111
  CHECK(smirnov::count_smirnov(Exponents({3, 3})) == 2);
  CHECK(smirnov::count_smirnov(Exponents({1, 1, 1})) == 6); // all permutations
  CHECK(smirnov::count_smirnov(Exponents({0, 0})) == 1);    // the empty word
  CHECK(smirnov::count_smirnov(Exponents({4})) == 0);
  CHECK(smirnov::count_smirnov(Exponents({1})) == 1);
}

TEST_CASE("counts agree with an exhaustive census") {
  // Enumerate every admissible word over 3 letters up to length 5 and tally
  // frequency vectors; the generating-function counts must match exactly.
  std::map<std::vector<int>, long long> census;
  for (int n = 0; n <= 5; ++n) {
    for (const SmirnovWord& w : smirnov::enumerate_smirnov(3, n)) {
      census[frequency_vector(w).entries()] += 1;
    }
  }
  const smirnov::SmirnovCountTable table(3, 5);
  long long checked = 0;
  for (const auto& [nu, count] : census) {
    CHECK(table.count(Exponents(nu)) == count);
    ++checked;
  }
  CHECK(checked > 20);
  // A vector absent from the census must count zero.
  CHECK(table.count(Exponents({4, 1, 0})) == 0);
}

TEST_CASE("counts are symmetric under permuting letters") {
  CHECK(smirnov::count_smirnov(Exponents({3, 1, 2})) ==
        smirnov::count_smirnov(Exponents({1, 2, 3})));
  CHECK(smirnov::count_smirnov(Exponents({2, 5})) ==
        smirnov::count_smirnov(Exponents({5, 2})));
}

TEST_CASE("count table validates queries") {
  const smirnov::SmirnovCountTable table(2, 4);
  CHECK(table.alphabet_size() == 2);
  CHECK(table.cap() == 4);
  CHECK(table.count(Exponents({2, 2})) == 2);
  CHECK_THROWS_AS(table.count(Exponents({1, 1, 1})), std::invalid_argument);  // arity
  CHECK_THROWS_AS(table.count(Exponents({3, 2})), std::invalid_argument);     // beyond cap
  CHECK_THROWS_AS(smirnov::SmirnovCountTable(0, 4), std::invalid_argument);
}

}  // TEST_SUITE
