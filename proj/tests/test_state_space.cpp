#include <doctest.h>

#include <vector>

#include "cyldom/error.hpp"
#include "cyldom/state_space.hpp"

using namespace cyldom;

namespace {

StateWord word(std::vector<int> e) { return StateWord::from_entries(e); }

std::size_t brute_valid_count(int h) {
  std::size_t count = 0;
  int total = 1;
  for (int k = 0; k < h; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> e(static_cast<std::size_t>(h));
    int c = code;
    for (auto& x : e) {
      x = c % 3;
      c /= 3;
    }
    bool ok = true;
    for (int j = 0; j + 1 < h; ++j) {
      const int a = e[static_cast<std::size_t>(j)], b = e[static_cast<std::size_t>(j + 1)];
      ok = ok && !((a == 0 && b == 2) || (a == 2 && b == 0));
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("valid state counts") {
  CHECK(enumerate_valid_states(1).size() == 3);
  CHECK(enumerate_valid_states(2).size() == 7);
  const std::size_t expected[] = {3, 7, 17, 41, 99, 239, 577};
  for (int h = 1; h <= 7; ++h) CHECK(enumerate_valid_states(h).size() == expected[h - 1]);
  for (int h = 1; h <= 6; ++h) CHECK(enumerate_valid_states(h).size() == brute_valid_count(h));
}

TEST_CASE("height 10 has 8119 states split by top trit") {
  const StateTable t = enumerate_valid_states(10);
  REQUIRE(t.size() == 8119);
  std::size_t by_top[3] = {0, 0, 0};
  for (const auto& s : t.states()) ++by_top[s.entry(9)];
  CHECK(by_top[0] == 2378);
  CHECK(by_top[1] == 3363);
  CHECK(by_top[2] == 2378);
}

TEST_CASE("states ascend by base-3 code and index_of inverts them") {
  for (int h = 1; h <= 8; ++h) {
    const StateTable t = enumerate_valid_states(h);
    for (StateIndex k = 0; k < t.size(); ++k) {
      if (k > 0) CHECK(t[k - 1].code() < t[k].code());
      const auto idx = t.index_of(t[k]);
      REQUIRE(idx.has_value());
      CHECK(*idx == k);
      CHECK(t.reflected(t.reflected(k)) == k);
      CHECK(t[t.reflected(k)] == reflect(t[k]));
    }
  }
}

TEST_CASE("codes put row 0 in the least significant digit") {
  CHECK(word({2, 0, 0}).code() == 2);
  CHECK(word({0, 0, 2}).code() == 18);
  CHECK(enumerate_valid_states(3)[0] == word({0, 0, 0}));
}

TEST_CASE("invalid words are rejected by the table") {
  const StateTable t = enumerate_valid_states(3);
  const StateWord bad = word({0, 2, 1});
  CHECK_FALSE(bad.valid());
  CHECK_FALSE(t.index_of(bad).has_value());
}

TEST_CASE("zeros_count") {
  CHECK(zeros_count(word({1, 1, 0, 1, 2, 1, 1, 0, 1, 2, 1, 0})) == 3);
  CHECK(zeros_count(word(std::vector<int>(7, 1))) == 0);
  CHECK(zeros_count(word({0, 0, 0, 0})) == 4);
}

TEST_CASE("reflect") {
  CHECK(reflect(word({0, 1, 2})) == word({2, 1, 0}));
  CHECK(reflect(word({1, 2, 1})) == word({1, 2, 1}));
  const StateTable t = enumerate_valid_states(5);
  for (const auto& s : t.states()) {
    CHECK(reflect(reflect(s)) == s);
    CHECK(reflect(s).valid());
  }
}

TEST_CASE("entries and printing round trip") {
  const StateWord s = word({1, 2, 0});
  CHECK(s.entries() == std::vector<int>{1, 2, 0});
  CHECK(s.to_string() == "(1,2,0)");
  CHECK(StateWord::from_masks(3, s.zeros(), s.twos()) == s);
}

TEST_CASE("height limits") {
  CHECK_THROWS_AS(enumerate_valid_states(0), Error);
  CHECK_THROWS_AS(enumerate_valid_states(17), Error);
  CHECK_NOTHROW(enumerate_valid_states(12, 12));
  try {
    enumerate_valid_states(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
  CHECK_THROWS_AS(StateWord::from_entries(std::vector<int>{0, 3}), Error);
}
