#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <tuple>

#include "gsb/ordering.hpp"

using namespace gsb;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> letter(0, static_cast<Symbol>(n - 1));
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) w.push_back(letter(rng));
  return w;
}

// Deg-lex as (length, string of complemented letters): a greater letter gets
// a larger character, so plain tuple comparison is the ordering.
std::pair<std::size_t, std::string> deglex_key(const Word& w) {
  std::string s;
  for (Symbol x : w) s.push_back(static_cast<char>('z' - x));
  return {w.size(), s};
}

// Tower key built directly from the definition: count of tower letters,
// then alternating segment keys and tower-letter signs.
std::vector<std::pair<std::size_t, std::string>> tower_key(const Word& w, Symbol t,
                                                           Symbol ti) {
  std::vector<std::pair<std::size_t, std::string>> key;
  std::size_t n = std::count_if(w.begin(), w.end(), [&](Symbol s) { return s == t || s == ti; });
  key.push_back({n, ""});
  Word seg;
  for (Symbol s : w) {
    if (s == t || s == ti) {
      key.push_back(deglex_key(seg));
      key.push_back({s == t ? 1u : 0u, ""});
      seg = Word();
    } else {
      seg.push_back(s);
    }
  }
  key.push_back(deglex_key(seg));
  return key;
}

}  // namespace

TEST_CASE("deg-lex examples") {
  auto s = OrderingSpec::deg_lex(2);  // a = 0 > b = 1
  CHECK(compare(s, Word{0, 1}, Word{1, 0}) > 0);
  CHECK(compare(s, Word{1, 1, 1}, Word{0, 0}) > 0);
  CHECK(compare(s, Word{0, 1}, Word{0, 1}) == 0);
  CHECK(compare(s, Word(), Word{1}) < 0);
}

TEST_CASE("tower example: t*a < a^-1*t") {
  // t > t^-1 > a > a^-1
  auto s = OrderingSpec::tower(4, 0, 1);
  CHECK(compare(s, Word{0, 2}, Word{3, 0}) < 0);
  CHECK(compare(s, Word{0}, Word{1}) > 0);
  CHECK(compare(s, Word{2, 2, 2}, Word{1}) < 0);  // fewer tower letters
}

TEST_CASE("deg-lex matches the key oracle") {
  auto s = OrderingSpec::deg_lex(3);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 5000; ++k) {
    Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    auto c = compare(s, u, v);
    auto o = deglex_key(u) <=> deglex_key(v);
    REQUIRE((c < 0) == (o < 0));
    REQUIRE((c == 0) == (u == v));
  }
}

TEST_CASE("tower matches the weight-tuple oracle") {
  auto s = OrderingSpec::tower(5, 1, 3);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 5000; ++k) {
    Word u = random_word(rng, 5, 6), v = random_word(rng, 5, 6);
    auto c = compare(s, u, v);
    auto o = tower_key(u, 1, 3) <=> tower_key(v, 1, 3);
    REQUIRE((c < 0) == (o < 0));
    REQUIRE((c == 0) == (u == v));
  }
}

TEST_CASE("weight tuples reassemble") {
  auto s = OrderingSpec::tower(4, 0, 1);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    Word u = random_word(rng, 4, 8);
    auto wt = weight_tuple(s, u);
    CHECK(wt.segments.size() == wt.n + 1);
    CHECK(wt.tower_letters.size() == wt.n);
    CHECK(wt.reassemble() == u);
  }
}

TEST_CASE("orderings are total and antisymmetric: sort then check") {
  for (auto s : {OrderingSpec::deg_lex(3), OrderingSpec::tower(3, 0, 2)}) {
    std::mt19937_64 rng(4);
    std::vector<Word> ws;
    for (int k = 0; k < 300; ++k) ws.push_back(random_word(rng, 3, 5));
    std::sort(ws.begin(), ws.end(), WordLess{&s});
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
      auto c = compare(s, ws[i], ws[i + 1]);
      REQUIRE(c <= 0);
      REQUIRE((c == 0) == (ws[i] == ws[i + 1]));
      REQUIRE(compare(s, ws[i + 1], ws[i]) >= 0);
    }
  }
}

TEST_CASE("deg-lex descending chains are bounded by the word count") {
  auto s = OrderingSpec::deg_lex(2);
  std::mt19937_64 rng(9);
  Word w{0, 0, 0, 0};  // greatest word of degree 4
  std::size_t steps = 0;
  const std::size_t bound = 1 + 2 + 4 + 8 + 16;
  while (!w.empty()) {
    Word next = random_word(rng, 2, 4);
    if (compare(s, next, w) < 0) {
      w = next;
      ++steps;
      REQUIRE(steps < bound);
    }
  }
  SUCCEED();
}

TEST_CASE("monomiality on 10^4 samples") {
  CHECK(check_monomial(OrderingSpec::deg_lex(3), 10000, 1).ok());
  CHECK(check_monomial(OrderingSpec::tower(4, 0, 1), 10000, 2).ok());
  auto m = check_monomial(OrderingSpec::module_top(3, 2), 10000, 3);
  CHECK(m.ok());
  CHECK(m.samples == 10000);
}

TEST_CASE("module ordering examples") {
  auto s = OrderingSpec::module_top(2, 2);  // y1 = 0 > y2 = 1
  CHECK(compare_module(s, {Word{0}, 0}, {Word{0, 0}, 0}) < 0);
  CHECK(compare_module(s, {Word{0}, 1}, {Word{0}, 0}) < 0);
  CHECK(compare_module(s, {Word{0, 1}, 1}, {Word{0, 1}, 1}) == 0);
  try {
    compare_module(s, {Word{0}, 2}, {Word{0}, 0});
    FAIL("expected BasisMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
  try {
    compare_module(OrderingSpec::deg_lex(2), {Word{0}, 0}, {Word{0}, 0});
    FAIL("expected BasisMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}

TEST_CASE("ordering errors") {
  try {
    OrderingSpec::tower(Alphabet::parse("a > b"), "t", "t^-1");
    FAIL("expected TowerSymbolMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TowerSymbolMissing);
  }
  try {
    compare(OrderingSpec::deg_lex(2), Word{0, 5}, Word{0});
    FAIL("expected AlphabetMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphabetMismatch);
  }
}
