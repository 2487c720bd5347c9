#include <catch2/catch_amalgamated.hpp>

#include "srw/word.hpp"

using namespace srw;

TEST_CASE("alphabet parses and formats words", "[word]") {
  Alphabet a("abcd");
  CHECK(a.size() == 4);
  CHECK(a.parse_word("dab") == Word{3, 0, 1});
  CHECK(a.parse_word("1").empty());
  CHECK(a.format(Word{}) == "1");
  CHECK(a.format(Word{3, 0, 1}) == "dab");
  CHECK_THROWS_AS(a.parse_word("ax"), std::invalid_argument);
}

TEST_CASE("alphabet rejects reserved and duplicate letters", "[word]") {
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a1"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a0"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a="), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("ab", "a"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("ab", "aa"), std::invalid_argument);
}

TEST_CASE("elements distinguish zero from the identity", "[word]") {
  Alphabet a("ab");
  CHECK(Element().is_identity());
  CHECK(Element::zero().is_zero());
  CHECK_FALSE(Element::zero().is_identity());
  CHECK(Element() != Element::zero());
  CHECK_THROWS_AS(Element::zero().word(), std::logic_error);
  CHECK(format(a, Element::zero()) == "0");
  CHECK(format(a, Element()) == "1");
  CHECK(parse_element(a, "0").is_zero());
  CHECK(parse_element(a, "1").is_identity());
  CHECK(parse_element(a, "ba").word() == Word{1, 0});
}

TEST_CASE("shortlex compares length first, then precedence", "[word]") {
  Alphabet      a("abcd", "bacd");
  ShortlexOrder ord(a);
  auto          w = [&](char const* s) { return a.parse_word(s); };
  CHECK(ord.less(w("d"), w("ab")));
  CHECK(ord.less(w("ba"), w("ab")));
  CHECK(ord.less(w("1"), w("b")));
  CHECK(ord.compare(w("cd"), w("cd")) == std::strong_ordering::equal);
  CHECK(ord.less(Element::zero(), Element()));
  CHECK_FALSE(ord.less(Element(), Element::zero()));
}

TEST_CASE("shortlex is a strict total order on short words", "[word][property]") {
  Alphabet          a("abc", "cab");
  ShortlexOrder     ord(a);
  std::vector<Word> ws{{}};
  for (std::size_t i = 0; i < ws.size() && ws.size() < 40; ++i) {
    for (Letter x = 0; x < 3; ++x) {
      Word w = ws[i];
      w.push_back(x);
      ws.push_back(w);
    }
  }
  for (auto const& u : ws) {
    CHECK_FALSE(ord.less(u, u));
    for (auto const& v : ws) {
      if (u != v) {
        CHECK(ord.less(u, v) != ord.less(v, u));
      }
      for (auto const& x : ws) {
        if (ord.less(u, v) && ord.less(v, x)) {
          CHECK(ord.less(u, x));
        }
      }
      // compatible with concatenation on both sides
      if (ord.less(u, v)) {
        CHECK(ord.less(concat(Word{2}, u), concat(Word{2}, v)));
        CHECK(ord.less(concat(u, Word{1}), concat(v, Word{1})));
      }
    }
  }
}

TEST_CASE("reordered keeps letters and takes the order's precedence", "[word]") {
  Alphabet a("abcd");
  Alphabet b("abcd", "dcba");
  Alphabet r = reordered(a, ShortlexOrder(b));
  CHECK(r.letters() == "abcd");
  CHECK(r.precedence_string() == "dcba");
}

TEST_CASE("factor search and concatenation", "[word]") {
  CHECK(contains_factor(Word{0, 1, 2}, Word{1, 2}));
  CHECK_FALSE(contains_factor(Word{0, 1, 2}, Word{2, 1}));
  CHECK(contains_factor(Word{0}, Word{}));
  CHECK(concat(Word{0}, Word{1}, Word{2}) == Word{0, 1, 2});
}
