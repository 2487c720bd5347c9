#include <catch2/catch_amalgamated.hpp>

#include "srw/error.hpp"
#include "srw/presentation.hpp"

using namespace srw;

TEST_CASE("presentation grammar", "[presentation]") {
  Presentation p = parse_presentation(
      "# M_2\n"
      "generators: a b c d\n"
      "relations:\n"
      "aab = 0   # zero relation\n"
      "ac = 1\r\n"
      "\n"
      "1 = db\n");
  CHECK(p.alphabet.letters() == "abcd");
  REQUIRE(p.relations.size() == 3);
  CHECK(p.relations[0].rhs.is_zero());
  CHECK(p.relations[1].rhs.is_identity());
  CHECK(p.relations[2].lhs.empty());
  CHECK(p.relations[2].rhs.word() == Word{3, 1});
}

TEST_CASE("zero on the left is moved to the right", "[presentation]") {
  Presentation p = parse_presentation("generators: a\nrelations:\n0 = aa\n");
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].lhs == Word{0, 0});
  CHECK(p.relations[0].rhs.is_zero());
}

namespace {
  std::pair<std::size_t, std::size_t> error_at(std::string const& text) {
    try {
      parse_presentation(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  }
}  // namespace

TEST_CASE("parse errors carry line and column", "[presentation]") {
  CHECK(error_at("generators: a b\nrelations:\nax = 1\n") == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(error_at("generators: a b\nrelations:\nab 1\n").first == 3);
  CHECK(error_at("generators: a b\nrelations:\n0 = 0\n").first == 3);
  CHECK(error_at("generators: a b\nrelations:\na = b = a\n").first == 3);
  CHECK(error_at("generators: ab\nrelations:\n").first == 1);
  CHECK(error_at("generators: a a\nrelations:\n").first == 1);
  CHECK(error_at("generators: a 1\nrelations:\n").first == 1);
  CHECK(error_at("generators:\nrelations:\n").first == 1);
  CHECK(error_at("relations:\n").first == 1);
  CHECK(error_at("generators: a\n").first != 0);
}

TEST_CASE("format then parse round-trips, precedence included", "[presentation]") {
  Presentation p{Alphabet("abcd", "bacd"), {}};
  p.relations.push_back({Word{0, 1}, Element(Word{1, 0})});
  p.relations.push_back({Word{2, 0, 3}, Element::zero()});
  p.relations.push_back({Word{2, 3}, Element()});
  Presentation q = parse_presentation(format_presentation(p));
  CHECK(q.alphabet.precedence_string() == "bacd");
  REQUIRE(q.relations.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(p.alphabet.format(p.relations[i].lhs) == q.alphabet.format(q.relations[i].lhs));
    CHECK(format(p.alphabet, p.relations[i].rhs) == format(q.alphabet, q.relations[i].rhs));
  }
}
