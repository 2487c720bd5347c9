// Monoid presentations with zero and their line-oriented text format:
//
//   generators: a b c d
//   relations:
//   aab = 0      # a comment
//   ac = 1
//
// `1` is the empty word and `0` the adjoined zero.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srw/word.hpp"

namespace srw {

  struct Relation {
    Word    lhs;
    Element rhs;

    bool operator==(Relation const&) const = default;
  };

  struct Presentation {
    Alphabet              alphabet;
    std::vector<Relation> relations;
  };

  // Throws ParseError with a 1-based line and column.
  Presentation parse_presentation(std::string_view text);

  // Generators are written in precedence order, so parsing the output with the
  // default precedence reproduces the same order.
  std::string format_presentation(Presentation const& p);

}  // namespace srw
