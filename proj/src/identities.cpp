#include "srw/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "srw/catalog.hpp"
#include "srw/enumeration.hpp"

namespace srw {

  bool IdentityReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](IdentityCheck const& c) { return c.pass; });
  }

  IdentityReport verify_paper_identities(std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("n must be at least 1");
    }
    RewritingSystem const s  = build_mn(n).system();
    Alphabet const&       ab = s.alphabet();
    IdentityReport        report{n, {}};

    auto check = [&](std::string const& lhs, Element const& expected) {
      Element actual = normalize(s, ab.parse_word(lhs));
      report.checks.push_back(
          {lhs, format(ab, expected), format(ab, actual), actual == expected});
    };
    auto power = [](char x, std::size_t k) { return std::string(k, x); };

    for (std::size_t k = 0; k < n; ++k) {
      check("d" + power('a', k) + "b", Element());
    }
    check("ac", Element());
    check("dc", Element());
    for (std::size_t k = 1; k <= n; ++k) {
      check(power('a', k) + power('c', k), Element());
    }
    for (std::size_t j = 0; j <= 3; ++j) {
      check(power('a', n + j) + "b", Element::zero());
    }
    for (Word const& u : enumerate_normal_forms(s, 3)) {
      std::string const us = u.empty() ? "" : ab.format(u);
      for (std::size_t p = 0; p <= 3; ++p) {
        std::string const prefix = us + "d" + power('a', p);
        if (s.matcher().matches_anywhere(ab.parse_word(prefix))) {
          continue;
        }
        check(prefix + power('c', p + 1), Element(u));
      }
    }
    return report;
  }

}  // namespace srw
