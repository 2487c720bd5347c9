#include <catch2/catch_amalgamated.hpp>

#include "../support/oracles.hpp"
#include "srw/catalog.hpp"
#include "srw/enumeration.hpp"

using namespace srw;

namespace {
  std::vector<Word> lhs_of(RewritingSystem const& s) {
    std::vector<Word> out;
    for (auto const& r : s.rules()) {
      out.push_back(r.lhs);
    }
    return out;
  }
}  // namespace

TEST_CASE("normal forms of M_1", "[enumeration]") {
  auto s = build_mn(1).system();
  CHECK(enumerate_normal_forms(s, 0).size() == 1);
  CHECK(enumerate_normal_forms(s, 1).size() == 5);
  CHECK(enumerate_normal_forms(s, 2).size() == 17);
  auto g = growth_series(s, 2);
  CHECK(g.counts == std::vector<std::uint64_t>{1, 4, 12});
  CHECK(growth_series(build_mn(2).system(), 1).counts == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("free monoid on one letter", "[enumeration]") {
  RewritingSystem s(Alphabet("a"), {});
  auto            g = growth_series(s, 6);
  CHECK(g.counts == std::vector<std::uint64_t>(7, 1));
  CHECK(g.total() == 7);
}

TEST_CASE("enumeration is shortlex sorted and matches brute force", "[enumeration]") {
  for (auto const& e : {build_mn(2), build_dehn_example()}) {
    auto s   = e.system();
    auto nfs = enumerate_normal_forms(s, 6);
    for (std::size_t i = 1; i < nfs.size(); ++i) {
      CHECK(s.order().less(nfs[i - 1], nfs[i]));
    }
    std::size_t brute = 0;
    for (auto const& w : oracle::all_words(4, 6)) {
      auto lhs = lhs_of(s);
      if (oracle::naive_occurrences(w, lhs).empty()) {
        ++brute;
      }
    }
    CHECK(nfs.size() == brute);
  }
}

TEST_CASE("growth agrees with the factor-avoidance count", "[enumeration]") {
  for (auto const& e : {build_mn(1), build_mn(2), build_mn(3), build_dehn_example()}) {
    auto s = e.system();
    CHECK(growth_series(s, 9).counts == oracle::avoiding_counts(4, lhs_of(s), 9));
  }
}
