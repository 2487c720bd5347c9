#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "srw/catalog.hpp"
#include "srw/dehn.hpp"

using namespace srw;

namespace {

  Element el(Alphabet const& A, char const* w) {
    return parse_element(A, w);
  }

  Word power2(std::size_t k, Letter x, Letter y) {
    Word w(k, x);
    w.insert(w.end(), k, y);
    return w;
  }

  std::optional<std::size_t> area_of(AreaResult const& r) {
    if (auto* a = std::get_if<Area>(&r)) {
      return a->steps;
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("areas in the quadratic example", "[dehn]") {
  auto e = build_dehn_example();
  auto s = e.system();
  auto A = s.alphabet();
  CHECK(area_of(dehn_area(e.presentation, s, el(A, "ab"), el(A, "ba"))) == 1u);
  CHECK(area_of(dehn_area(e.presentation, s, el(A, "aabb"), el(A, "bbaa"))) == 4u);
  CHECK(area_of(dehn_area(e.presentation, s, el(A, "cad"), el(A, "cbd"))) == 2u);
  CHECK(area_of(dehn_area(e.presentation, s, el(A, "cad"), Element::zero())) == 1u);
  CHECK(area_of(dehn_area(e.presentation, s, el(A, "a"), el(A, "a"))) == 0u);
  CHECK(std::holds_alternative<NotEqual>(dehn_area(e.presentation, s, el(A, "a"), el(A, "b"))));
  CHECK(std::holds_alternative<SearchLimitReached>(
      dehn_area(e.presentation, s, el(A, "aabb"), el(A, "bbaa"), {4, 3})));
}

TEST_CASE("area of the commuting family is k squared", "[dehn]") {
  auto e = build_dehn_example();
  auto s = e.system();
  for (std::size_t k = 1; k <= 4; ++k) {
    auto r = dehn_area(e.presentation, s, Element(power2(k, 0, 1)), Element(power2(k, 1, 0)),
                       {2 * k + 4, 5'000'000});
    CHECK(area_of(r) == k * k);
  }
}

TEST_CASE("M_2 area of dab", "[dehn]") {
  auto e = build_mn(2);
  auto s = e.system();
  auto A = s.alphabet();
  auto r = dehn_area(e.presentation, s, el(A, "dab"), el(A, "1"));
  REQUIRE(area_of(r) == 1u);
  auto const& chain = std::get<Area>(r).derivation;
  REQUIRE(chain.size() == 2);
  CHECK(chain.front() == el(A, "dab"));
  CHECK(chain.back().is_identity());
}

TEST_CASE("areas and derivations agree with plain breadth-first search", "[dehn]") {
  std::mt19937_64 rng(13);
  for (auto const& e : {build_mn(2), build_dehn_example()}) {
    auto                    s     = e.system();
    std::size_t const       len   = 7;
    oracle::DerivationGraph g(e.presentation, len);
    auto                    words = oracle::all_words(4, 4);
    for (int trial = 0; trial < 300; ++trial) {
      Element u(words[rng() % words.size()]);
      Element v(words[rng() % words.size()]);
      if (trial % 5 == 0) {
        v = Element::zero();
      }
      auto r    = dehn_area(e.presentation, s, u, v, {len, 10'000'000});
      auto want = g.distance(u, v);
      if (normalize(s, u) != normalize(s, v)) {
        CHECK(std::holds_alternative<NotEqual>(r));
        CHECK_FALSE(want);
        continue;
      }
      if (!want) {
        CHECK(std::holds_alternative<SearchLimitReached>(r));
        continue;
      }
      REQUIRE(area_of(r) == *want);
      auto const& chain = std::get<Area>(r).derivation;
      REQUIRE(chain.size() == *want + 1);
      CHECK(chain.front() == u);
      CHECK(chain.back() == v);
      for (std::size_t i = 1; i < chain.size(); ++i) {
        CHECK(g.distance(chain[i - 1], chain[i]) == 1u);
      }
    }
  }
}

TEST_CASE("profile agrees with exhaustive pair search", "[dehn]") {
  std::size_t const slack = 2, n_max = 5;
  for (auto const& e : {build_mn(1), build_mn(2), build_dehn_example()}) {
    auto s    = e.system();
    auto rows = dehn_profile(e.presentation, s, n_max, {slack, 5'000'000, 1});
    REQUIRE(rows.size() == n_max + 1);
    CHECK(rows[0].d == 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
      oracle::DerivationGraph g(e.presentation, n + slack);
      auto                    words = oracle::all_words(4, n);
      std::size_t             best = 0, limited = 0;
      for (auto const& u : words) {
        auto dist = g.distances_from(Element(u));
        for (auto const& v : words) {
          if (u.size() + v.size() > n || !(u < v)) {
            continue;
          }
          if (normalize(s, u) != normalize(s, v)) {
            continue;
          }
          auto d = dist[g.vertex(Element(v))];
          if (d < 0) {
            ++limited;
          } else {
            best = std::max(best, static_cast<std::size_t>(d));
          }
        }
      }
      INFO(e.name << " n=" << n);
      CHECK(rows[n].d == best);
      CHECK(rows[n].limited.size() <= limited);
      if (rows[n].witness) {
        auto [u, v] = *rows[n].witness;
        CHECK(g.distance(u, v) == best);
      }
    }
  }
}

TEST_CASE("profile does not depend on the worker count", "[dehn]") {
  auto e   = build_dehn_example();
  auto s   = e.system();
  auto one = dehn_profile(e.presentation, s, 7, {4, 5'000'000, 1});
  auto two = dehn_profile(e.presentation, s, 7, {4, 5'000'000, 3});
  REQUIRE(one.size() == two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].d == two[i].d);
    CHECK(one[i].witness == two[i].witness);
    CHECK(one[i].limited.size() == two[i].limited.size());
  }
}

TEST_CASE("M_n profiles are linear", "[dehn]") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto e = build_mn(n);
    for (auto const& row : dehn_profile(e.presentation, e.system(), 7)) {
      CHECK(row.d <= row.n);
      CHECK(row.limited.empty());
    }
  }
}

TEST_CASE("power-law fit", "[dehn]") {
  std::vector<std::pair<double, double>> pts;
  for (int x = 1; x <= 6; ++x) {
    pts.emplace_back(x, 3.0 * x * x);
  }
  pts.emplace_back(7, 0);  // skipped
  auto fit = fit_power_law(pts);
  REQUIRE(fit);
  CHECK(fit->alpha == Catch::Approx(2.0).margin(1e-9));
  CHECK(fit->c == Catch::Approx(3.0).margin(1e-9));
  CHECK_FALSE(fit_power_law({{2, 1}}));
}
