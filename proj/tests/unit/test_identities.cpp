#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "srw/identities.hpp"

using namespace srw;

namespace {
  IdentityCheck const* find(IdentityReport const& r, std::string const& lhs) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](IdentityCheck const& c) { return c.lhs == lhs; });
    return it == r.checks.end() ? nullptr : &*it;
  }
}  // namespace

TEST_CASE("identities for small n", "[identities]") {
  auto r3 = verify_paper_identities(3);
  auto c  = find(r3, "daab");
  REQUIRE(c);
  CHECK(c->expected == "1");
  CHECK(c->pass);

  auto r2 = verify_paper_identities(2);
  auto z  = find(r2, "aab");
  REQUIRE(z);
  CHECK(z->expected == "0");
  CHECK(z->pass);
  auto u = find(r2, "dacc");
  REQUIRE(u);
  CHECK(u->expected == "1");
  CHECK(u->pass);
}

TEST_CASE("every identity holds for n up to 8", "[identities]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto r = verify_paper_identities(n);
    CHECK(r.all_pass());
    CHECK(r.checks.size() > 2 * n);
  }
  CHECK_THROWS_AS(verify_paper_identities(0), std::invalid_argument);
}
