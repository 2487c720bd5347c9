// Concrete identities used in the congruence-freeness argument for M_n,
// each checked by normalization.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace srw {

  struct IdentityCheck {
    std::string lhs;       // word as typed, e.g. "daab"
    std::string expected;  // "1", "0" or a normal form
    std::string actual;
    bool        pass;
  };

  struct IdentityReport {
    std::size_t                n;
    std::vector<IdentityCheck> checks;

    bool all_pass() const noexcept;
  };

  // d a^k b = 1 (k < n), ac = 1, dc = 1, a^k c^k = 1 (k <= n), a^(n+j) b = 0
  // (j <= 3), and U d a^p c^(p+1) = U for normal forms U of length <= 3 with
  // U d a^p irreducible and p <= 3. Throws std::invalid_argument if n < 1.
  IdentityReport verify_paper_identities(std::size_t n);

}  // namespace srw
