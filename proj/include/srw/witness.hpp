// Unit witnesses: words x, y with x w y = 1, showing that the two-sided ideal
// generated by a nonzero element w is the whole monoid.

#pragma once

#include <cstddef>
#include <optional>

#include "srw/rewriting.hpp"

namespace srw {

  struct WitnessPair {
    Word x;
    Word y;

    bool operator==(WitnessPair const&) const = default;
  };

  // Constructive witness in M_n, by induction on |w|:
  //   w = 1            -> (1, 1)
  //   w = w' d a^k     -> witness of w', with c^k a b (c^k b when n = 1)
  //                       put in front of y
  //   w = b w' | c w'  -> witness of w', with d appended to x
  //   w = a^k          -> (1, c^k)
  //   w = a^k b w'     -> witness of w', with d appended to x (1 <= k < n)
  // `mn` must be the system of build_mn(n). Throws std::invalid_argument if w
  // is zero or not a normal form.
  WitnessPair unit_witness_mn(RewritingSystem const& mn, std::size_t n,
                              Element const& w);
  WitnessPair unit_witness_mn(std::size_t n, Element const& w);

  struct WitnessSearchLimits {
    // Longest intermediate normal form x w y kept in the search.
    std::size_t max_len   = 12;
    std::size_t max_nodes = 1'000'000;
  };

  // Breadth-first search over the states nf(x w y), each move prepending a
  // letter to x or appending one to y (prepends first, letters in precedence
  // order). Returns a witness minimizing |x| + |y| among states within
  // max_len, or nullopt if the limits are hit first.
  std::optional<WitnessPair> unit_witness_search(RewritingSystem const& s,
                                                 WordView               w,
                                                 WitnessSearchLimits limits = {});

}  // namespace srw
