#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srw/rewriting.hpp"

namespace srw {

  // Nonzero normal forms of length <= max_len in shortlex order. Assumes the
  // system is complete; the result is exactly the words avoiding every lhs.
  std::vector<Word> enumerate_normal_forms(RewritingSystem const& s,
                                           std::size_t            max_len);

  struct GrowthSeries {
    // counts[l] = number of normal forms of length exactly l.
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept;
  };

  GrowthSeries growth_series(RewritingSystem const& s, std::size_t max_len);

}  // namespace srw
