// Derivation areas and measured Dehn functions.
//
// The derivation graph has one vertex per word of length <= max_len plus an
// absorbing zero vertex. Edges apply one defining relation in either
// direction; a relation u = 0 joins every word containing u to zero. The area
// of an equal pair is the distance between them in this graph.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "srw/presentation.hpp"
#include "srw/rewriting.hpp"

namespace srw {

  struct DehnLimits {
    std::size_t max_len   = 16;
    std::size_t max_nodes = 5'000'000;
  };

  struct Area {
    std::size_t          steps;
    std::vector<Element> derivation;  // steps + 1 elements, u first
  };

  struct NotEqual {};

  // No verdict within the length or node bound.
  struct SearchLimitReached {
    std::size_t nodes;
  };

  using AreaResult = std::variant<Area, NotEqual, SearchLimitReached>;

  // `s` decides equality; `p` supplies the edges. Bidirectional breadth-first
  // search, so `steps` is minimal among derivations within max_len.
  AreaResult dehn_area(Presentation const&    p,
                       RewritingSystem const& s,
                       Element const&         u,
                       Element const&         v,
                       DehnLimits             limits = {});

  struct DehnRow {
    std::size_t n = 0;
    std::size_t d = 0;
    // Equal pairs that could have raised D(n) but hit a search limit.
    std::vector<std::pair<Element, Element>>   limited;
    std::optional<std::pair<Element, Element>> witness;
  };

  struct DehnProfileOptions {
    std::size_t slack     = 4;
    std::size_t max_nodes = 5'000'000;
    std::size_t jobs      = 1;
  };

  // Rows for n = 0..n_max. D(n) is the largest area over equal pairs of words
  // with |u| + |v| <= n, each searched with max_len = n + slack. Pairs are
  // pruned by an upper bound from rewriting to normal form, which is only
  // used when every rule of `s` is a relation of `p`.
  std::vector<DehnRow> dehn_profile(Presentation const&    p,
                                    RewritingSystem const& s,
                                    std::size_t            n_max,
                                    DehnProfileOptions     options = {});

  struct PowerFit {
    double c;
    double alpha;
  };

  // Least squares for log y = log c + alpha log x. Points with x or y <= 0
  // are skipped; needs two distinct x values.
  std::optional<PowerFit> fit_power_law(std::vector<std::pair<double, double>> const& points);

}  // namespace srw
