// Built-in presentations: the congruence-free family M_n and a congruence-free
// monoid with a non-length-decreasing complete system.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "srw/presentation.hpp"
#include "srw/rewriting.hpp"

namespace srw {

  struct CatalogEntry {
    std::string  name;
    Presentation presentation;  // its alphabet carries the precedence
    std::string  precedence;    // lowest first, e.g. "bacd"
    std::string  provenance;

    RewritingSystem system() const;
  };

  // Mon<a,b,c,d : a^n b = 0, ac = 1, db = 1, dc = 1, d a^k b = 1 (1 <= k < n)>
  // with precedence a < b < c < d. Throws std::invalid_argument if n < 1.
  CatalogEntry build_mn(std::size_t n);

  // ab -> ba, cbad -> 1, cbb -> 1, aad -> 1, cad -> 0, cbd -> 0, cd -> 1 with
  // precedence b < a < c < d.
  CatalogEntry build_dehn_example();

  struct CatalogListing {
    std::string name;
    std::string description;
  };

  // M1..M6 and dehn-example; lookup() accepts any "M<n>".
  std::vector<CatalogListing> list_catalog();

  // Throws std::invalid_argument for unknown names or n > max_n.
  CatalogEntry lookup_catalog(std::string_view name, std::size_t max_n = SIZE_MAX);

}  // namespace srw
