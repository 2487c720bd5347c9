#include "srw/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace srw {

  namespace {
    Relation relation(Alphabet const& A, std::string_view lhs, std::string_view rhs) {
      return {A.parse_word(lhs), parse_element(A, rhs)};
    }
  }  // namespace

  RewritingSystem CatalogEntry::system() const {
    return orient(presentation, ShortlexOrder(presentation.alphabet));
  }

  CatalogEntry build_mn(std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("M_n requires n >= 1");
    }
    Alphabet A("abcd");
    std::vector<Relation> rels;
    rels.push_back(relation(A, std::string(n, 'a') + "b", "0"));
    rels.push_back(relation(A, "ac", "1"));
    rels.push_back(relation(A, "db", "1"));
    rels.push_back(relation(A, "dc", "1"));
    for (std::size_t k = 1; k < n; ++k) {
      rels.push_back(relation(A, "d" + std::string(k, 'a') + "b", "1"));
    }
    return CatalogEntry{"M" + std::to_string(n),
                        Presentation{A, std::move(rels)},
                        "abcd",
                        "congruence-free family M_n, n = " + std::to_string(n)};
  }

  CatalogEntry build_dehn_example() {
    Alphabet A("abcd", "bacd");
    std::vector<Relation> rels{relation(A, "ab", "ba"),
                               relation(A, "cbad", "1"),
                               relation(A, "cbb", "1"),
                               relation(A, "aad", "1"),
                               relation(A, "cad", "0"),
                               relation(A, "cbd", "0"),
                               relation(A, "cd", "1")};
    return CatalogEntry{"dehn-example",
                        Presentation{A, std::move(rels)},
                        "bacd",
                        "congruence-free monoid with quadratic Dehn function"};
  }

  std::vector<CatalogListing> list_catalog() {
    std::vector<CatalogListing> out;
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({"M" + std::to_string(n), build_mn(n).provenance});
    }
    out.push_back({"dehn-example", build_dehn_example().provenance});
    return out;
  }

  CatalogEntry lookup_catalog(std::string_view name, std::size_t max_n) {
    if (name == "dehn-example") {
      return build_dehn_example();
    }
    if (name.size() >= 2 && (name[0] == 'M' || name[0] == 'm')) {
      std::size_t n   = 0;
      auto        end = name.data() + name.size();
      auto [ptr, ec]  = std::from_chars(name.data() + 1, end, n);
      if (ec == std::errc() && ptr == end) {
        if (n < 1 || n > max_n) {
          throw std::invalid_argument("M_n requires 1 <= n <= "
                                      + std::to_string(max_n));
        }
        return build_mn(n);
      }
    }
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
  }

}  // namespace srw
