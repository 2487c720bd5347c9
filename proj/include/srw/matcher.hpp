// Multi-pattern factor index over the left-hand sides of a rewriting system.
//
// Left-hand sides are stored in a trie. A scan kernel proposes candidate start
// positions (see kernels.hpp) and the trie is walked from each candidate to
// confirm matches.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "srw/kernels.hpp"
#include "srw/word.hpp"

namespace srw {

  struct FactorMatch {
    std::size_t pos;
    std::size_t rule;

    bool operator==(FactorMatch const&) const = default;
    auto operator<=>(FactorMatch const&) const = default;
  };

  class FactorMatcher {
   public:
    FactorMatcher() = default;
    FactorMatcher(std::size_t                alphabet_size,
                  std::vector<Word> const&   patterns,
                  kernels::Backend           backend = kernels::default_backend());

    // The match at the least position p >= from; among matches at p the
    // longest pattern, then the lowest pattern index.
    std::optional<FactorMatch> find_leftmost(WordView w, std::size_t from = 0) const;

    // Every (position, pattern) occurrence, sorted.
    std::vector<FactorMatch> occurrences(WordView w) const;

    bool matches_anywhere(WordView w) const {
      return find_leftmost(w).has_value();
    }

    std::size_t max_pattern_length() const noexcept {
      return max_len_;
    }
    kernels::Backend backend() const noexcept {
      return backend_;
    }

   private:
    static constexpr std::uint32_t kNone = UINT32_MAX;

    struct Node {
      // Lowest pattern index ending here, or kNone. `all` lists every one.
      std::uint32_t              terminal = kNone;
      std::vector<std::uint32_t> all;
    };

    std::uint32_t child(std::uint32_t node, Letter x) const noexcept {
      return children_[node * alphabet_size_ + x];
    }

    template <typename F>
    void walk(WordView w, std::size_t p, F&& on_terminal) const;

    std::size_t                alphabet_size_ = 0;
    std::size_t                max_len_       = 0;
    std::vector<Node>          nodes_;
    std::vector<std::uint32_t> children_;
    kernels::CandidateTable    table_;
    kernels::Backend           backend_ = kernels::Backend::scalar;
    kernels::ScanFn            scan_    = &kernels::next_candidate_scalar;
  };

}  // namespace srw
