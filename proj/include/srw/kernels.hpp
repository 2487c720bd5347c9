// Candidate-position scan kernels for the factor matcher.
//
// A position p of a word w is a candidate when w[p] is a complete one-letter
// left-hand side, or when (w[p], w[p+1]) is the two-letter prefix of some
// longer left-hand side. The matcher only walks its trie from candidate
// positions, so the scan is the data-parallel inner loop of normalization.
//
// Every backend must report exactly the candidates the scalar reference
// reports.

#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "srw/word.hpp"

namespace srw::kernels {

  enum class Backend { scalar, avx2 };

  std::string_view name(Backend b) noexcept;

  class CandidateTable {
   public:
    CandidateTable() = default;

    void add_single(Letter x);
    void add_pair(Letter x, Letter y);

    bool is_single(Letter x) const noexcept {
      return single_[x];
    }
    bool is_pair(Letter x, Letter y) const noexcept {
      return pair_[(static_cast<std::size_t>(x) << 8) | y];
    }
    bool empty() const noexcept {
      return singles_.empty() && pairs_.empty();
    }

    std::vector<Letter> const& singles() const noexcept {
      return singles_;
    }
    // Second letters grouped by first letter, in insertion order.
    std::vector<std::pair<Letter, std::vector<Letter>>> const&
    pairs_by_first() const noexcept {
      return pairs_;
    }

   private:
    std::bitset<256>                                     single_;
    std::bitset<256 * 256>                               pair_;
    std::vector<Letter>                                  singles_;
    std::vector<std::pair<Letter, std::vector<Letter>>> pairs_;
  };

  // Returns the least candidate position p >= from, or w.size() if none.
  using ScanFn = std::size_t (*)(WordView w,
                                 std::size_t from,
                                 CandidateTable const& table);

  std::size_t next_candidate_scalar(WordView              w,
                                    std::size_t           from,
                                    CandidateTable const& table);

  bool        avx2_compiled() noexcept;
  std::size_t next_candidate_avx2(WordView              w,
                                  std::size_t           from,
                                  CandidateTable const& table);

  // True if the backend was compiled in and the running CPU supports it.
  bool available(Backend b) noexcept;

  // Best available backend, overridable with SRW_KERNEL=scalar|avx2.
  Backend default_backend() noexcept;

  ScanFn select(Backend b);

}  // namespace srw::kernels
