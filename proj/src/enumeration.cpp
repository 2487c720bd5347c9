#include "srw/enumeration.hpp"

#include <numeric>

namespace srw {

  namespace {
    // Extends each word of `level` by one letter, in precedence order, keeping
    // irreducible results. Only factors touching the new last letter can be
    // redexes.
    template <typename F>
    void extend_level(RewritingSystem const& s,
                      std::vector<Word> const& level,
                      F&&                      emit) {
      auto const& precedence = s.alphabet().precedence();
      std::size_t const window = s.max_lhs_length();
      Word buf;
      for (Word const& w : level) {
        buf.assign(w.begin(), w.end());
        buf.push_back(0);
        std::size_t from = buf.size() >= window ? buf.size() - window : 0;
        for (Letter x : precedence) {
          buf.back() = x;
          if (!s.matcher().find_leftmost(buf, from)) {
            emit(buf);
          }
        }
      }
    }
  }  // namespace

  std::vector<Word> enumerate_normal_forms(RewritingSystem const& s,
                                           std::size_t            max_len) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> level(out.begin() + static_cast<std::ptrdiff_t>(begin),
                              out.end());
      begin = out.size();
      extend_level(s, level, [&out](Word const& w) { out.push_back(w); });
      if (out.size() == begin) {
        break;
      }
    }
    return out;
  }

  std::uint64_t GrowthSeries::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }

  GrowthSeries growth_series(RewritingSystem const& s, std::size_t max_len) {
    GrowthSeries      g;
    std::vector<Word> level{Word{}};
    g.counts.push_back(1);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      extend_level(s, level, [&next](Word const& w) { next.push_back(w); });
      g.counts.push_back(next.size());
      level = std::move(next);
    }
    return g;
  }

}  // namespace srw
