#include "srw/matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace srw {

  FactorMatcher::FactorMatcher(std::size_t              alphabet_size,
                               std::vector<Word> const& patterns,
                               kernels::Backend         backend)
      : alphabet_size_(alphabet_size),
        nodes_(1),
        children_(alphabet_size, kNone),
        backend_(backend),
        scan_(kernels::select(backend)) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      Word const& p = patterns[i];
      if (p.empty()) {
        throw std::invalid_argument("empty pattern");
      }
      std::uint32_t node = 0;
      for (Letter x : p) {
        if (x >= alphabet_size_) {
          throw std::invalid_argument("pattern letter outside alphabet");
        }
        std::uint32_t next = child(node, x);
        if (next == kNone) {
          next = static_cast<std::uint32_t>(nodes_.size());
          nodes_.emplace_back();
          children_.resize(children_.size() + alphabet_size_, kNone);
          children_[node * alphabet_size_ + x] = next;
        }
        node = next;
      }
      auto idx = static_cast<std::uint32_t>(i);
      if (nodes_[node].terminal == kNone) {
        nodes_[node].terminal = idx;
      }
      nodes_[node].all.push_back(idx);
      max_len_ = std::max(max_len_, p.size());
      if (p.size() == 1) {
        table_.add_single(p[0]);
      } else {
        table_.add_pair(p[0], p[1]);
      }
    }
  }

  template <typename F>
  void FactorMatcher::walk(WordView w, std::size_t p, F&& on_terminal) const {
    std::uint32_t node = 0;
    for (std::size_t i = p; i < w.size(); ++i) {
      node = child(node, w[i]);
      if (node == kNone) {
        return;
      }
      if (nodes_[node].terminal != kNone) {
        on_terminal(nodes_[node]);
      }
    }
  }

  std::optional<FactorMatch> FactorMatcher::find_leftmost(WordView    w,
                                                          std::size_t from) const {
    if (table_.empty()) {
      return std::nullopt;
    }
    std::size_t const n = w.size();
    for (std::size_t p = scan_(w, from, table_); p < n;
         p = scan_(w, p + 1, table_)) {
      std::uint32_t best = kNone;
      // Deeper terminals are visited later, so the last one is the longest.
      walk(w, p, [&best](Node const& node) { best = node.terminal; });
      if (best != kNone) {
        return FactorMatch{p, best};
      }
    }
    return std::nullopt;
  }

  std::vector<FactorMatch> FactorMatcher::occurrences(WordView w) const {
    std::vector<FactorMatch> out;
    if (table_.empty()) {
      return out;
    }
    std::size_t const n = w.size();
    for (std::size_t p = scan_(w, 0, table_); p < n; p = scan_(w, p + 1, table_)) {
      walk(w, p, [&](Node const& node) {
        for (auto r : node.all) {
          out.push_back({p, r});
        }
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace srw
