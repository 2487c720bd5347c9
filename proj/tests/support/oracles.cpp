#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

  namespace {

    std::vector<std::uint64_t> length_offsets(std::size_t k, std::size_t max_len) {
      std::vector<std::uint64_t> off{0};
      std::uint64_t              block = 1;
      for (std::size_t l = 0; l <= max_len; ++l) {
        off.push_back(off.back() + block);
        block *= k;
      }
      return off;
    }

    std::uint64_t word_id(Word const& w, std::size_t k, std::vector<std::uint64_t> const& off) {
      std::uint64_t v = 0;
      for (Letter x : w) {
        v = v * k + x;
      }
      return off[w.size()] + v;
    }

    Word word_of(std::uint64_t id, std::size_t k, std::vector<std::uint64_t> const& off) {
      std::size_t l = 0;
      while (off[l + 1] <= id) {
        ++l;
      }
      std::uint64_t v = id - off[l];
      Word          w(l);
      for (std::size_t i = l; i-- > 0;) {
        w[i] = static_cast<Letter>(v % k);
        v /= k;
      }
      return w;
    }

    bool occurs_at(Word const& w, std::size_t pos, Word const& pat) {
      return pos + pat.size() <= w.size() &&
             std::equal(pat.begin(), pat.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    }

    Word splice(Word const& w, std::size_t pos, std::size_t len, Word const& with) {
      Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      out.insert(out.end(), with.begin(), with.end());
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
      return out;
    }

    // Calls f(neighbour or nullopt for zero) for each relation application
    // out of w whose result has length <= max_len.
    template <typename F>
    void neighbours(srw::Presentation const& p, Word const& w, std::size_t max_len, F&& f) {
      for (auto const& r : p.relations) {
        if (r.rhs.is_zero()) {
          for (std::size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
            if (occurs_at(w, pos, r.lhs)) {
              f(std::optional<Word>{});
            }
          }
          continue;
        }
        Word const& rhs = r.rhs.word();
        for (int dir = 0; dir < 2; ++dir) {
          Word const& from = dir == 0 ? r.lhs : rhs;
          Word const& to   = dir == 0 ? rhs : r.lhs;
          for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
            if (occurs_at(w, pos, from) && w.size() - from.size() + to.size() <= max_len) {
              f(std::optional<Word>{splice(w, pos, from.size(), to)});
            }
          }
        }
      }
    }

  }  // namespace

  std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
    auto              off = length_offsets(k, max_len);
    std::vector<Word> out;
    for (std::uint64_t id = 0; id < off[max_len + 1]; ++id) {
      out.push_back(word_of(id, k, off));
    }
    return out;
  }

  std::vector<std::uint64_t> avoiding_counts(std::size_t              k,
                                             std::vector<Word> const& patterns,
                                             std::size_t              max_len) {
    std::size_t keep = 0;
    for (auto const& p : patterns) {
      keep = std::max(keep, p.size());
    }
    keep = keep > 0 ? keep - 1 : 0;
    std::map<Word, std::uint64_t> states{{Word{}, 1}};
    std::vector<std::uint64_t>    counts{1};
    for (std::size_t l = 1; l <= max_len; ++l) {
      std::map<Word, std::uint64_t> next;
      for (auto const& [suffix, count] : states) {
        for (std::size_t x = 0; x < k; ++x) {
          Word extended = suffix;
          extended.push_back(static_cast<Letter>(x));
          bool bad = std::any_of(patterns.begin(), patterns.end(), [&](Word const& p) {
            return !p.empty() && p.size() <= extended.size() &&
                   std::equal(p.rbegin(), p.rend(), extended.rbegin());
          });
          if (bad) {
            continue;
          }
          if (extended.size() > keep) {
            extended.erase(extended.begin(),
                           extended.begin() + static_cast<std::ptrdiff_t>(extended.size() - keep));
          }
          next[extended] += count;
        }
      }
      std::uint64_t total = 0;
      for (auto const& [s, c] : next) {
        total += c;
      }
      counts.push_back(total);
      states = std::move(next);
    }
    return counts;
  }

  std::optional<Match> naive_leftmost(Word const& w, std::vector<Word> const& patterns,
                                      std::size_t from) {
    for (std::size_t pos = from; pos < w.size(); ++pos) {
      std::optional<Match> best;
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (occurs_at(w, pos, patterns[i]) &&
            (!best || patterns[i].size() > patterns[best->pattern].size())) {
          best = Match{pos, i};
        }
      }
      if (best) {
        return best;
      }
    }
    return std::nullopt;
  }

  std::vector<Match> naive_occurrences(Word const& w, std::vector<Word> const& patterns) {
    std::vector<Match> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (occurs_at(w, pos, patterns[i])) {
          out.push_back({pos, i});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ClosureOracle
  ////////////////////////////////////////////////////////////////////////

  ClosureOracle::ClosureOracle(srw::Presentation const& p, std::size_t radius)
      : k_(p.alphabet.size()), radius_(radius), offset_(length_offsets(k_, radius)) {
    std::uint64_t n = offset_[radius + 1];
    if (n >= UINT32_MAX) {
      throw std::invalid_argument("ball too large");
    }
    zero_ = static_cast<std::uint32_t>(n);
    parent_.resize(n + 1);
    std::iota(parent_.begin(), parent_.end(), 0u);
    for (std::uint64_t i = 0; i < n; ++i) {
      Word const w = word_of(i, k_, offset_);
      neighbours(p, w, radius, [&](std::optional<Word> const& y) {
        unite(static_cast<std::uint32_t>(i), y ? id(*y) : zero_);
      });
    }
  }

  std::uint32_t ClosureOracle::id(Word const& w) const {
    if (w.size() > radius_) {
      throw std::invalid_argument("word outside the ball");
    }
    return static_cast<std::uint32_t>(word_id(w, k_, offset_));
  }

  std::uint32_t ClosureOracle::find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  void ClosureOracle::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

  bool ClosureOracle::equal(Element const& u, Element const& v) {
    auto vid = [&](Element const& e) { return e.is_zero() ? zero_ : id(e.word()); };
    return find(vid(u)) == find(vid(v));
  }

  bool ClosureOracle::is_zero(Word const& w) {
    return find(id(w)) == find(zero_);
  }

  ////////////////////////////////////////////////////////////////////////
  // DerivationGraph
  ////////////////////////////////////////////////////////////////////////

  DerivationGraph::DerivationGraph(srw::Presentation const& p, std::size_t max_len)
      : k_(p.alphabet.size()), max_len_(max_len), offset_(length_offsets(k_, max_len)) {
    std::uint64_t n = offset_[max_len + 1];
    zero_           = static_cast<std::uint32_t>(n);
    adj_.resize(n + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
      Word const w = word_of(i, k_, offset_);
      neighbours(p, w, max_len, [&](std::optional<Word> const& y) {
        std::uint32_t j = y ? static_cast<std::uint32_t>(word_id(*y, k_, offset_)) : zero_;
        adj_[i].push_back(j);
        adj_[j].push_back(static_cast<std::uint32_t>(i));
      });
    }
  }

  std::uint32_t DerivationGraph::vertex(Element const& e) const {
    if (e.is_zero()) {
      return zero_;
    }
    if (e.word().size() > max_len_) {
      throw std::invalid_argument("word outside the graph");
    }
    return static_cast<std::uint32_t>(word_id(e.word(), k_, offset_));
  }

  Element DerivationGraph::element(std::uint32_t id) const {
    return id == zero_ ? Element::zero() : Element(word_of(id, k_, offset_));
  }

  std::vector<std::int64_t> DerivationGraph::distances_from(Element const& u) const {
    std::vector<std::int64_t> dist(adj_.size(), -1);
    std::deque<std::uint32_t> todo;
    std::uint32_t const       s = vertex(u);
    dist[s]                     = 0;
    todo.push_back(s);
    while (!todo.empty()) {
      std::uint32_t x = todo.front();
      todo.pop_front();
      for (std::uint32_t y : adj_[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          todo.push_back(y);
        }
      }
    }
    return dist;
  }

  std::optional<std::size_t> DerivationGraph::distance(Element const& u, Element const& v) const {
    auto d = distances_from(u)[vertex(v)];
    if (d < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(d);
  }

}  // namespace oracle
