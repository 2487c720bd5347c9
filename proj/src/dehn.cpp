#include "srw/dehn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "srw/matcher.hpp"

namespace srw {

  namespace {

    constexpr std::int64_t kInf = std::int64_t{1} << 40;

    // Word keys: length in the low 6 bits, then `bits` per letter.
    struct PackedCodec {
      using Key = std::uint64_t;
      static constexpr Key kZero = UINT64_MAX;
      unsigned             bits;

      static bool fits(std::size_t alphabet_size, std::size_t max_len) {
        unsigned b = std::max(1u, static_cast<unsigned>(std::bit_width(alphabet_size - 1)));
        return max_len < 64 && 6 + b * max_len <= 64;
      }
      explicit PackedCodec(std::size_t alphabet_size)
          : bits(std::max(1u, static_cast<unsigned>(std::bit_width(alphabet_size - 1)))) {}

      Key encode(WordView w) const {
        Key k = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
          k |= Key{w[i]} << (6 + bits * i);
        }
        return k;
      }
      void decode(Key k, Word& out) const {
        std::size_t n = k & 63;
        out.resize(n);
        Key mask = (Key{1} << bits) - 1;
        for (std::size_t i = 0; i < n; ++i) {
          out[i] = static_cast<Letter>((k >> (6 + bits * i)) & mask);
        }
      }
      Key zero() const {
        return kZero;
      }
    };

    // Fallback for alphabets or lengths that do not pack into 64 bits. Letter
    // indices are below 128, so "\xff" cannot be a word.
    struct StringCodec {
      using Key = std::string;

      Key encode(WordView w) const {
        return Key(w.begin(), w.end());
      }
      void decode(Key const& k, Word& out) const {
        out.assign(k.begin(), k.end());
      }
      Key zero() const {
        return Key(1, '\xff');
      }
    };

    // Edges of the derivation graph.
    class RelationGraph {
     public:
      explicit RelationGraph(Presentation const& p) {
        for (auto const& r : p.relations) {
          if (r.rhs.is_zero()) {
            if (r.lhs.empty()) {
              all_zero_ = true;
            } else {
              patterns_.push_back(r.lhs);
              targets_.push_back(Element::zero());
            }
            continue;
          }
          Word const& rhs = r.rhs.word();
          if (r.lhs == rhs) {
            continue;
          }
          for (auto const& [from, to] : {std::pair{&r.lhs, &rhs}, std::pair{&rhs, &r.lhs}}) {
            if (from->empty()) {
              inserts_.push_back(*to);
            } else {
              patterns_.push_back(*from);
              targets_.push_back(Element(*to));
            }
          }
        }
        if (!patterns_.empty()) {
          matcher_ = FactorMatcher(p.alphabet.size(), patterns_);
        }
      }

      // Calls on_zero() or on_word(WordView) once per edge out of w.
      template <typename OnZero, typename OnWord>
      void expand(Word const& w, std::size_t max_len, Word& buf, OnZero&& on_zero,
                  OnWord&& on_word) const {
        if (all_zero_) {
          on_zero();
        }
        if (!patterns_.empty()) {
          for (auto const& m : matcher_.occurrences(w)) {
            Element const& t = targets_[m.rule];
            if (t.is_zero()) {
              on_zero();
              continue;
            }
            std::size_t plen = patterns_[m.rule].size();
            Word const& r    = t.word();
            if (w.size() - plen + r.size() > max_len) {
              continue;
            }
            buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.pos));
            buf.insert(buf.end(), r.begin(), r.end());
            buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(m.pos + plen),
                       w.end());
            on_word(WordView(buf));
          }
        }
        for (auto const& ins : inserts_) {
          if (w.size() + ins.size() > max_len) {
            continue;
          }
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            buf.insert(buf.end(), ins.begin(), ins.end());
            buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
            on_word(WordView(buf));
          }
        }
      }

     private:
      bool                 all_zero_ = false;
      std::vector<Word>    patterns_;
      std::vector<Element> targets_;
      std::vector<Word>    inserts_;
      FactorMatcher        matcher_;
    };

    template <typename Codec>
    AreaResult bidirectional_search(RelationGraph const& graph,
                                    Codec const&         codec,
                                    Element const&       u,
                                    Element const&       v,
                                    DehnLimits           limits) {
      using Key = typename Codec::Key;
      struct Info {
        std::int64_t dist;
        Key          parent;
      };
      struct Side {
        std::unordered_map<Key, Info> seen;
        std::vector<Key>              frontier;
        std::int64_t                  expanded = -1;  // kInf once exhausted
      };

      Key const zero = codec.zero();
      auto      key_of = [&](Element const& e) {
        return e.is_zero() ? zero : codec.encode(e.word());
      };
      Side sides[2];
      for (int i = 0; i < 2; ++i) {
        Key k = key_of(i == 0 ? u : v);
        sides[i].seen.emplace(k, Info{0, k});
        sides[i].frontier.push_back(k);
      }
      std::int64_t best = kInf;
      Key          meet{};
      if (key_of(u) == key_of(v)) {
        best = 0;
        meet = key_of(u);
      }

      auto zero_bound = [&](Side const& s) {
        auto it = s.seen.find(zero);
        if (it != s.seen.end()) {
          return it->second.dist;
        }
        return s.expanded >= kInf ? kInf : s.expanded + 2;
      };

      Word cur, buf;
      while (true) {
        std::int64_t reach = std::min(kInf, sides[0].expanded + sides[1].expanded + 2);
        if (best <= reach && best <= zero_bound(sides[0]) + zero_bound(sides[1])) {
          break;
        }
        bool open0 = sides[0].expanded < kInf;
        bool open1 = sides[1].expanded < kInf;
        if (!open0 && !open1) {
          break;
        }
        int const pick =
            !open0 ? 1
                   : (!open1 ? 0 : (sides[1].frontier.size() < sides[0].frontier.size() ? 1 : 0));
        Side&            me    = sides[pick];
        Side&            other = sides[1 - pick];
        std::int64_t     level = me.expanded + 1;
        std::vector<Key> next;
        auto             visit = [&](Key const& y, Key const& from) {
          if (!me.seen.emplace(y, Info{level + 1, from}).second) {
            return;
          }
          next.push_back(y);
          auto it = other.seen.find(y);
          if (it != other.seen.end() && level + 1 + it->second.dist < best) {
            best = level + 1 + it->second.dist;
            meet = y;
          }
        };
        for (Key const& x : me.frontier) {
          if (x == zero) {
            continue;
          }
          codec.decode(x, cur);
          graph.expand(
              cur, limits.max_len, buf, [&] { visit(zero, x); },
              [&](WordView w) { visit(codec.encode(w), x); });
          if (sides[0].seen.size() + sides[1].seen.size() > limits.max_nodes) {
            return SearchLimitReached{sides[0].seen.size() + sides[1].seen.size()};
          }
        }
        me.frontier = std::move(next);
        me.expanded = me.frontier.empty() ? kInf : level;
      }
      if (best >= kInf) {
        return SearchLimitReached{sides[0].seen.size() + sides[1].seen.size()};
      }

      auto element_of = [&](Key const& k) {
        if (k == zero) {
          return Element::zero();
        }
        Word w;
        codec.decode(k, w);
        return Element(std::move(w));
      };
      std::vector<Element> chain;
      for (Key k = meet;; k = sides[0].seen.at(k).parent) {
        chain.push_back(element_of(k));
        if (sides[0].seen.at(k).dist == 0) {
          break;
        }
      }
      std::reverse(chain.begin(), chain.end());
      for (Key k = meet; sides[1].seen.at(k).dist != 0;) {
        k = sides[1].seen.at(k).parent;
        chain.push_back(element_of(k));
      }
      return Area{static_cast<std::size_t>(best), std::move(chain)};
    }

    AreaResult search(RelationGraph const& graph,
                      std::size_t          alphabet_size,
                      Element const&       u,
                      Element const&       v,
                      DehnLimits           limits) {
      if (PackedCodec::fits(alphabet_size, limits.max_len)) {
        return bidirectional_search(graph, PackedCodec(alphabet_size), u, v, limits);
      }
      return bidirectional_search(graph, StringCodec{}, u, v, limits);
    }

    std::size_t element_length(Element const& e) {
      return e.is_zero() ? 0 : e.word().size();
    }

    // Every rule is a defining relation and none lengthens a word, so the
    // rewriting derivation to normal form is a path in the derivation graph.
    bool rules_are_relations(Presentation const& p, RewritingSystem const& s) {
      for (auto const& rule : s.rules()) {
        if (!rule.rhs.is_zero() && rule.rhs.word().size() > rule.lhs.size()) {
          return false;
        }
        bool found = std::any_of(p.relations.begin(), p.relations.end(), [&](Relation const& r) {
          if (r.lhs == rule.lhs && r.rhs == rule.rhs) {
            return true;
          }
          return !rule.rhs.is_zero() && !r.rhs.is_zero() && r.rhs.word() == rule.lhs &&
                 Element(r.lhs) == rule.rhs;
        });
        if (!found) {
          return false;
        }
      }
      return true;
    }

    struct ProfileWord {
      Word          word;
      std::uint64_t ub;  // steps to the normal form (or to zero)
      std::uint32_t cls;
    };

  }  // namespace

  AreaResult dehn_area(Presentation const&    p,
                       RewritingSystem const& s,
                       Element const&         u,
                       Element const&         v,
                       DehnLimits             limits) {
    if (p.alphabet.letters() != s.alphabet().letters()) {
      throw std::invalid_argument("presentation and rewriting system use different alphabets");
    }
    if (normalize(s, u) != normalize(s, v)) {
      return NotEqual{};
    }
    if (element_length(u) > limits.max_len || element_length(v) > limits.max_len) {
      return SearchLimitReached{0};
    }
    return search(RelationGraph(p), p.alphabet.size(), u, v, limits);
  }

  std::vector<DehnRow> dehn_profile(Presentation const&    p,
                                    RewritingSystem const& s,
                                    std::size_t            n_max,
                                    DehnProfileOptions     options) {
    if (p.alphabet.letters() != s.alphabet().letters()) {
      throw std::invalid_argument("presentation and rewriting system use different alphabets");
    }
    if (!s.terminating()) {
      throw std::invalid_argument("dehn_profile needs a terminating system");
    }
    constexpr std::uint64_t kNoBound = std::uint64_t{1} << 40;
    bool const              bounded  = rules_are_relations(p, s);

    std::size_t zmin = SIZE_MAX;
    for (auto const& r : s.rules()) {
      if (r.rhs.is_zero()) {
        zmin = std::min(zmin, r.lhs.size());
      }
    }

    // Every word of length <= n_max, normalized incrementally; keep those that
    // have a partner within the length budget.
    std::vector<ProfileWord>                     words;
    std::unordered_map<Element, std::uint32_t>   class_ids;
    std::vector<Element>                         class_nf;
    std::size_t const                            k = s.alphabet().size();
    struct Frame {
      Element       nf;
      std::uint64_t ub;
    };
    std::vector<Frame> stack{{Element(), 0}};
    Word               w;
    Word               buf;
    auto               keep = [&](Frame const& f) {
      std::size_t partner = f.nf.is_zero() ? zmin : f.nf.word().size();
      if (partner == SIZE_MAX || w.size() + partner > n_max) {
        return;
      }
      auto [it, fresh] = class_ids.emplace(f.nf, static_cast<std::uint32_t>(class_nf.size()));
      if (fresh) {
        class_nf.push_back(f.nf);
      }
      words.push_back({w, bounded ? f.ub : kNoBound, it->second});
    };
    auto dfs = [&](auto&& self) -> void {
      Frame const top = stack.back();
      keep(top);
      if (w.size() == n_max) {
        return;
      }
      for (Letter g = 0; g < k; ++g) {
        Frame next{Element::zero(), top.ub};
        if (!top.nf.is_zero()) {
          buf = top.nf.word();
          buf.push_back(g);
          Derivation d = derive(s, buf);
          next         = {std::move(d.result), top.ub + d.steps};
        }
        w.push_back(g);
        stack.push_back(std::move(next));
        self(self);
        stack.pop_back();
        w.pop_back();
      }
    };
    dfs(dfs);

    RelationGraph const graph(p);
    auto evaluate = [&](std::vector<std::pair<Element, Element>> const& pairs,
                        DehnLimits                                      limits) {
      std::vector<AreaResult> out(pairs.size());
      detail::parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
        out[i] = search(graph, k, pairs[i].first, pairs[i].second, limits);
      });
      return out;
    };
    // Fixed-size chunks keep the set of evaluated pairs independent of jobs.
    constexpr std::size_t kChunk = 32;

    std::vector<DehnRow> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      DehnRow& row = rows[n];
      row.n        = n;
      DehnLimits const limits{n + options.slack, options.max_nodes};

      std::vector<std::uint32_t> live;
      for (std::uint32_t i = 0; i < words.size(); ++i) {
        Element const& nf      = class_nf[words[i].cls];
        std::size_t    partner = nf.is_zero() ? zmin : nf.word().size();
        if (words[i].word.size() + partner <= n) {
          live.push_back(i);
        }
      }
      auto consider = [&](Element a, Element b, AreaResult const& r) {
        if (auto* area = std::get_if<Area>(&r)) {
          if (area->steps > row.d) {
            row.d       = area->steps;
            row.witness = std::pair{std::move(a), std::move(b)};
          }
        } else {
          row.limited.emplace_back(std::move(a), std::move(b));
        }
      };

      // Distance from each word to its class anchor: the normal form, or the
      // zero vertex. Pairs with a normal form count towards D(n) themselves.
      std::vector<std::uint64_t> bound(words.size(), kNoBound);
      for (std::uint32_t i : live) {
        bound[i] = words[i].ub;
      }
      std::vector<std::uint32_t> order = live;
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return words[x].ub > words[y].ub;
      });
      for (std::size_t at = 0; at < order.size();) {
        std::vector<std::uint32_t>               chunk;
        std::vector<std::pair<Element, Element>> pairs;
        for (; at < order.size() && chunk.size() < kChunk; ++at) {
          std::uint32_t const i  = order[at];
          Element const&      nf = class_nf[words[i].cls];
          // A zero-valued word one step from zero needs no search.
          if (words[i].ub == 0 || (nf.is_zero() && words[i].ub <= 1)) {
            continue;
          }
          if (!nf.is_zero() && words[i].ub <= row.d) {
            continue;
          }
          chunk.push_back(i);
          pairs.emplace_back(Element(words[i].word), nf);
        }
        auto results = evaluate(pairs, limits);
        for (std::size_t c = 0; c < chunk.size(); ++c) {
          if (auto* area = std::get_if<Area>(&results[c])) {
            bound[chunk[c]] = area->steps;
          }
          if (!pairs[c].second.is_zero()) {
            consider(pairs[c].first, pairs[c].second, results[c]);
          }
        }
      }

      // Remaining pairs, grouped by class and length, highest bound first.
      std::vector<std::vector<std::vector<std::uint32_t>>> groups(class_nf.size());
      for (std::uint32_t i : live) {
        auto& g = groups[words[i].cls];
        if (g.size() <= words[i].word.size()) {
          g.resize(words[i].word.size() + 1);
        }
        g[words[i].word.size()].push_back(i);
      }
      for (auto& g : groups) {
        for (auto& list : g) {
          std::stable_sort(list.begin(), list.end(), [&](std::uint32_t x, std::uint32_t y) {
            return bound[x] > bound[y];
          });
        }
      }
      struct Candidate {
        std::uint64_t bound;
        std::uint32_t u, v;
      };
      std::vector<Candidate> candidates;
      for (auto const& g : groups) {
        for (std::size_t l1 = 0; l1 < g.size(); ++l1) {
          for (std::size_t l2 = l1; l2 < g.size() && l1 + l2 <= n; ++l2) {
            auto const& a = g[l1];
            auto const& b = g[l2];
            if (a.empty() || b.empty()) {
              continue;
            }
            for (std::size_t i = 0; i < a.size(); ++i) {
              if (bound[a[i]] + bound[b.front()] <= row.d) {
                break;
              }
              for (std::size_t j = l1 == l2 ? i + 1 : 0; j < b.size(); ++j) {
                std::uint64_t sum = bound[a[i]] + bound[b[j]];
                if (sum <= row.d) {
                  break;
                }
                candidates.push_back({sum, a[i], b[j]});
              }
            }
          }
        }
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](Candidate const& x, Candidate const& y) { return x.bound > y.bound; });
      for (std::size_t at = 0; at < candidates.size() && candidates[at].bound > row.d;) {
        std::vector<std::pair<Element, Element>> pairs;
        for (; at < candidates.size() && pairs.size() < kChunk; ++at) {
          if (candidates[at].bound > row.d) {
            pairs.emplace_back(Element(words[candidates[at].u].word),
                               Element(words[candidates[at].v].word));
          }
        }
        auto results = evaluate(pairs, limits);
        for (std::size_t c = 0; c < pairs.size(); ++c) {
          consider(pairs[c].first, pairs[c].second, results[c]);
        }
      }
    }
    return rows;
  }

  std::optional<PowerFit> fit_power_law(std::vector<std::pair<double, double>> const& points) {
    double      sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (auto [x, y] : points) {
      if (x <= 0 || y <= 0) {
        continue;
      }
      double lx = std::log(x), ly = std::log(y);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++m;
    }
    double denom = static_cast<double>(m) * sxx - sx * sx;
    if (m < 2 || std::abs(denom) < 1e-12) {
      return std::nullopt;
    }
    double alpha = (static_cast<double>(m) * sxy - sx * sy) / denom;
    double logc  = (sy - alpha * sx) / static_cast<double>(m);
    return PowerFit{std::exp(logc), alpha};
  }

}  // namespace srw
