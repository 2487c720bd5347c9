#include "srw/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "srw/catalog.hpp"

namespace srw {

  namespace {
    constexpr Letter kA = 0, kB = 1, kC = 2, kD = 3;

    void append_power(Word& w, Letter x, std::size_t k) {
      w.insert(w.end(), k, x);
    }

    WitnessPair witness_mn(std::size_t n, WordView w) {
      if (w.empty()) {
        return {};
      }
      auto last_d = std::find(w.rbegin(), w.rend(), kD);
      if (last_d != w.rend()) {
        // w = w' d a^k; normal forms have only a's after the last d.
        std::size_t p = static_cast<std::size_t>(w.rend() - last_d) - 1;
        std::size_t k = w.size() - p - 1;
        if (!std::all_of(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end(),
                         [](Letter x) { return x == kA; })) {
          throw std::invalid_argument("not a normal form of M_n");
        }
        WitnessPair inner = witness_mn(n, w.first(p));
        Word        y;
        append_power(y, kC, k);
        if (n >= 2) {
          y.push_back(kA);  // d a b = 1
        }
        y.push_back(kB);
        y.insert(y.end(), inner.y.begin(), inner.y.end());
        return {std::move(inner.x), std::move(y)};
      }
      if (w[0] == kB || w[0] == kC) {
        // d b = d c = 1
        WitnessPair inner = witness_mn(n, w.subspan(1));
        inner.x.push_back(kD);
        return inner;
      }
      std::size_t k = 0;
      while (k < w.size() && w[k] == kA) {
        ++k;
      }
      if (k == w.size()) {
        Word y;
        append_power(y, kC, k);
        return {{}, std::move(y)};
      }
      if (w[k] != kB || k >= n) {
        throw std::invalid_argument("not a normal form of M_n");
      }
      // d a^k b = 1
      WitnessPair inner = witness_mn(n, w.subspan(k + 1));
      inner.x.push_back(kD);
      return inner;
    }
  }  // namespace

  WitnessPair unit_witness_mn(RewritingSystem const& mn, std::size_t n,
                              Element const& w) {
    if (w.is_zero()) {
      throw std::invalid_argument("zero has no unit witness");
    }
    if (mn.matcher().matches_anywhere(w.word())) {
      throw std::invalid_argument("not a normal form of M_n");
    }
    return witness_mn(n, w.word());
  }

  WitnessPair unit_witness_mn(std::size_t n, Element const& w) {
    return unit_witness_mn(build_mn(n).system(), n, w);
  }

  std::optional<WitnessPair> unit_witness_search(RewritingSystem const& s,
                                                 WordView               w,
                                                 WitnessSearchLimits    limits) {
    Element start = normalize(s, w);
    if (start.is_zero()) {
      throw std::invalid_argument("zero has no unit witness");
    }

    struct Node {
      Element     state;
      std::size_t parent;
      bool        prepend;
      Letter      letter;
    };
    std::vector<Node>                        nodes;
    std::unordered_map<Element, std::size_t> seen;
    nodes.push_back({start, SIZE_MAX, false, 0});
    seen.emplace(start, 0);

    auto rebuild = [&nodes](std::size_t i) {
      WitnessPair out;
      for (; nodes[i].parent != SIZE_MAX; i = nodes[i].parent) {
        if (nodes[i].prepend) {
          out.x.push_back(nodes[i].letter);
        } else {
          out.y.push_back(nodes[i].letter);
        }
      }
      // Moves come back last-first: the last prepend is the leftmost letter of
      // x, the last append the rightmost letter of y.
      std::reverse(out.y.begin(), out.y.end());
      return out;
    };

    if (start.is_identity()) {
      return WitnessPair{};
    }
    auto const& precedence = s.alphabet().precedence();
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      Word const cur = nodes[head].state.word();
      for (bool prepend : {true, false}) {
        for (Letter g : precedence) {
          Word next = prepend ? concat(WordView(&g, 1), cur)
                              : concat(cur, WordView(&g, 1));
          Element e = normalize(s, next);
          if (e.is_zero() || e.word().size() > limits.max_len) {
            continue;
          }
          if (!seen.emplace(e, nodes.size()).second) {
            continue;
          }
          nodes.push_back({std::move(e), head, prepend, g});
          if (nodes.back().state.is_identity()) {
            return rebuild(nodes.size() - 1);
          }
          if (nodes.size() >= limits.max_nodes) {
            return std::nullopt;
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace srw
