#include "srw/completion.hpp"

#include <algorithm>
#include <deque>

#include "srw/error.hpp"

namespace srw {

  std::vector<Overlap> overlaps(RewritingSystem const& s) {
    std::vector<Overlap> out;
    auto const&          rules = s.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word const& l1 = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& l2 = rules[j].lhs;
        std::size_t kmax = std::min(l1.size(), l2.size());
        // A proper suffix of l1 of length k equal to a proper prefix of l2.
        for (std::size_t k = 1; k < kmax; ++k) {
          if (std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(),
                         l2.begin())) {
            Word w(l1);
            w.insert(w.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
            out.push_back({i, j, OverlapKind::suffix_prefix, l1.size() - k,
                           std::move(w)});
          }
        }
        // l2 inside l1. Identical left-hand sides count once, as (i, j) with
        // i < j.
        if (i == j || l2.size() > l1.size()
            || (l2.size() == l1.size() && i > j)) {
          continue;
        }
        for (std::size_t o = 0; o + l2.size() <= l1.size(); ++o) {
          if (std::equal(l2.begin(), l2.end(),
                         l1.begin() + static_cast<std::ptrdiff_t>(o))) {
            out.push_back({i, j, OverlapKind::containment, o, l1});
          }
        }
      }
    }
    return out;
  }

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& s) {
    std::vector<CriticalPair> out;
    for (auto& ov : overlaps(s)) {
      // rule1's lhs is a prefix of the overlap word for both kinds.
      Element left  = apply_rule(s, ov.word, Redex{0, ov.rule1});
      Element right = apply_rule(s, ov.word, Redex{ov.offset, ov.rule2});
      Element nl    = normalize(s, left);
      Element nr    = normalize(s, right);
      CriticalPair cp{std::move(ov), std::move(left), std::move(right), std::nullopt};
      if (nl == nr) {
        cp.witness = std::move(nl);
      }
      out.push_back(std::move(cp));
    }
    return out;
  }

  ConfluenceReport check_local_confluence(RewritingSystem const& s) {
    ConfluenceReport report;
    report.terminating = s.terminating();
    if (!report.terminating) {
      report.critical_pair_count = overlaps(s).size();
      return report;
    }
    auto pairs                 = critical_pairs(s);
    report.critical_pair_count = pairs.size();
    for (auto& cp : pairs) {
      if (!cp.joinable()) {
        report.unresolved.push_back(std::move(cp));
      }
    }
    report.locally_confluent = report.unresolved.empty();
    return report;
  }

  nlohmann::json to_json(RewritingSystem const& s, ConfluenceReport const& r) {
    auto const&    A = s.alphabet();
    nlohmann::json unresolved = nlohmann::json::array();
    for (auto const& cp : r.unresolved) {
      unresolved.push_back({{"rule1", cp.source.rule1},
                            {"rule2", cp.source.rule2},
                            {"overlapWord", A.format(cp.source.word)},
                            {"left", format(A, cp.left)},
                            {"right", format(A, cp.right)}});
    }
    return {{"locallyConfluent", r.locally_confluent},
            {"terminating", r.terminating},
            {"criticalPairCount", r.critical_pair_count},
            {"unresolved", std::move(unresolved)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Knuth-Bendix
  ////////////////////////////////////////////////////////////////////////

  CompletionOutcome knuth_bendix(Presentation const&  p,
                                 ShortlexOrder const& order,
                                 CompletionLimits     limits) {
    Alphabet const    alphabet = reordered(p.alphabet, order);
    std::vector<Rule> rules;
    RewritingSystem   sys(alphabet, rules);

    using Equation = std::pair<Element, Element>;
    std::deque<Equation> pending;
    for (auto const& rel : p.relations) {
      pending.emplace_back(Element(rel.lhs), rel.rhs);
    }

    std::size_t steps = 0;
    auto limit = [&](std::string reason) -> CompletionOutcome {
      return ResourceLimit{sys, pending.size(), std::move(reason)};
    };

    while (true) {
      while (!pending.empty()) {
        if (steps == limits.max_steps) {
          return limit("maxSteps");
        }
        ++steps;
        auto [u, v] = std::move(pending.front());
        pending.pop_front();
        Element nu = normalize(sys, u);
        Element nv = normalize(sys, v);
        if (nu == nv) {
          continue;
        }
        if (order.less(nu, nv)) {
          std::swap(nu, nv);
        }
        if (nu.word().empty()) {
          throw UnorientableRelation("completion derived 1 = 0");
        }
        if (nu.word().size() > limits.max_word_len) {
          pending.emplace_front(std::move(nu), std::move(nv));
          return limit("maxWordLen");
        }
        Word const& lhs = nu.word();
        // Rules whose lhs contains the new lhs go back on the queue.
        std::vector<Rule> kept;
        for (auto& r : rules) {
          if (contains_factor(r.lhs, lhs)) {
            pending.emplace_back(Element(r.lhs), r.rhs);
          } else {
            kept.push_back(std::move(r));
          }
        }
        kept.push_back({lhs, nv});
        RewritingSystem tmp(alphabet, kept);
        for (auto& r : kept) {
          r.rhs = normalize(tmp, r.rhs);
        }
        rules = std::move(kept);
        sys   = RewritingSystem(alphabet, rules);
        if (rules.size() > limits.max_rules) {
          return limit("maxRules");
        }
      }
      std::size_t unresolved = 0;
      for (auto& cp : critical_pairs(sys)) {
        if (!cp.joinable()) {
          pending.emplace_back(std::move(cp.left), std::move(cp.right));
          ++unresolved;
        }
      }
      if (unresolved == 0) {
        return Completed{sys, steps};
      }
    }
  }

}  // namespace srw
