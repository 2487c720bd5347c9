#include "srw/rewriting.hpp"

#include <algorithm>
#include <stdexcept>

#include "srw/error.hpp"

namespace srw {

  namespace {
    std::vector<Word> lhs_list(std::vector<Rule> const& rules) {
      std::vector<Word> out;
      out.reserve(rules.size());
      for (auto const& r : rules) {
        out.push_back(r.lhs);
      }
      return out;
    }
  }  // namespace

  RewritingSystem::RewritingSystem(Alphabet          alphabet,
                                   std::vector<Rule> rules,
                                   kernels::Backend  backend)
      : alphabet_(std::move(alphabet)),
        order_(alphabet_),
        rules_(std::move(rules)),
        matcher_(alphabet_.size(), lhs_list(rules_), backend),
        terminating_(check_termination(*this, order_)) {
    for (auto const& r : rules_) {
      if (!r.rhs.is_zero()) {
        for (Letter x : r.rhs.word()) {
          if (x >= alphabet_.size()) {
            throw std::invalid_argument("rule letter outside alphabet");
          }
        }
      }
    }
  }

  std::string RewritingSystem::format_rule(std::size_t i) const {
    Rule const& r = rules_.at(i);
    return alphabet_.format(r.lhs) + " -> " + format(alphabet_, r.rhs);
  }

  RewritingSystem orient(Presentation const&       p,
                         ShortlexOrder const&      order,
                         std::vector<std::string>* warnings) {
    std::vector<Rule> rules;
    for (auto const& rel : p.relations) {
      Element lhs(rel.lhs);
      Element rhs = rel.rhs;
      if (lhs == rhs) {
        if (warnings != nullptr) {
          warnings->push_back("skipping trivial relation "
                              + p.alphabet.format(rel.lhs) + " = "
                              + format(p.alphabet, rel.rhs));
        }
        continue;
      }
      if (order.less(lhs, rhs)) {
        std::swap(lhs, rhs);
      }
      if (lhs.word().empty()) {
        throw UnorientableRelation("relation 1 = 0 cannot be oriented");
      }
      rules.push_back({lhs.word(), std::move(rhs)});
    }
    // Carry the order in the alphabet so the system orders words the same way.
    return RewritingSystem(reordered(p.alphabet, order),
                           std::move(rules));
  }

  bool check_termination(RewritingSystem const& s, ShortlexOrder const& order) {
    return std::all_of(s.rules().begin(), s.rules().end(), [&](Rule const& r) {
      return order.less(r.rhs, Element(r.lhs));
    });
  }

  std::optional<Redex> find_redex(RewritingSystem const& s,
                                  WordView               w,
                                  std::size_t            from) {
    if (auto m = s.matcher().find_leftmost(w, from)) {
      return Redex{m->pos, m->rule};
    }
    return std::nullopt;
  }

  Element apply_rule(RewritingSystem const& s, WordView w, Redex r) {
    Rule const& rule = s.rules().at(r.rule);
    if (rule.rhs.is_zero()) {
      return Element::zero();
    }
    return Element(concat(w.first(r.pos), rule.rhs.word(),
                          w.subspan(r.pos + rule.lhs.size())));
  }

  std::optional<Element> rewrite_step(RewritingSystem const& s, WordView w) {
    if (auto r = find_redex(s, w)) {
      return apply_rule(s, w, *r);
    }
    return std::nullopt;
  }

  Derivation derive(RewritingSystem const&     s,
                    WordView                   w,
                    std::optional<std::size_t> step_budget) {
    if (!s.terminating() && !step_budget) {
      throw std::logic_error(
          "normalizing with a non-terminating system requires a step budget");
    }
    Word        buf(w.begin(), w.end());
    std::size_t from  = 0;
    std::size_t steps = 0;
    std::size_t const window = s.max_lhs_length();
    while (auto m = s.matcher().find_leftmost(buf, from)) {
      if (step_budget && steps == *step_budget) {
        throw StepBudgetExceeded(*step_budget);
      }
      ++steps;
      Rule const& rule = s.rules()[m->rule];
      if (rule.rhs.is_zero()) {
        return {Element::zero(), steps};
      }
      Word const& rhs = rule.rhs.word();
      auto        at  = buf.begin() + static_cast<std::ptrdiff_t>(m->pos);
      if (rhs.size() <= rule.lhs.size()) {
        std::copy(rhs.begin(), rhs.end(), at);
        buf.erase(at + static_cast<std::ptrdiff_t>(rhs.size()),
                  at + static_cast<std::ptrdiff_t>(rule.lhs.size()));
      } else {
        buf.erase(at, at + static_cast<std::ptrdiff_t>(rule.lhs.size()));
        buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(m->pos), rhs.begin(),
                   rhs.end());
      }
      // A new redex must overlap the replaced segment.
      from = m->pos + 1 >= window ? m->pos + 1 - window : 0;
    }
    return {Element(std::move(buf)), steps};
  }

  Element normalize(RewritingSystem const&     s,
                    WordView                   w,
                    std::optional<std::size_t> step_budget) {
    return derive(s, w, step_budget).result;
  }

  Element normalize(RewritingSystem const& s, Element const& e) {
    return e.is_zero() ? e : normalize(s, e.word());
  }

  Element product(RewritingSystem const& s, Element const& x, Element const& y) {
    if (x.is_zero() || y.is_zero()) {
      return Element::zero();
    }
    return normalize(s, concat(x.word(), y.word()));
  }

  bool equal_in_monoid(RewritingSystem const& s, WordView u, WordView v) {
    return normalize(s, u) == normalize(s, v);
  }

  Presentation to_presentation(RewritingSystem const& s) {
    Presentation p{s.alphabet(), {}};
    for (auto const& r : s.rules()) {
      p.relations.push_back({r.lhs, r.rhs});
    }
    return p;
  }

}  // namespace srw
