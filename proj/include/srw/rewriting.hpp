// Oriented rewriting systems over a monoid with adjoined zero.
//
// Rules are l -> r with r a word or zero. Rewriting is deterministic: the
// leftmost redex wins, ties broken by longest left-hand side and then by the
// lowest rule index. A rule whose right-hand side is zero ends normalization
// immediately.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srw/matcher.hpp"
#include "srw/presentation.hpp"
#include "srw/word.hpp"

namespace srw {

  struct Rule {
    Word    lhs;
    Element rhs;

    bool operator==(Rule const&) const = default;
  };

  class RewritingSystem {
   public:
    // Throws std::invalid_argument if a left-hand side is empty or uses a
    // letter outside the alphabet.
    RewritingSystem(Alphabet          alphabet,
                    std::vector<Rule> rules,
                    kernels::Backend  backend = kernels::default_backend());

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    ShortlexOrder const& order() const noexcept {
      return order_;
    }
    std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }
    FactorMatcher const& matcher() const noexcept {
      return matcher_;
    }
    std::size_t max_lhs_length() const noexcept {
      return matcher_.max_pattern_length();
    }
    // Every rule decreases under the system's own shortlex order.
    bool terminating() const noexcept {
      return terminating_;
    }

    std::string format_rule(std::size_t i) const;

   private:
    Alphabet          alphabet_;
    ShortlexOrder     order_;
    std::vector<Rule> rules_;
    FactorMatcher     matcher_;
    bool              terminating_;
  };

  // Each relation becomes max -> min under `order`. Trivial relations u = u are
  // skipped and reported through `warnings`. Throws UnorientableRelation for
  // 1 = 0, which would need an empty left-hand side.
  RewritingSystem orient(Presentation const&       p,
                         ShortlexOrder const&      order,
                         std::vector<std::string>* warnings = nullptr);

  bool check_termination(RewritingSystem const& s, ShortlexOrder const& order);

  struct Redex {
    std::size_t pos;
    std::size_t rule;
  };

  std::optional<Redex> find_redex(RewritingSystem const& s,
                                  WordView               w,
                                  std::size_t            from = 0);

  // Replaces the redex in `w`; returns zero if the rule's rhs is zero.
  Element apply_rule(RewritingSystem const& s, WordView w, Redex r);

  // Applies one rule at the leftmost redex; nullopt if `w` is irreducible.
  std::optional<Element> rewrite_step(RewritingSystem const& s, WordView w);

  struct Derivation {
    Element     result;
    std::size_t steps = 0;
  };

  // Normalizes and counts rule applications. Systems that are not terminating
  // under their own order need an explicit `step_budget`; exceeding it throws
  // StepBudgetExceeded.
  Derivation derive(RewritingSystem const&     s,
                    WordView                   w,
                    std::optional<std::size_t> step_budget = std::nullopt);

  Element normalize(RewritingSystem const&     s,
                    WordView                   w,
                    std::optional<std::size_t> step_budget = std::nullopt);

  Element normalize(RewritingSystem const& s, Element const& e);

  Element product(RewritingSystem const& s, Element const& x, Element const& y);

  bool equal_in_monoid(RewritingSystem const& s, WordView u, WordView v);

  // Presentation whose relations are the rules of `s`.
  Presentation to_presentation(RewritingSystem const& s);

}  // namespace srw
