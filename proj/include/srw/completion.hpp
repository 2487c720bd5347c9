// Critical pairs, local confluence and Knuth-Bendix completion for string
// rewriting systems with zero.
//
// Zero-valued reducts are joinable only with reducts whose normal form is also
// zero. This is what one gets by adjoining an explicit letter z with the
// absorption rules xz -> z, zx -> z, z -> 0, without enlarging the alphabet.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "srw/presentation.hpp"
#include "srw/rewriting.hpp"

namespace srw {

  enum class OverlapKind { suffix_prefix, containment };

  struct Overlap {
    std::size_t rule1;
    std::size_t rule2;
    OverlapKind kind;
    // Position of rule2's left-hand side inside `word`.
    std::size_t offset;
    Word        word;

    bool operator==(Overlap const&) const = default;
  };

  struct CriticalPair {
    Overlap source;
    Element left;   // overlap word rewritten by rule1
    Element right;  // overlap word rewritten by rule2
    // Common normal form when joinable.
    std::optional<Element> witness;

    bool joinable() const noexcept {
      return witness.has_value();
    }
  };

  // All suffix-prefix overlaps (over ordered pairs of rules, a rule with
  // itself included) and all proper containments, without duplicates.
  std::vector<Overlap> overlaps(RewritingSystem const& s);

  // Precondition: s.terminating().
  std::vector<CriticalPair> critical_pairs(RewritingSystem const& s);

  struct ConfluenceReport {
    bool                      locally_confluent = false;
    bool                      terminating       = false;
    std::size_t               critical_pair_count = 0;
    std::vector<CriticalPair> unresolved;

    bool complete() const noexcept {
      return locally_confluent && terminating;
    }
  };

  // Terminating systems are checked through their critical pairs; a
  // non-terminating system is reported as such without looking at pairs.
  ConfluenceReport check_local_confluence(RewritingSystem const& s);

  // {locallyConfluent, terminating, criticalPairCount,
  //  unresolved: [{rule1, rule2, overlapWord, left, right}]}
  nlohmann::json to_json(RewritingSystem const& s, ConfluenceReport const& r);

  struct CompletionLimits {
    std::size_t max_rules    = 500;
    std::size_t max_word_len = 64;
    std::size_t max_steps    = 100000;
  };

  struct Completed {
    RewritingSystem system;
    std::size_t     steps;
  };

  struct ResourceLimit {
    RewritingSystem system;
    std::size_t     unresolved;
    std::string     reason;
  };

  using CompletionOutcome = std::variant<Completed, ResourceLimit>;

  // Orients the relations, then repeatedly turns unresolved critical pairs into
  // new rules (FIFO by discovery) and inter-reduces, until every critical pair
  // joins or a limit is hit. Throws UnorientableRelation if 1 = 0 is derived.
  CompletionOutcome knuth_bendix(Presentation const&  p,
                                 ShortlexOrder const& order,
                                 CompletionLimits     limits = {});

}  // namespace srw
