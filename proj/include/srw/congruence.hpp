// Bounded-radius congruence probes.
//
// A probe starts from a seed pair (u, v) and closes the relation {(u, v)}
// under left and right multiplication by generators and transitivity, inside
// the ball of normal forms of length <= radius plus zero. Products that leave
// the ball are counted as truncations and never merged, so every "collapsed"
// verdict (1 ~ 0) is sound for the congruence generated by the seed.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "srw/rewriting.hpp"

namespace srw {

  // Normal forms of length <= radius, plus zero, with multiplication tables
  // for every generator. Immutable after construction, shared by probes.
  class BallIndex {
   public:
    static constexpr std::uint32_t kOutside = UINT32_MAX;

    // Precondition: s is complete.
    BallIndex(RewritingSystem const& s, std::size_t radius);

    RewritingSystem const& system() const noexcept {
      return *system_;
    }
    std::size_t radius() const noexcept {
      return radius_;
    }
    // Members including zero.
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::uint32_t identity_id() const noexcept {
      return 0;
    }
    std::uint32_t zero_id() const noexcept {
      return static_cast<std::uint32_t>(elements_.size() - 1);
    }
    Element const& element(std::uint32_t id) const {
      return elements_.at(id);
    }
    // Normalizes `e` first.
    std::optional<std::uint32_t> id_of(Element const& e) const;

    // g x and x g, or kOutside.
    std::uint32_t left(Letter g, std::uint32_t x) const noexcept {
      return left_[g * elements_.size() + x];
    }
    std::uint32_t right(std::uint32_t x, Letter g) const noexcept {
      return right_[g * elements_.size() + x];
    }

   private:
    RewritingSystem const*                          system_;
    std::size_t                                     radius_;
    std::vector<Element>                            elements_;
    std::unordered_map<Word, std::uint32_t, WordHash> ids_;
    std::vector<std::uint32_t>                      left_;
    std::vector<std::uint32_t>                      right_;
  };

  enum class MergeSide { seed, left, right };

  // One merge: (u, v) is the seed, or g u' ~ g v' (left) / u' g ~ v' g (right)
  // for the pair (u', v') of the step at `parent`.
  struct MergeStep {
    Element                    u;
    Element                    v;
    MergeSide                  side = MergeSide::seed;
    Letter                     generator = 0;
    std::optional<std::size_t> parent;
    // The step lies on the chain of merges joining 1 and 0.
    bool on_path = false;
  };

  struct ProbeLimits {
    std::size_t max_merges = SIZE_MAX;
  };

  // Union-find over a BallIndex, saturated under one-letter multiplication.
  class CongruenceBall {
   public:
    explicit CongruenceBall(BallIndex const& index);

    // Merges the seed and saturates. Returns true as soon as 1 ~ 0.
    bool saturate(std::uint32_t u, std::uint32_t v, ProbeLimits limits = {});

    bool same_class(std::uint32_t x, std::uint32_t y);
    bool collapsed() {
      return same_class(index_->identity_id(), index_->zero_id());
    }
    std::size_t class_count() const noexcept {
      return classes_;
    }
    std::size_t truncated() const noexcept {
      return truncated_;
    }
    std::size_t merges() const noexcept {
      return edges_.size();
    }
    bool hit_limit() const noexcept {
      return hit_limit_;
    }

    // The merges joining 1 and 0 together with all their ancestors, in
    // derivation order. Precondition: collapsed().
    std::vector<MergeStep> certificate() const;

   private:
    struct Edge {
      std::uint32_t a;
      std::uint32_t b;
      std::uint32_t parent;  // kNoParent for the seed
      MergeSide     side;
      Letter        generator;
    };
    static constexpr std::uint32_t kNoParent = UINT32_MAX;

    std::uint32_t find(std::uint32_t x);
    bool          unite(std::uint32_t a, std::uint32_t b);

    BallIndex const*           index_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<Edge>          edges_;
    std::size_t                classes_;
    std::size_t                truncated_ = 0;
    bool                       hit_limit_ = false;
  };

  struct Collapsed {
    std::vector<MergeStep> trace;
    std::size_t            path_length;
    std::size_t            truncated;
  };

  struct Undetermined {
    std::size_t class_count;
    std::size_t truncated;
    bool        hit_limit;
  };

  using ProbeResult = std::variant<Collapsed, Undetermined>;

  // Seeds must be distinct elements lying in the ball; throws
  // std::invalid_argument otherwise.
  ProbeResult probe_congruence(BallIndex const& ball,
                               Element const&   u,
                               Element const&   v,
                               ProbeLimits      limits = {});

  ProbeResult probe_congruence(RewritingSystem const& s,
                               Element const&         u,
                               Element const&         v,
                               std::size_t            radius,
                               ProbeLimits            limits = {});

  // Re-derives every step of `trace` by normalization alone and checks that
  // the steps marked on_path join 1 and 0.
  bool replay_trace(RewritingSystem const&        s,
                    Element const&                u,
                    Element const&                v,
                    std::vector<MergeStep> const& trace);

  enum class ProbeStatus { collapsed, undetermined };

  struct ProbeRecord {
    Element     u;
    Element     v;
    ProbeStatus status;
    std::size_t trace_length;  // merges in the certificate
    std::size_t truncated;
  };

  struct ProbeSummary {
    std::vector<ProbeRecord> records;  // ordered by |u| + |v|
    std::size_t              collapsed    = 0;
    std::size_t              undetermined = 0;
    std::size_t              worst_trace  = 0;
  };

  // Seeds: every unordered pair of distinct elements among the normal forms of
  // length <= max_seed_len and zero.
  std::vector<std::pair<Element, Element>> seed_pairs(RewritingSystem const& s,
                                                      std::size_t max_seed_len);

  ProbeSummary probe_all_pairs(BallIndex const& ball,
                               std::size_t      max_seed_len,
                               ProbeLimits      limits = {},
                               std::size_t      jobs   = 1);

  ProbeSummary probe_all_pairs(RewritingSystem const& s,
                               std::size_t            max_seed_len,
                               std::size_t            radius,
                               ProbeLimits            limits = {},
                               std::size_t            jobs   = 1);

}  // namespace srw
