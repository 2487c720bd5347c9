#include "srw/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "parallel.hpp"
#include "srw/enumeration.hpp"

namespace srw {

  ////////////////////////////////////////////////////////////////////////
  // BallIndex
  ////////////////////////////////////////////////////////////////////////

  BallIndex::BallIndex(RewritingSystem const& s, std::size_t radius)
      : system_(&s), radius_(radius) {
    for (Word& w : enumerate_normal_forms(s, radius)) {
      ids_.emplace(w, static_cast<std::uint32_t>(elements_.size()));
      elements_.emplace_back(std::move(w));
    }
    elements_.push_back(Element::zero());

    std::size_t const n    = elements_.size();
    std::size_t const k    = s.alphabet().size();
    std::uint32_t const zero = zero_id();
    left_.assign(k * n, kOutside);
    right_.assign(k * n, kOutside);
    auto lookup = [&](Element const& e) -> std::uint32_t {
      if (e.is_zero()) {
        return zero;
      }
      auto it = ids_.find(e.word());
      return it == ids_.end() ? kOutside : it->second;
    };
    Word buf;
    for (std::size_t g = 0; g < k; ++g) {
      left_[g * n + zero]  = zero;
      right_[g * n + zero] = zero;
      for (std::uint32_t x = 0; x < zero; ++x) {
        Word const& w = elements_[x].word();
        buf.assign(1, static_cast<Letter>(g));
        buf.insert(buf.end(), w.begin(), w.end());
        left_[g * n + x] = lookup(normalize(s, buf));
        buf.assign(w.begin(), w.end());
        buf.push_back(static_cast<Letter>(g));
        right_[g * n + x] = lookup(normalize(s, buf));
      }
    }
  }

  std::optional<std::uint32_t> BallIndex::id_of(Element const& e) const {
    Element nf = normalize(*system_, e);
    if (nf.is_zero()) {
      return zero_id();
    }
    auto it = ids_.find(nf.word());
    if (it == ids_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // CongruenceBall
  ////////////////////////////////////////////////////////////////////////

  CongruenceBall::CongruenceBall(BallIndex const& index)
      : index_(&index),
        parent_(index.size()),
        size_(index.size(), 1),
        classes_(index.size()) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t CongruenceBall::find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool CongruenceBall::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    --classes_;
    return true;
  }

  bool CongruenceBall::same_class(std::uint32_t x, std::uint32_t y) {
    return find(x) == find(y);
  }

  bool CongruenceBall::saturate(std::uint32_t u, std::uint32_t v, ProbeLimits limits) {
    std::size_t head = edges_.size();
    if (unite(u, v)) {
      edges_.push_back({u, v, kNoParent, MergeSide::seed, 0});
    }
    if (collapsed()) {
      return true;
    }
    auto const& precedence = index_->system().alphabet().precedence();
    // edges_ doubles as the FIFO frontier.
    for (; head < edges_.size(); ++head) {
      Edge const e = edges_[head];
      for (MergeSide side : {MergeSide::left, MergeSide::right}) {
        for (Letter g : precedence) {
          std::uint32_t x = side == MergeSide::left ? index_->left(g, e.a)
                                                    : index_->right(e.a, g);
          std::uint32_t y = side == MergeSide::left ? index_->left(g, e.b)
                                                    : index_->right(e.b, g);
          if (x == y) {
            continue;
          }
          if (x == BallIndex::kOutside || y == BallIndex::kOutside) {
            ++truncated_;
            continue;
          }
          if (!unite(x, y)) {
            continue;
          }
          edges_.push_back({x, y, static_cast<std::uint32_t>(head), side, g});
          if (collapsed()) {
            return true;
          }
          if (edges_.size() >= limits.max_merges) {
            hit_limit_ = true;
            return false;
          }
        }
      }
    }
    return false;
  }

  std::vector<MergeStep> CongruenceBall::certificate() const {
    // Merge edges form a spanning forest; find the tree path from 1 to 0.
    std::uint32_t const one  = index_->identity_id();
    std::uint32_t const zero = index_->zero_id();
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> adj;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adj[edges_[i].a].push_back(i);
      adj[edges_[i].b].push_back(i);
    }
    std::unordered_map<std::uint32_t, std::size_t> via;  // node -> edge used
    std::queue<std::uint32_t>                      todo;
    via.emplace(one, SIZE_MAX);
    todo.push(one);
    while (!todo.empty() && !via.contains(zero)) {
      std::uint32_t x = todo.front();
      todo.pop();
      for (std::size_t i : adj[x]) {
        std::uint32_t y = edges_[i].a == x ? edges_[i].b : edges_[i].a;
        if (via.emplace(y, i).second) {
          todo.push(y);
        }
      }
    }
    if (!via.contains(zero)) {
      throw std::logic_error("certificate requested for a probe that did not collapse");
    }
    std::vector<bool> keep(edges_.size(), false), on_path(edges_.size(), false);
    for (std::uint32_t x = zero; x != one;) {
      std::size_t i = via.at(x);
      on_path[i]    = true;
      x             = edges_[i].a == x ? edges_[i].b : edges_[i].a;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (on_path[i]) {
        for (std::size_t j = i; j != kNoParent && !keep[j]; j = edges_[j].parent) {
          keep[j] = true;
        }
      }
    }
    std::vector<MergeStep>   out;
    std::vector<std::size_t> renumber(edges_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!keep[i]) {
        continue;
      }
      Edge const& e = edges_[i];
      MergeStep   step{index_->element(e.a), index_->element(e.b), e.side,
                     e.generator, std::nullopt, on_path[i]};
      if (e.parent != kNoParent) {
        step.parent = renumber[e.parent];
      }
      renumber[i] = out.size();
      out.push_back(std::move(step));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Probes
  ////////////////////////////////////////////////////////////////////////

  ProbeResult probe_congruence(BallIndex const& ball,
                               Element const&   u,
                               Element const&   v,
                               ProbeLimits      limits) {
    auto iu = ball.id_of(u);
    auto iv = ball.id_of(v);
    if (!iu || !iv) {
      throw std::invalid_argument("seed lies outside the ball");
    }
    if (*iu == *iv) {
      throw std::invalid_argument("seed elements are equal");
    }
    CongruenceBall cb(ball);
    if (cb.saturate(*iu, *iv, limits)) {
      auto        trace = cb.certificate();
      std::size_t path  = static_cast<std::size_t>(
          std::count_if(trace.begin(), trace.end(),
                        [](MergeStep const& s) { return s.on_path; }));
      return Collapsed{std::move(trace), path, cb.truncated()};
    }
    return Undetermined{cb.class_count(), cb.truncated(), cb.hit_limit()};
  }

  ProbeResult probe_congruence(RewritingSystem const& s,
                               Element const&         u,
                               Element const&         v,
                               std::size_t            radius,
                               ProbeLimits            limits) {
    BallIndex ball(s, radius);
    return probe_congruence(ball, u, v, limits);
  }

  bool replay_trace(RewritingSystem const&        s,
                    Element const&                u,
                    Element const&                v,
                    std::vector<MergeStep> const& trace) {
    Element const nu = normalize(s, u);
    Element const nv = normalize(s, v);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      MergeStep const& step = trace[i];
      if (step.side == MergeSide::seed) {
        bool same = (step.u == nu && step.v == nv) || (step.u == nv && step.v == nu);
        if (step.parent || !same) {
          return false;
        }
        continue;
      }
      if (!step.parent || *step.parent >= i) {
        return false;
      }
      MergeStep const& from = trace[*step.parent];
      Element const    g(Word{step.generator});
      Element eu = step.side == MergeSide::left ? product(s, g, from.u)
                                                : product(s, from.u, g);
      Element ev = step.side == MergeSide::left ? product(s, g, from.v)
                                                : product(s, from.v, g);
      if (eu != step.u || ev != step.v) {
        return false;
      }
    }
    // The on-path steps must chain 1 to 0.
    std::unordered_map<Element, std::vector<Element>> adj;
    for (auto const& step : trace) {
      if (step.on_path) {
        adj[step.u].push_back(step.v);
        adj[step.v].push_back(step.u);
      }
    }
    Element const                 one;
    std::vector<Element>          todo{one};
    std::unordered_map<Element, bool> seen{{one, true}};
    while (!todo.empty()) {
      Element x = std::move(todo.back());
      todo.pop_back();
      if (x.is_zero()) {
        return true;
      }
      for (auto const& y : adj[x]) {
        if (seen.emplace(y, true).second) {
          todo.push_back(y);
        }
      }
    }
    return false;
  }

  std::vector<std::pair<Element, Element>> seed_pairs(RewritingSystem const& s,
                                                      std::size_t max_seed_len) {
    std::vector<Element> elems;
    for (Word& w : enumerate_normal_forms(s, max_seed_len)) {
      elems.emplace_back(std::move(w));
    }
    elems.push_back(Element::zero());
    auto len = [](Element const& e) {
      return e.is_zero() ? std::size_t{0} : e.word().size();
    };
    std::vector<std::pair<Element, Element>> pairs;
    if (max_seed_len == 0) {
      // Only 1 and 0 would remain; a zero-length seed bound means no pairs.
      return pairs;
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        pairs.emplace_back(elems[i], elems[j]);
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto const& p, auto const& q) {
      return len(p.first) + len(p.second) < len(q.first) + len(q.second);
    });
    return pairs;
  }

  ProbeSummary probe_all_pairs(BallIndex const& ball,
                               std::size_t      max_seed_len,
                               ProbeLimits      limits,
                               std::size_t      jobs) {
    if (max_seed_len > ball.radius()) {
      throw std::invalid_argument("seed length exceeds probe radius");
    }
    auto         seeds = seed_pairs(ball.system(), max_seed_len);
    ProbeSummary summary;
    summary.records.resize(seeds.size());
    detail::parallel_for(seeds.size(), jobs, [&](std::size_t i) {
      auto const& [u, v] = seeds[i];
      ProbeResult r      = probe_congruence(ball, u, v, limits);
      ProbeRecord rec{u, v, ProbeStatus::undetermined, 0, 0};
      if (auto* c = std::get_if<Collapsed>(&r)) {
        rec.status       = ProbeStatus::collapsed;
        rec.trace_length = c->trace.size();
        rec.truncated    = c->truncated;
      } else {
        rec.truncated = std::get<Undetermined>(r).truncated;
      }
      summary.records[i] = std::move(rec);
    });
    for (auto const& rec : summary.records) {
      if (rec.status == ProbeStatus::collapsed) {
        ++summary.collapsed;
        summary.worst_trace = std::max(summary.worst_trace, rec.trace_length);
      } else {
        ++summary.undetermined;
      }
    }
    return summary;
  }

  ProbeSummary probe_all_pairs(RewritingSystem const& s,
                               std::size_t            max_seed_len,
                               std::size_t            radius,
                               ProbeLimits            limits,
                               std::size_t            jobs) {
    BallIndex ball(s, radius);
    return probe_all_pairs(ball, max_seed_len, limits, jobs);
  }

}  // namespace srw
