#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "svb/errors.hpp"

namespace svb {

// Limits for the bounded equivalence searches.
//
// The length cap for intermediate words is max_len when nonzero, otherwise
// the longer of the two (reduced) endpoints plus slack. max_depth bounds the
// number of moves in a returned trace; zero means unbounded.
struct SearchBudget {
  std::size_t max_nodes = 200000;
  std::size_t slack = 4;
  std::size_t max_len = 0;
  std::size_t max_depth = 0;

  void validate() const {
    if (max_nodes == 0) throw DomainError("search budget needs a positive node limit");
  }

  std::size_t length_cap(std::size_t a, std::size_t b) const {
    if (max_len != 0) return max_len;
    return std::max(a, b) + slack;
  }
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t rounds = 0;
  std::size_t length_cap = 0;
  bool budget_exhausted = false;
};

// One rewrite: the letters `removed` starting at `position` are replaced by
// `inserted`. Steps carry their full payload so that a trace can be replayed
// and inverted without access to the rule set that produced it.
template <class Letter>
struct RewriteStep {
  std::string label;
  std::size_t position = 0;
  std::vector<Letter> removed;
  std::vector<Letter> inserted;

  RewriteStep inverted() const { return {label, position, inserted, removed}; }

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

template <class Letter>
std::vector<Letter> apply_step(const std::vector<Letter>& seq, const RewriteStep<Letter>& step) {
  if (step.position + step.removed.size() > seq.size() ||
      !std::equal(step.removed.begin(), step.removed.end(), seq.begin() + step.position)) {
    throw DomainError("rewrite step " + step.label + " does not apply at position " +
                      std::to_string(step.position));
  }
  std::vector<Letter> out;
  out.reserve(seq.size() - step.removed.size() + step.inserted.size());
  out.insert(out.end(), seq.begin(), seq.begin() + step.position);
  out.insert(out.end(), step.inserted.begin(), step.inserted.end());
  out.insert(out.end(), seq.begin() + step.position + step.removed.size(), seq.end());
  return out;
}

template <class Letter>
std::vector<Letter> replay(std::vector<Letter> seq, const std::vector<RewriteStep<Letter>>& trace) {
  for (const auto& step : trace) seq = apply_step(seq, step);
  return seq;
}

enum class VerdictKind { Equivalent, Distinct, Unknown };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::Distinct: return "distinct";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

struct DistinctWitness {
  std::string invariant;
  std::string first;
  std::string second;
};

template <class Letter>
struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<RewriteStep<Letter>> trace;  // Equivalent only
  DistinctWitness witness;                 // Distinct only
  SearchStats stats;

  static EquivalenceVerdict equivalent(std::vector<RewriteStep<Letter>> trace, SearchStats stats = {}) {
    return {VerdictKind::Equivalent, std::move(trace), {}, stats};
  }
  static EquivalenceVerdict distinct(DistinctWitness w) {
    return {VerdictKind::Distinct, {}, std::move(w), {}};
  }
  static EquivalenceVerdict unknown(SearchStats stats) {
    return {VerdictKind::Unknown, {}, {}, stats};
  }
};

namespace detail {

template <class Letter>
struct SequenceHash {
  std::size_t operator()(const std::vector<Letter>& seq) const noexcept {
    std::size_t h = 14695981039346656037ULL;
    for (const auto& x : seq) h = (h ^ std::hash<Letter>{}(x)) * 1099511628211ULL;
    return h;
  }
};

template <class Letter>
class SearchTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::vector<Letter> seq;
    std::size_t parent;
    RewriteStep<Letter> step;
    std::size_t depth;
  };

  explicit SearchTree(std::vector<Letter> root) {
    index_.emplace(root, 0);
    nodes_.push_back({std::move(root), npos, {}, 0});
    frontier_.push_back(0);
  }

  const std::vector<std::size_t>& frontier() const noexcept { return frontier_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::size_t find(const std::vector<Letter>& seq) const {
    auto it = index_.find(seq);
    return it == index_.end() ? npos : it->second;
  }

  // Expands the current frontier by one layer. Returns false when the shared
  // node budget runs out partway.
  template <class Expand>
  bool expand_layer(Expand& expand, std::size_t length_cap, std::size_t& node_count,
                    std::size_t max_nodes) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier_) {
      // Copy: nodes_ may reallocate while we append children.
      const std::vector<Letter> seq = nodes_[id].seq;
      const std::size_t depth = nodes_[id].depth;
      for (auto& step : expand(seq, length_cap)) {
        auto child = apply_step(seq, step);
        if (child.size() > length_cap || index_.count(child)) continue;
        if (node_count >= max_nodes) return false;
        ++node_count;
        index_.emplace(child, nodes_.size());
        next.push_back(nodes_.size());
        nodes_.push_back({std::move(child), id, std::move(step), depth + 1});
      }
    }
    frontier_ = std::move(next);
    return true;
  }

  // Steps from the root to node `id`.
  std::vector<RewriteStep<Letter>> path_to(std::size_t id) const {
    std::vector<RewriteStep<Letter>> out;
    for (; nodes_[id].parent != npos; id = nodes_[id].parent) out.push_back(nodes_[id].step);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::vector<Letter>, std::size_t, SequenceHash<Letter>> index_;
  std::vector<std::size_t> frontier_;
};

}  // namespace detail

// Bidirectional breadth-first search between two letter sequences.
//
// `expand(seq, cap)` returns the rewrite steps applicable to `seq`; children
// longer than `cap` are discarded. Both trees grow one layer per round and a
// meeting point is only looked for once a round is complete, so the outcome
// (found or not) does not depend on which endpoint is passed first.
template <class Letter, class Expand>
std::optional<std::vector<RewriteStep<Letter>>> bidirectional_search(
    const std::vector<Letter>& from, const std::vector<Letter>& to, Expand expand,
    const SearchBudget& budget, std::size_t length_cap, SearchStats& stats) {
  budget.validate();
  stats = {};
  stats.length_cap = length_cap;
  if (from == to) return std::vector<RewriteStep<Letter>>{};

  detail::SearchTree<Letter> forward(from);
  detail::SearchTree<Letter> backward(to);
  std::size_t node_count = 2;
  constexpr auto npos = detail::SearchTree<Letter>::npos;

  const std::size_t depth_limit =
      budget.max_depth == 0 ? std::numeric_limits<std::size_t>::max() : budget.max_depth;

  for (std::size_t round = 1;; ++round) {
    // Round r reaches depth r on each side; a path through a new node is at
    // least 2r - 1 moves long.
    if (2 * round - 1 > depth_limit) break;
    if (forward.frontier().empty() && backward.frontier().empty()) break;

    const std::size_t forward_old = forward.size();
    const std::size_t backward_old = backward.size();
    const bool ok = forward.expand_layer(expand, length_cap, node_count, budget.max_nodes) &&
                    backward.expand_layer(expand, length_cap, node_count, budget.max_nodes);
    stats.rounds = round;
    stats.nodes = node_count;
    if (!ok) {
      stats.budget_exhausted = true;
      return std::nullopt;
    }

    // Best meeting point: shortest total path, ties broken by forward order.
    std::size_t best_f = npos, best_b = npos;
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    const auto consider = [&](std::size_t f, std::size_t b) {
      const std::size_t len = forward.node(f).depth + backward.node(b).depth;
      if (len > depth_limit) return;
      if (len < best_len || (len == best_len && f < best_f)) {
        best_len = len;
        best_f = f;
        best_b = b;
      }
    };
    for (std::size_t f = forward_old; f < forward.size(); ++f) {
      if (auto b = backward.find(forward.node(f).seq); b != npos) consider(f, b);
    }
    for (std::size_t b = backward_old; b < backward.size(); ++b) {
      if (auto f = forward.find(backward.node(b).seq); f != npos) consider(f, b);
    }
    if (best_f != npos) {
      auto trace = forward.path_to(best_f);
      auto back = backward.path_to(best_b);
      for (auto it = back.rbegin(); it != back.rend(); ++it) trace.push_back(it->inverted());
      return trace;
    }
    if (forward.frontier().empty() || backward.frontier().empty()) break;
  }
  return std::nullopt;
}

}  // namespace svb
