#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/gauss.hpp"
#include "svb/relations.hpp"
#include "svb/search.hpp"

namespace svb {

using BraidVerdict = EquivalenceVerdict<Generator>;

// First invariant that separates u and v: theta, singularity count, degree,
// then the pair invariants of their Gauss diagrams.
inline std::optional<DistinctWitness> separating_invariant(const BraidWord& u, const BraidWord& v) {
  if (auto a = theta(u), b = theta(v); a != b) return DistinctWitness{"theta", a.to_string(), b.to_string()};
  if (auto a = singularity_count(u), b = singularity_count(v); a != b) {
    return DistinctWitness{"singularity_count", std::to_string(a), std::to_string(b)};
  }
  if (auto a = degree(u), b = degree(v); a != b) {
    return DistinctWitness{"degree", std::to_string(a), std::to_string(b)};
  }
  if (auto a = pair_invariants(gauss_of_braid(u)), b = pair_invariants(gauss_of_braid(v)); a != b) {
    return DistinctWitness{"pair_invariants", a.to_string(), b.to_string()};
  }
  return std::nullopt;
}

namespace detail {

inline void shift(BraidTrace& trace, std::size_t offset) {
  for (auto& step : trace) step.position += offset;
}

// Joins a to b by bounded search on the part where they differ: the common
// prefix and suffix are left alone, and the returned trace acts on a itself.
inline std::optional<BraidTrace> local_join(const std::vector<Generator>& a, const std::vector<Generator>& b,
                                            const std::vector<RelationInstance>& catalog,
                                            const SearchBudget& budget, SearchStats& stats) {
  std::size_t head = 0;
  while (head < a.size() && head < b.size() && a[head] == b[head]) ++head;
  std::size_t tail = 0;
  while (tail < a.size() - head && tail < b.size() - head && a[a.size() - 1 - tail] == b[b.size() - 1 - tail]) ++tail;
  const std::vector<Generator> x(a.begin() + static_cast<std::ptrdiff_t>(head),
                                 a.end() - static_cast<std::ptrdiff_t>(tail));
  const std::vector<Generator> y(b.begin() + static_cast<std::ptrdiff_t>(head),
                                 b.end() - static_cast<std::ptrdiff_t>(tail));
  if (x == y) return BraidTrace{};
  const auto expand = [&catalog](const std::vector<Generator>& seq, std::size_t cap) {
    return rewrite_moves(catalog, seq, cap);
  };
  SearchStats local;
  auto trace = bidirectional_search<Generator>(x, y, expand, budget, budget.length_cap(x.size(), y.size()), local);
  stats.nodes += local.nodes;
  stats.rounds += local.rounds;
  stats.length_cap = std::max(stats.length_cap, local.length_cap);
  stats.budget_exhausted = stats.budget_exhausted || local.budget_exhausted;
  if (trace) shift(*trace, head);
  return trace;
}

}  // namespace detail

// A trace from w to braid_of_gauss(gauss_of_braid(w)), built one letter at a
// time: with p the prefix read so far and x the next letter, the word
// B(G(p))·x·rest is joined to B(G(px))·rest. Both realizations share the
// routing of p's arrows, so each join is a search over a few letters.
// Returns nothing when some join exceeds the budget.
inline std::optional<BraidTrace> normalization_trace(const BraidWord& w, const SearchBudget& budget = {},
                                                     SearchStats* stats = nullptr) {
  budget.validate();
  const std::size_t n = w.strand_count();
  if (n < 2) return BraidTrace{};
  const auto catalog = relation_catalog(n);
  SearchStats local;
  BraidTrace trace;
  const auto& letters = w.letters();
  std::vector<Generator> prefix;
  std::vector<Generator> realized;  // B(G(prefix))
  for (std::size_t k = 0; k < letters.size(); ++k) {
    std::vector<Generator> from = realized;
    from.push_back(letters[k]);
    prefix.push_back(letters[k]);
    std::vector<Generator> to = braid_of_gauss(gauss_of_braid(BraidWord(n, prefix))).letters();
    auto step = detail::local_join(from, to, catalog, budget, local);
    if (!step) {
      if (stats) *stats = local;
      return std::nullopt;
    }
    trace.insert(trace.end(), step->begin(), step->end());
    realized = std::move(to);
  }
  if (stats) *stats = local;
  return trace;
}

// Semi-decision procedure for equality in SVB_n.
//
// Words with the same Gauss diagram are first joined through their common
// realization braid_of_gauss(G), see normalization_trace. Otherwise both
// words are freely reduced (R2/V3 deletions, recorded in the
// trace); the reduced words are then joined by bidirectional search over
// rewrite_moves with the length cap taken from the budget. A returned trace
// replays u onto v letter for letter.
inline BraidVerdict equivalent(const BraidWord& u, const BraidWord& v, const SearchBudget& budget = {}) {
  budget.validate();
  if (u.strand_count() != v.strand_count()) throw DomainError("strand counts differ");
  if (u == v) return BraidVerdict::equivalent({});
  if (auto witness = separating_invariant(u, v)) return BraidVerdict::distinct(*witness);

  SearchStats stats;
  if (gauss_of_braid(u) == gauss_of_braid(v)) {
    // Same diagram, hence the same realization B(G(u)) = B(G(v)).
    SearchStats su, sv;
    auto tu = normalization_trace(u, budget, &su);
    auto tv = tu ? normalization_trace(v, budget, &sv) : std::nullopt;
    stats.nodes = su.nodes + sv.nodes;
    if (tu && tv) {
      for (auto it = tv->rbegin(); it != tv->rend(); ++it) tu->push_back(it->inverted());
      return BraidVerdict::equivalent(std::move(*tu), stats);
    }
  }

  BraidTrace to_u, to_v;
  const BraidWord ru = free_reduce(u, &to_u);
  const BraidWord rv = free_reduce(v, &to_v);

  const auto splice = [&](BraidTrace middle) {
    BraidTrace trace = std::move(to_u);
    trace.insert(trace.end(), middle.begin(), middle.end());
    for (auto it = to_v.rbegin(); it != to_v.rend(); ++it) trace.push_back(it->inverted());
    return trace;
  };

  if (ru == rv) return BraidVerdict::equivalent(splice({}), stats);

  const auto catalog = relation_catalog(u.strand_count());
  const auto expand = [&catalog](const std::vector<Generator>& seq, std::size_t cap) {
    return rewrite_moves(catalog, seq, cap);
  };
  const std::size_t cap = budget.length_cap(ru.size(), rv.size());
  if (auto middle = bidirectional_search<Generator>(ru.letters(), rv.letters(), expand, budget, cap, stats)) {
    return BraidVerdict::equivalent(splice(std::move(*middle)), stats);
  }
  return BraidVerdict::unknown(stats);
}

inline BraidWord replay(const BraidWord& w, const BraidTrace& trace) {
  return BraidWord(w.strand_count(), replay(w.letters(), trace));
}

}  // namespace svb
