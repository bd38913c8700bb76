#pragma once

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/search.hpp"

namespace svb {

// One defining relation lhs = rhs of SVB_n, tagged with its family.
struct RelationInstance {
  std::string family;
  BraidWord lhs;
  BraidWord rhs;

  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

using BraidStep = RewriteStep<Generator>;
using BraidTrace = std::vector<BraidStep>;

// Every instance of the fourteen relation families at strand count n, grouped
// by family label in lexicographic order (R0, R2, R3, S1..S4, SV1, SV2,
// V1..V5). Within a family, instances are ordered by their indices.
inline std::vector<RelationInstance> relation_catalog(std::size_t n) {
  if (n < 2) throw DomainError("relation catalog needs at least 2 strands");
  const int top = static_cast<int>(n) - 1;
  using G = Generator;
  std::vector<RelationInstance> out;
  const auto add = [&](const char* family, std::vector<G> lhs, std::vector<G> rhs) {
    out.push_back({family, BraidWord(n, std::move(lhs)), BraidWord(n, std::move(rhs))});
  };
  const auto far = [](int i, int j) { return std::abs(i - j) >= 2; };

  for (int i = 1; i <= top; ++i)
    for (int j = i + 2; j <= top; ++j) add("R0", {G::sigma(i), G::sigma(j)}, {G::sigma(j), G::sigma(i)});
  for (int i = 1; i <= top; ++i) {
    add("R2", {G::sigma(i), G::sigma_inv(i)}, {});
    add("R2", {G::sigma_inv(i), G::sigma(i)}, {});
  }
  for (int i = 1; i + 1 <= top; ++i)
    add("R3", {G::sigma(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)});
  for (int i = 1; i <= top; ++i)
    for (int j = i + 2; j <= top; ++j) add("S1", {G::tau(i), G::tau(j)}, {G::tau(j), G::tau(i)});
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j)
      if (far(i, j)) add("S2", {G::tau(i), G::sigma(j)}, {G::sigma(j), G::tau(i)});
  for (int i = 1; i <= top; ++i) add("S3", {G::tau(i), G::sigma(i)}, {G::sigma(i), G::tau(i)});
  for (int i = 1; i + 1 <= top; ++i)
    add("S4", {G::sigma(i), G::sigma(i + 1), G::tau(i)}, {G::tau(i + 1), G::sigma(i), G::sigma(i + 1)});
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j)
      if (far(i, j)) add("SV1", {G::rho(i), G::tau(j)}, {G::tau(j), G::rho(i)});
  for (int i = 1; i + 1 <= top; ++i)
    add("SV2", {G::rho(i), G::tau(i + 1), G::rho(i)}, {G::rho(i + 1), G::tau(i), G::rho(i + 1)});
  for (int i = 1; i <= top; ++i)
    for (int j = i + 2; j <= top; ++j) add("V1", {G::rho(i), G::rho(j)}, {G::rho(j), G::rho(i)});
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j)
      if (far(i, j)) add("V2", {G::sigma(i), G::rho(j)}, {G::rho(j), G::sigma(i)});
  for (int i = 1; i <= top; ++i) add("V3", {G::rho(i), G::rho(i)}, {});
  for (int i = 1; i + 1 <= top; ++i)
    add("V4", {G::rho(i), G::rho(i + 1), G::rho(i)}, {G::rho(i + 1), G::rho(i), G::rho(i + 1)});
  for (int i = 1; i + 1 <= top; ++i)
    add("V5", {G::rho(i), G::sigma(i + 1), G::rho(i)}, {G::rho(i + 1), G::sigma(i), G::rho(i + 1)});
  return out;
}

// All single applications of a catalog relation, in either direction, at
// every position of `letters`. An empty side matches at every gap, which is
// how R2/V3 pairs get inserted. Results longer than max_len are dropped and
// steps that leave the word unchanged are skipped. Ordered by catalog
// position (family label), then direction, then position.
inline std::vector<BraidStep> rewrite_moves(const std::vector<RelationInstance>& catalog,
                                            const std::vector<Generator>& letters,
                                            std::size_t max_len) {
  std::vector<BraidStep> out;
  for (const auto& rel : catalog) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto& from = dir == 0 ? rel.lhs.letters() : rel.rhs.letters();
      const auto& to = dir == 0 ? rel.rhs.letters() : rel.lhs.letters();
      if (from == to) continue;
      if (from.size() > letters.size()) continue;
      if (letters.size() - from.size() + to.size() > max_len) continue;
      for (std::size_t p = 0; p + from.size() <= letters.size(); ++p) {
        if (std::equal(from.begin(), from.end(), letters.begin() + p)) {
          out.push_back({rel.family, p, from, to});
        }
      }
    }
  }
  return out;
}

inline std::set<BraidWord> rewrite_neighbors(const BraidWord& w, std::size_t max_len) {
  std::set<BraidWord> out;
  const auto catalog = relation_catalog(w.strand_count());
  for (const auto& step : rewrite_moves(catalog, w.letters(), max_len)) {
    auto next = apply_step(w.letters(), step);
    if (next.size() > max_len || next == w.letters()) continue;
    out.emplace(w.strand_count(), std::move(next));
  }
  return out;
}

// Deletes adjacent σσ⁻¹, σ⁻¹σ and ρρ pairs, leftmost first, until none remain.
// The returned trace consists of R2/V3 deletions and replays w onto the result.
inline BraidWord free_reduce(const BraidWord& w, BraidTrace* trace = nullptr) {
  std::vector<Generator> letters = w.letters();
  std::size_t p = 0;
  while (p + 1 < letters.size()) {
    if (cancels(letters[p], letters[p + 1])) {
      if (trace) {
        trace->push_back({letters[p].is_virtual() ? "V3" : "R2", p,
                          {letters[p], letters[p + 1]}, {}});
      }
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(p),
                    letters.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      if (p > 0) --p;
    } else {
      ++p;
    }
  }
  return BraidWord(w.strand_count(), std::move(letters));
}

// Inverse of a word without singular letters.
inline BraidWord invert_word(const BraidWord& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->is_singular()) throw DomainError("words containing singular letters have no inverse");
    out.push_back(it->inverse());
  }
  return BraidWord(w.strand_count(), std::move(out));
}

inline std::string to_string(const BraidStep& step) {
  return step.label + "@" + std::to_string(step.position) + " [" + print_word(step.removed) +
         " -> " + print_word(step.inserted) + "]";
}

}  // namespace svb
