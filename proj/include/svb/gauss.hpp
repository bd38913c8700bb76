#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/permutation.hpp"
#include "svb/search.hpp"

namespace svb {

enum class ArrowKind : std::uint8_t { Pos, Neg, Sing };

// An arrow between two underlying intervals, named by the strand's starting
// slot. Signed arrows point from the over-strand to the under-strand; a
// singular arrow points from the strand in the upper slot of τᵢ to the one in
// the lower slot.
struct Arrow {
  int tail = 1;
  int head = 2;
  ArrowKind kind = ArrowKind::Pos;

  static constexpr Arrow pos(int t, int h) { return {t, h, ArrowKind::Pos}; }
  static constexpr Arrow neg(int t, int h) { return {t, h, ArrowKind::Neg}; }
  static constexpr Arrow sing(int t, int h) { return {t, h, ArrowKind::Sing}; }

  constexpr bool is_signed() const noexcept { return kind != ArrowKind::Sing; }
  constexpr int low() const noexcept { return std::min(tail, head); }
  constexpr int high() const noexcept { return std::max(tail, head); }
  constexpr bool touches(int strand) const noexcept { return tail == strand || head == strand; }
  constexpr bool disjoint(const Arrow& o) const noexcept {
    return !touches(o.tail) && !touches(o.head);
  }

  friend constexpr bool operator==(const Arrow&, const Arrow&) = default;
};

}  // namespace svb

template <>
struct std::hash<svb::Arrow> {
  std::size_t operator()(const svb::Arrow& a) const noexcept {
    return (static_cast<std::size_t>(a.tail) << 12) ^ (static_cast<std::size_t>(a.head) << 2) ^
           static_cast<std::size_t>(a.kind);
  }
};

namespace svb {

// Order used by canonical_form: (low strand, high strand, Pos < Neg < Sing, tail).
struct CanonicalArrowLess {
  bool operator()(const Arrow& a, const Arrow& b) const noexcept {
    return std::make_tuple(a.low(), a.high(), static_cast<int>(a.kind), a.tail) <
           std::make_tuple(b.low(), b.high(), static_cast<int>(b.kind), b.tail);
  }
};

inline std::string to_string(const Arrow& a) {
  std::ostringstream os;
  if (a.kind == ArrowKind::Sing) {
    os << "S(" << a.tail << ',' << a.head << ')';
  } else {
    os << "A(" << a.tail << ',' << a.head << ',' << (a.kind == ArrowKind::Pos ? '+' : '-') << ')';
  }
  return os.str();
}

inline std::string print_arrows(const std::vector<Arrow>& arrows) {
  if (arrows.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += ' ';
    out += to_string(arrows[i]);
  }
  return out;
}

// A singular horizontal Gauss diagram with its arrows sliced in time order.
class GaussWord {
 public:
  GaussWord() : GaussWord(2) {}

  explicit GaussWord(std::size_t n, std::vector<Arrow> arrows = {})
      : GaussWord(n, std::move(arrows), Permutation::identity(n)) {}

  GaussWord(std::size_t n, std::vector<Arrow> arrows, Permutation perm)
      : n_(n), arrows_(std::move(arrows)), perm_(std::move(perm)) {
    if (n_ < 1) throw DomainError("strand count must be positive");
    if (perm_.size() != n_) throw DomainError("permutation size differs from strand count");
    for (const auto& a : arrows_) {
      const int top = static_cast<int>(n_);
      if (a.tail < 1 || a.tail > top || a.head < 1 || a.head > top) {
        throw IndexError("arrow " + to_string(a) + " out of range for " + std::to_string(n_) +
                         " strands");
      }
      if (a.tail == a.head) throw DomainError("arrow " + to_string(a) + " joins a strand to itself");
    }
  }

  std::size_t strand_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Permutation& perm() const noexcept { return perm_; }

  friend bool operator==(const GaussWord& a, const GaussWord& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const GaussWord& a, const GaussWord& b) {
    const CanonicalArrowLess less;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
    return std::lexicographical_compare(a.arrows_.begin(), a.arrows_.end(), b.arrows_.begin(),
                                        b.arrows_.end(), less);
  }

 private:
  std::size_t n_;
  std::vector<Arrow> arrows_;
  Permutation perm_;
};

// Lexicographically least arrow sequence reachable by commuting adjacent
// arrows with disjoint supports. Greedy: repeatedly emit the smallest arrow
// that no earlier remaining arrow shares a strand with.
inline std::vector<Arrow> canonical_arrows(const std::vector<Arrow>& arrows) {
  const CanonicalArrowLess less;
  std::vector<Arrow> rest = arrows;
  std::vector<Arrow> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) free = rest[j].disjoint(rest[i]);
      if (free && less(rest[i], rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

inline GaussWord canonical_form(const GaussWord& g) {
  return GaussWord(g.strand_count(), canonical_arrows(g.arrows()), g.perm());
}

namespace detail {

constexpr ArrowKind opposite(ArrowKind k) noexcept {
  return k == ArrowKind::Pos ? ArrowKind::Neg : ArrowKind::Pos;
}

// (a→b, ε)(a→c, ε)(b→c, ε) with one common sign.
inline bool omega3_source(const Arrow& x, const Arrow& y, const Arrow& z) {
  return x.is_signed() && x.kind == y.kind && y.kind == z.kind && x.tail == y.tail &&
         x.head != y.head && z.tail == x.head && z.head == y.head;
}

// S(b→c) followed by two signed arrows of equal sign joining a third strand a
// to b and c. The third strand either passes over both (a is the tail) or
// under both (a is the head). The arrow met first is the one on c exactly
// when "positive" and "a over" agree.
inline bool s_omega3_source(const Arrow& s, const Arrow& x, const Arrow& y) {
  if (s.kind != ArrowKind::Sing || !x.is_signed() || x.kind != y.kind) return false;
  const int b = s.tail, c = s.head;
  const auto other = [](const Arrow& ar, int end) { return ar.tail == end ? ar.head : ar.tail; };
  for (const bool over : {true, false}) {
    const auto a_of = [&](const Arrow& ar) { return over ? ar.tail : ar.head; };
    const int a = a_of(x);
    if (a_of(y) != a || a == b || a == c) continue;
    const int first = other(x, a), second = other(y, a);
    const bool c_first = (x.kind == ArrowKind::Pos) == over;
    if (c_first ? (first == c && second == b) : (first == b && second == c)) return true;
  }
  return false;
}

// Adjacent signed/singular arrows on one strand pair that trade places, both
// reversing direction: opposite directions for a positive arrow, equal
// directions for a negative one.
inline bool s_omega2_pair(const Arrow& x, const Arrow& y) {
  const Arrow* s = x.kind == ArrowKind::Sing ? &x : (y.kind == ArrowKind::Sing ? &y : nullptr);
  const Arrow* a = x.is_signed() ? &x : (y.is_signed() ? &y : nullptr);
  if (!s || !a || s == a) return false;
  if (s->low() != a->low() || s->high() != a->high()) return false;
  const bool same_direction = s->tail == a->tail;
  return a->kind == ArrowKind::Pos ? !same_direction : same_direction;
}

constexpr Arrow flipped(const Arrow& a) noexcept { return {a.head, a.tail, a.kind}; }

}  // namespace detail

using GaussStep = RewriteStep<Arrow>;
using GaussTrace = std::vector<GaussStep>;

// Every single Ω-move (Ω2, Ω3, SΩ2, SΩ3) and disjoint commutation that
// applies to `arrows`, including Ω2 insertions of a cancelling pair at every
// gap. Results longer than max_len are dropped.
inline std::vector<GaussStep> omega_moves(const std::vector<Arrow>& arrows, std::size_t n,
                                          std::size_t max_len) {
  std::vector<GaussStep> out;
  const std::size_t len = arrows.size();
  const int top = static_cast<int>(n);

  for (std::size_t p = 0; p + 1 < len; ++p) {
    const Arrow& x = arrows[p];
    const Arrow& y = arrows[p + 1];
    if (x.is_signed() && y.tail == x.tail && y.head == x.head && y.kind == detail::opposite(x.kind)) {
      out.push_back({"omega2", p, {x, y}, {}});
    }
  }
  if (len + 2 <= max_len) {
    for (std::size_t p = 0; p <= len; ++p) {
      for (int t = 1; t <= top; ++t) {
        for (int h = 1; h <= top; ++h) {
          if (t == h) continue;
          for (const auto k : {ArrowKind::Pos, ArrowKind::Neg}) {
            out.push_back({"omega2", p, {}, {Arrow{t, h, k}, Arrow{t, h, detail::opposite(k)}}});
          }
        }
      }
    }
  }
  for (std::size_t p = 0; p + 2 < len; ++p) {
    const Arrow& x = arrows[p];
    const Arrow& y = arrows[p + 1];
    const Arrow& z = arrows[p + 2];
    if (detail::omega3_source(x, y, z) || detail::omega3_source(z, y, x)) {
      out.push_back({"omega3", p, {x, y, z}, {z, y, x}});
    }
    if (detail::s_omega3_source(x, y, z) || detail::s_omega3_source(z, y, x)) {
      out.push_back({"s_omega3", p, {x, y, z}, {z, y, x}});
    }
  }
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const Arrow& x = arrows[p];
    const Arrow& y = arrows[p + 1];
    if (detail::s_omega2_pair(x, y)) {
      out.push_back({"s_omega2", p, {x, y}, {detail::flipped(y), detail::flipped(x)}});
    }
    if (x.disjoint(y)) out.push_back({"commute", p, {x, y}, {y, x}});
  }
  return out;
}

inline std::set<GaussWord> omega_neighbors(const GaussWord& g, std::size_t max_len) {
  std::set<GaussWord> out;
  for (const auto& step : omega_moves(g.arrows(), g.strand_count(), max_len)) {
    auto next = apply_step(g.arrows(), step);
    if (next != g.arrows()) out.emplace(g.strand_count(), std::move(next), g.perm());
  }
  return out;
}

inline std::set<GaussWord> omega_neighbors(const GaussWord& g) {
  return omega_neighbors(g, g.arrows().size() + 2);
}

// Per unordered strand pair {i, j}: the signed count of classical arrows and
// the number of singular arrows joining i and j.
struct PairInvariant {
  struct Entry {
    int i;
    int j;
    int writhe;
    int sing_count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::size_t n = 0;
  std::vector<Entry> entries;  // all pairs i < j, lexicographic

  // Position of pair {i, j} in row-major order over i < j.
  std::size_t offset(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int N = static_cast<int>(n);
    return static_cast<std::size_t>((i - 1) * N - (i - 1) * i / 2 + (j - i - 1));
  }

  const Entry& at(int i, int j) const { return entries.at(offset(i, j)); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries) {
      if (e.writhe == 0 && e.sing_count == 0) continue;
      if (!first) os << ' ';
      first = false;
      os << '{' << e.i << ',' << e.j << "}:w=" << e.writhe << ",s=" << e.sing_count;
    }
    return first ? "0" : os.str();
  }

  friend bool operator==(const PairInvariant&, const PairInvariant&) = default;
};

inline PairInvariant pair_invariants(std::size_t n, const std::vector<Arrow>& arrows) {
  PairInvariant inv;
  inv.n = n;
  const int N = static_cast<int>(n);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) inv.entries.push_back({i, j, 0, 0});
  for (const auto& a : arrows) {
    auto& e = inv.entries.at(inv.offset(a.tail, a.head));
    switch (a.kind) {
      case ArrowKind::Pos: ++e.writhe; break;
      case ArrowKind::Neg: --e.writhe; break;
      case ArrowKind::Sing: ++e.sing_count; break;
    }
  }
  return inv;
}

inline PairInvariant pair_invariants(const GaussWord& g) {
  return pair_invariants(g.strand_count(), g.arrows());
}

// G(β): scan the word tracking which strand sits in each slot.
inline GaussWord gauss_of_braid(const BraidWord& w) {
  const std::size_t n = w.strand_count();
  std::vector<int> slots(n);
  for (std::size_t k = 0; k < n; ++k) slots[k] = static_cast<int>(k) + 1;
  std::vector<Arrow> arrows;
  for (const auto& g : w.letters()) {
    const int upper = slots[g.index - 1];
    const int lower = slots[g.index];
    switch (g.kind) {
      case GeneratorKind::ClassicalPos: arrows.push_back(Arrow::pos(upper, lower)); break;
      case GeneratorKind::ClassicalNeg: arrows.push_back(Arrow::neg(lower, upper)); break;
      case GeneratorKind::Singular: arrows.push_back(Arrow::sing(upper, lower)); break;
      case GeneratorKind::Virtual: break;
    }
    std::swap(slots[g.index - 1], slots[g.index]);
  }
  return GaussWord(n, std::move(arrows), theta(w));
}

namespace detail {

// Appends the ρ letters that carry the slot contents `slots` to `target`,
// filling target slots left to right by moving each strand leftward.
inline void route_virtually(std::vector<int>& slots, const std::vector<int>& target,
                            std::vector<Generator>& out) {
  for (std::size_t k = 0; k < slots.size(); ++k) {
    std::size_t p = k;
    while (slots[p] != target[k]) ++p;
    for (; p > k; --p) {
      out.push_back(Generator::rho(static_cast<int>(p)));
      std::swap(slots[p - 1], slots[p]);
    }
  }
}

}  // namespace detail

// B(g): realize each arrow as a crossing after bringing its head strand next
// to its tail strand with virtual crossings, then fix the endpoints with a
// final ρ-word. gauss_of_braid(braid_of_gauss(g)) == g exactly.
inline BraidWord braid_of_gauss(const GaussWord& g) {
  const std::size_t n = g.strand_count();
  std::vector<int> slots(n);
  for (std::size_t k = 0; k < n; ++k) slots[k] = static_cast<int>(k) + 1;
  const auto slot_of = [&](int strand) {
    return static_cast<int>(std::find(slots.begin(), slots.end(), strand) - slots.begin()) + 1;
  };
  const auto swap_slots = [&](int i, std::vector<Generator>& out) {
    out.push_back(Generator::rho(i));
    std::swap(slots[i - 1], slots[i]);
  };

  std::vector<Generator> letters;
  for (const auto& a : g.arrows()) {
    // Positive and singular arrows need the tail directly above the head;
    // negative arrows need it directly below.
    const bool tail_above = a.kind != ArrowKind::Neg;
    int h = slot_of(a.head);
    if (tail_above) {
      // Move the head up until it sits just below the tail, or down until it
      // passes the tail when it starts above it.
      while (h > slot_of(a.tail) + 1) { swap_slots(h - 1, letters); --h; }
      while (h < slot_of(a.tail)) { swap_slots(h, letters); ++h; }
    } else {
      while (h < slot_of(a.tail) - 1) { swap_slots(h, letters); ++h; }
      while (h > slot_of(a.tail)) { swap_slots(h - 1, letters); --h; }
    }
    const int i = tail_above ? slot_of(a.tail) : slot_of(a.head);
    switch (a.kind) {
      case ArrowKind::Pos: letters.push_back(Generator::sigma(i)); break;
      case ArrowKind::Neg: letters.push_back(Generator::sigma_inv(i)); break;
      case ArrowKind::Sing: letters.push_back(Generator::tau(i)); break;
    }
    std::swap(slots[i - 1], slots[i]);
  }
  detail::route_virtually(slots, g.perm().arrangement(), letters);
  return BraidWord(n, std::move(letters));
}

// Ω-equivalence of two diagrams: Distinct when the permutations or the pair
// invariants differ, Equivalent with a replayable move trace when the
// bidirectional search meets, Unknown otherwise.
inline EquivalenceVerdict<Arrow> omega_equivalent(const GaussWord& g, const GaussWord& h,
                                                  const SearchBudget& budget = {}) {
  budget.validate();
  if (g.strand_count() != h.strand_count()) throw DomainError("strand counts differ");
  if (g.perm() != h.perm()) {
    return EquivalenceVerdict<Arrow>::distinct({"perm", g.perm().to_string(), h.perm().to_string()});
  }
  const auto pg = pair_invariants(g);
  const auto ph = pair_invariants(h);
  if (pg != ph) return EquivalenceVerdict<Arrow>::distinct({"pair_invariants", pg.to_string(), ph.to_string()});

  const std::size_t n = g.strand_count();
  const auto expand = [n](const std::vector<Arrow>& seq, std::size_t cap) { return omega_moves(seq, n, cap); };
  SearchStats stats;
  const std::size_t cap = budget.length_cap(g.arrows().size(), h.arrows().size());
  if (auto trace = bidirectional_search<Arrow>(g.arrows(), h.arrows(), expand, budget, cap, stats)) {
    return EquivalenceVerdict<Arrow>::equivalent(std::move(*trace), stats);
  }
  return EquivalenceVerdict<Arrow>::unknown(stats);
}

inline std::string to_string(const GaussStep& step) {
  return step.label + "@" + std::to_string(step.position) + " [" + print_arrows(step.removed) +
         " -> " + print_arrows(step.inserted) + "]";
}

}  // namespace svb
