#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/equivalence.hpp"
#include "svb/gauss.hpp"
#include "svb/permutation.hpp"
#include "svb/relations.hpp"

namespace svb {

// Generators of the pure monoid SVP_n: X^{±}_{i,j} for a classical arrow from
// strand i to strand j, Y_{i,j} for a singular one.
struct PureGenerator {
  enum class Kind : std::uint8_t { X, Y };

  Kind kind = Kind::X;
  int sign = 1;  // ±1 for X, always +1 for Y
  int i = 1;
  int j = 2;

  static constexpr PureGenerator x(int i, int j, int sign = 1) { return {Kind::X, sign, i, j}; }
  static constexpr PureGenerator y(int i, int j) { return {Kind::Y, 1, i, j}; }

  Arrow arrow() const {
    if (kind == Kind::Y) return Arrow::sing(i, j);
    return sign > 0 ? Arrow::pos(i, j) : Arrow::neg(i, j);
  }

  static PureGenerator from_arrow(const Arrow& a) {
    switch (a.kind) {
      case ArrowKind::Pos: return x(a.tail, a.head, 1);
      case ArrowKind::Neg: return x(a.tail, a.head, -1);
      case ArrowKind::Sing: return y(a.tail, a.head);
    }
    return {};
  }

  friend bool operator==(const PureGenerator&, const PureGenerator&) = default;
};

inline std::string to_string(const PureGenerator& g) {
  std::ostringstream os;
  if (g.kind == PureGenerator::Kind::Y) {
    os << 'Y';
  } else {
    os << 'X' << (g.sign > 0 ? '+' : '-');
  }
  os << g.i << ',' << g.j;
  return os.str();
}

class PureWord {
 public:
  explicit PureWord(std::size_t n = 2, std::vector<PureGenerator> letters = {})
      : n_(n), letters_(std::move(letters)) {
    const int top = static_cast<int>(n_);
    for (const auto& g : letters_) {
      if (g.i < 1 || g.i > top || g.j < 1 || g.j > top || g.i == g.j) {
        throw IndexError("pure generator " + to_string(g) + " invalid for " + std::to_string(n_) + " strands");
      }
      if (g.kind == PureGenerator::Kind::X && g.sign != 1 && g.sign != -1) {
        throw DomainError("X generator sign must be +1 or -1");
      }
    }
  }

  std::size_t strand_count() const noexcept { return n_; }
  const std::vector<PureGenerator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const PureWord&, const PureWord&) = default;

 private:
  std::size_t n_;
  std::vector<PureGenerator> letters_;
};

// Text form: "X+i,j", "X-i,j", "Yi,j" separated by spaces; "e" when empty.
inline std::string print_pure_word(const PureWord& p) {
  if (p.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ' ';
    out += to_string(p.letters()[k]);
  }
  return out;
}

inline PureWord parse_pure_word(std::string_view text, std::size_t n) {
  std::vector<PureGenerator> letters;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  const auto number = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    int v = 0;
    if (pos == start || std::from_chars(text.data() + start, text.data() + pos, v).ec != std::errc{}) {
      throw ParseError("expected strand index", start);
    }
    return v;
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("unexpected text after \"e\"", pos);
    return PureWord(n);
  }
  if (pos == text.size()) throw ParseError("empty pure word (use \"e\")", pos);
  while (pos < text.size()) {
    PureGenerator g;
    if (text[pos] == 'X') {
      ++pos;
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) throw ParseError("expected sign after X", pos);
      g.kind = PureGenerator::Kind::X;
      g.sign = text[pos] == '+' ? 1 : -1;
      ++pos;
    } else if (text[pos] == 'Y') {
      ++pos;
      g.kind = PureGenerator::Kind::Y;
    } else {
      throw ParseError("expected 'X' or 'Y'", pos);
    }
    g.i = number();
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    g.j = number();
    letters.push_back(g);
    if (pos < text.size() && text[pos] != ' ') throw ParseError("expected space between tokens", pos);
    skip();
  }
  return PureWord(n, std::move(letters));
}

// The braid word of the one-arrow diagram for g with identity permutation.
inline BraidWord embed_pure_generator(std::size_t n, const PureGenerator& g) {
  return braid_of_gauss(GaussWord(n, {g.arrow()}));
}

inline BraidWord embed_pure_word(const PureWord& p) {
  BraidWord out(p.strand_count());
  for (const auto& g : p.letters()) out *= embed_pure_generator(p.strand_count(), g);
  return out;
}

// Section S_n -> SVB_n through ρ letters: bubble the strand that must end in
// slot 1 leftward, then slot 2, and so on.
inline BraidWord tau_of_permutation(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<int> slots(n);
  for (std::size_t k = 0; k < n; ++k) slots[k] = static_cast<int>(k) + 1;
  std::vector<Generator> letters;
  detail::route_virtually(slots, pi.arrangement(), letters);
  return BraidWord(n, std::move(letters));
}

// Element of SVP_n ⋊ S_n.
struct SemidirectPair {
  PureWord pure;
  Permutation perm;

  friend bool operator==(const SemidirectPair&, const SemidirectPair&) = default;
};

// Relabels every letter's strands through `relabel` (strand k becomes relabel[k-1]).
inline PureWord relabel(const PureWord& p, const std::vector<int>& relabel) {
  std::vector<PureGenerator> out = p.letters();
  for (auto& g : out) {
    g.i = relabel.at(static_cast<std::size_t>(g.i - 1));
    g.j = relabel.at(static_cast<std::size_t>(g.j - 1));
  }
  return PureWord(p.strand_count(), std::move(out));
}

// Action of S_n on SVP_n. A pure word that follows a permutation sees in its
// slot k the strand that π brought there, so its letters are renamed through
// the slot contents π.arrangement() (which is π itself for a transposition).
inline PureWord act(const Permutation& pi, const PureWord& p) { return relabel(p, pi.arrangement()); }

inline SemidirectPair semidirect_multiply(const SemidirectPair& a, const SemidirectPair& b) {
  if (a.pure.strand_count() != b.pure.strand_count()) throw DomainError("strand counts differ");
  std::vector<PureGenerator> letters = a.pure.letters();
  const auto moved = act(a.perm, b.pure);
  letters.insert(letters.end(), moved.letters().begin(), moved.letters().end());
  return {PureWord(a.pure.strand_count(), std::move(letters)), a.perm.then(b.perm)};
}

inline SemidirectPair decompose(const BraidWord& w) {
  const auto g = gauss_of_braid(w);
  std::vector<PureGenerator> letters;
  letters.reserve(g.arrows().size());
  for (const auto& a : g.arrows()) letters.push_back(PureGenerator::from_arrow(a));
  return {PureWord(w.strand_count(), std::move(letters)), g.perm()};
}

inline BraidWord reassemble(const SemidirectPair& pair) {
  return embed_pure_word(pair.pure) * tau_of_permutation(pair.perm);
}

// One instance of the SVP_n relations, both sides as pure words.
struct SpInstance {
  std::string label;
  PureWord lhs;
  PureWord rhs;
};

// All instances of SP1-SP5 at strand count n.
//
// SP4 and SP5 are sign-dependent: for ε = +1 they read
//   Y_{i,j} X_{j,i} = X_{i,j} Y_{j,i},   Y_{j,k} X_{i,k} X_{i,j} = X_{i,j} X_{i,k} Y_{j,k},
// and the ε = -1 instances are the ones obtained from these by multiplying by
// inverses:
//   Y_{i,j} X⁻_{i,j} = X⁻_{j,i} Y_{j,i},   Y_{j,k} X⁻_{i,j} X⁻_{i,k} = X⁻_{i,k} X⁻_{i,j} Y_{j,k}.
inline std::vector<SpInstance> sp_relation_instances(std::size_t n) {
  using P = PureGenerator;
  std::vector<SpInstance> out;
  const int N = static_cast<int>(n);
  const auto sign_tag = [](int e) { return e > 0 ? std::string("+") : std::string("-"); };
  const auto add = [&](std::string label, std::vector<P> lhs, std::vector<P> rhs) {
    out.push_back({std::move(label), PureWord(n, std::move(lhs)), PureWord(n, std::move(rhs))});
  };
  const auto tag = [](std::initializer_list<int> idx) {
    std::string s;
    for (int v : idx) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
  };

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      for (int e : {1, -1}) {
        add("SP1[" + tag({i, j}) + "," + sign_tag(e) + "]", {P::x(i, j, e), P::x(i, j, -e)}, {});
        if (e > 0) {
          add("SP4[" + tag({i, j}) + ",+]", {P::y(i, j), P::x(j, i, 1)}, {P::x(i, j, 1), P::y(j, i)});
        } else {
          add("SP4[" + tag({i, j}) + ",-]", {P::y(i, j), P::x(i, j, -1)}, {P::x(j, i, -1), P::y(j, i)});
        }
      }
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k) {
        if (i == j || j == k || i == k) continue;
        for (int e : {1, -1}) {
          add("SP2[" + tag({i, j, k}) + "," + sign_tag(e) + "]", {P::x(i, j, e), P::x(i, k, e), P::x(j, k, e)},
              {P::x(j, k, e), P::x(i, k, e), P::x(i, j, e)});
          if (e > 0) {
            add("SP5[" + tag({i, j, k}) + ",+]", {P::y(j, k), P::x(i, k, 1), P::x(i, j, 1)},
                {P::x(i, j, 1), P::x(i, k, 1), P::y(j, k)});
          } else {
            add("SP5[" + tag({i, j, k}) + ",-]", {P::y(j, k), P::x(i, j, -1), P::x(i, k, -1)},
                {P::x(i, k, -1), P::x(i, j, -1), P::y(j, k)});
          }
        }
      }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const std::string idx = tag({i, j, k, l});
          for (int e : {1, -1})
            for (int f : {1, -1}) {
              add("SP3[XX," + idx + "," + sign_tag(e) + sign_tag(f) + "]", {P::x(i, j, e), P::x(k, l, f)},
                  {P::x(k, l, f), P::x(i, j, e)});
            }
          add("SP3[YY," + idx + "]", {P::y(i, j), P::y(k, l)}, {P::y(k, l), P::y(i, j)});
          for (int e : {1, -1}) {
            add("SP3[XY," + idx + "," + sign_tag(e) + "]", {P::x(i, j, e), P::y(k, l)}, {P::y(k, l), P::x(i, j, e)});
          }
        }
  std::sort(out.begin(), out.end(), [](const SpInstance& a, const SpInstance& b) { return a.label < b.label; });
  return out;
}

struct SpCheck {
  std::string label;
  PureWord lhs;
  PureWord rhs;
  VerdictKind verdict;
  std::size_t trace_length;
};

struct SpReport {
  std::vector<SpCheck> checks;  // sorted by label

  bool all_equivalent() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const SpCheck& c) { return c.verdict == VerdictKind::Equivalent; });
  }
};

// Embeds both sides of every SP instance and asks for Ω-equivalence of their
// Gauss diagrams. Anything other than Equivalent counts as a failure.
inline SpReport verify_sp_relations(std::size_t n, const SearchBudget& budget = {}) {
  if (n < 2) throw DomainError("need at least 2 strands");
  SpReport report;
  for (auto& inst : sp_relation_instances(n)) {
    const auto gl = gauss_of_braid(embed_pure_word(inst.lhs));
    const auto gr = gauss_of_braid(embed_pure_word(inst.rhs));
    const auto verdict = omega_equivalent(gl, gr, budget);
    report.checks.push_back({inst.label, inst.lhs, inst.rhs, verdict.kind, verdict.trace.size()});
  }
  return report;
}

// Image of w under SVB_n -> M_v ⋊ VB_n: the k-th τ is conjugated by the
// non-singular prefix in front of it, and the non-singular letters form the
// VB_n part.
struct SingularFactorization {
  struct ConjugatedTau {
    BraidWord conjugator;
    int index;
  };

  std::vector<ConjugatedTau> conjugated_taus;
  BraidWord virtual_part;
};

inline SingularFactorization factor_singular(const BraidWord& w) {
  SingularFactorization out;
  std::vector<Generator> prefix;
  for (const auto& g : w.letters()) {
    if (g.is_singular()) {
      out.conjugated_taus.push_back({BraidWord(w.strand_count(), prefix), g.index});
    } else {
      prefix.push_back(g);
    }
  }
  out.virtual_part = BraidWord(w.strand_count(), std::move(prefix));
  return out;
}

// ∏ cₖ τ_{iₖ} cₖ⁻¹ · virtual_part.
inline BraidWord reassemble(const SingularFactorization& f) {
  BraidWord out(f.virtual_part.strand_count());
  for (const auto& ct : f.conjugated_taus) {
    out *= ct.conjugator;
    out.push_back(Generator::tau(ct.index));
    out *= invert_word(ct.conjugator);
  }
  return out * f.virtual_part;
}

}  // namespace svb
