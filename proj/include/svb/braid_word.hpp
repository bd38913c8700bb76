#pragma once

#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svb/errors.hpp"
#include "svb/permutation.hpp"

namespace svb {

enum class GeneratorKind : std::uint8_t { ClassicalPos, ClassicalNeg, Virtual, Singular };

// One letter of a singular virtual braid word. Indices are 1-based: the
// letter acts on slots index and index + 1.
struct Generator {
  GeneratorKind kind = GeneratorKind::ClassicalPos;
  int index = 1;

  static constexpr Generator sigma(int i) { return {GeneratorKind::ClassicalPos, i}; }
  static constexpr Generator sigma_inv(int i) { return {GeneratorKind::ClassicalNeg, i}; }
  static constexpr Generator rho(int i) { return {GeneratorKind::Virtual, i}; }
  static constexpr Generator tau(int i) { return {GeneratorKind::Singular, i}; }

  constexpr bool is_classical() const noexcept {
    return kind == GeneratorKind::ClassicalPos || kind == GeneratorKind::ClassicalNeg;
  }
  constexpr bool is_singular() const noexcept { return kind == GeneratorKind::Singular; }
  constexpr bool is_virtual() const noexcept { return kind == GeneratorKind::Virtual; }

  // σ ↔ σ⁻¹, ρ self-inverse. τ has no inverse; callers must not ask.
  constexpr Generator inverse() const noexcept {
    switch (kind) {
      case GeneratorKind::ClassicalPos: return sigma_inv(index);
      case GeneratorKind::ClassicalNeg: return sigma(index);
      default: return *this;
    }
  }

  friend constexpr bool operator==(const Generator&, const Generator&) = default;
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

inline std::string to_string(const Generator& g) {
  std::string out;
  switch (g.kind) {
    case GeneratorKind::ClassicalPos:
    case GeneratorKind::ClassicalNeg: out = "s"; break;
    case GeneratorKind::Virtual: out = "r"; break;
    case GeneratorKind::Singular: out = "t"; break;
  }
  out += std::to_string(g.index);
  if (g.kind == GeneratorKind::ClassicalNeg) out += '\'';
  return out;
}

// A word over σᵢ^{±1}, ρᵢ, τᵢ on a fixed number of strands. The empty word is
// the identity of the monoid.
class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(std::size_t strand_count, std::vector<Generator> letters = {})
      : strand_count_(strand_count), letters_(std::move(letters)) {
    if (strand_count_ < 1) throw DomainError("strand count must be positive");
    for (const auto& g : letters_) check_index(g);
  }

  std::size_t strand_count() const noexcept { return strand_count_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Generator g) {
    check_index(g);
    letters_.push_back(g);
  }

  BraidWord& operator*=(const BraidWord& rhs) {
    if (rhs.strand_count_ != strand_count_) throw DomainError("strand counts differ");
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  void check_index(const Generator& g) const {
    if (g.index < 1 || g.index >= static_cast<int>(strand_count_)) {
      throw IndexError("generator " + to_string(g) + " out of range for " +
                       std::to_string(strand_count_) + " strands");
    }
  }

  std::size_t strand_count_ = 2;
  std::vector<Generator> letters_;
};

// Grammar:
//   word   := "e" | token (WS token)*
//   token  := ("s" | "r" | "t") DIGITS suffix?
//   suffix := "'" | "^-1"        (only after "s")
//   WS     := one or more spaces
// Leading and trailing spaces are ignored.
inline BraidWord parse_word(std::string_view text, std::size_t n) {
  if (n < 2) throw DomainError("strand count must be at least 2");

  std::size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };

  skip_spaces();
  if (pos == text.size()) throw ParseError("empty word (use \"e\")", pos);

  if (text[pos] == 'e') {
    ++pos;
    skip_spaces();
    if (pos != text.size()) throw ParseError("unexpected text after \"e\"", pos);
    return BraidWord(n);
  }

  std::vector<Generator> letters;
  while (pos < text.size()) {
    const std::size_t token_start = pos;
    GeneratorKind kind;
    switch (text[pos]) {
      case 's': kind = GeneratorKind::ClassicalPos; break;
      case 'r': kind = GeneratorKind::Virtual; break;
      case 't': kind = GeneratorKind::Singular; break;
      default: throw ParseError("expected one of 's', 'r', 't'", pos);
    }
    ++pos;

    const std::size_t digits_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_start) throw ParseError("expected generator index", pos);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + digits_start, text.data() + pos, index);
    if (ec != std::errc{}) throw ParseError("generator index too large", digits_start);

    if (pos < text.size() && (text[pos] == '\'' || text[pos] == '^')) {
      if (kind != GeneratorKind::ClassicalPos) {
        throw ParseError("inverse suffix is only allowed on 's' tokens", pos);
      }
      if (text[pos] == '\'') {
        ++pos;
      } else if (text.substr(pos, 3) == "^-1") {
        pos += 3;
      } else {
        throw ParseError("malformed inverse suffix (expected \"^-1\")", pos);
      }
      kind = GeneratorKind::ClassicalNeg;
    }

    if (index < 1 || index >= static_cast<int>(n)) {
      throw IndexError("token \"" + std::string(text.substr(token_start, pos - token_start)) +
                       "\" has index out of range for " + std::to_string(n) + " strands");
    }
    letters.push_back({kind, index});

    if (pos < text.size()) {
      if (text[pos] != ' ') throw ParseError("expected space between tokens", pos);
      skip_spaces();
    }
  }
  return BraidWord(n, std::move(letters));
}

inline std::string print_word(std::span<const Generator> letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += to_string(letters[i]);
  }
  return out;
}

inline std::string print_word(const BraidWord& w) { return print_word(w.letters()); }

inline Permutation theta(std::size_t n, std::span<const Generator> letters) {
  // Track slot contents directly, then read off where each strand ended.
  std::vector<int> slots(n);
  for (std::size_t k = 0; k < n; ++k) slots[k] = static_cast<int>(k) + 1;
  for (const auto& g : letters) std::swap(slots[g.index - 1], slots[g.index]);
  std::vector<int> images(n);
  for (std::size_t k = 0; k < n; ++k) images[slots[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(images));
}

inline Permutation theta(const BraidWord& w) { return theta(w.strand_count(), w.letters()); }

inline int degree(std::span<const Generator> letters) {
  int d = 0;
  for (const auto& g : letters) {
    if (g.kind == GeneratorKind::ClassicalPos) ++d;
    if (g.kind == GeneratorKind::ClassicalNeg) --d;
  }
  return d;
}

inline int degree(const BraidWord& w) { return degree(w.letters()); }

inline std::size_t singularity_count(std::span<const Generator> letters) {
  std::size_t d = 0;
  for (const auto& g : letters) d += g.is_singular() ? 1 : 0;
  return d;
}

inline std::size_t singularity_count(const BraidWord& w) { return singularity_count(w.letters()); }

// True when a·b cancels by R2 (σσ⁻¹, σ⁻¹σ) or V3 (ρρ).
inline bool cancels(const Generator& a, const Generator& b) noexcept {
  return a.index == b.index && !a.is_singular() && b == a.inverse();
}

}  // namespace svb

template <>
struct std::hash<svb::Generator> {
  std::size_t operator()(const svb::Generator& g) const noexcept {
    return (static_cast<std::size_t>(g.index) << 2) | static_cast<std::size_t>(g.kind);
  }
};

template <>
struct std::hash<svb::BraidWord> {
  std::size_t operator()(const svb::BraidWord& w) const noexcept {
    std::size_t h = w.strand_count();
    for (const auto& g : w.letters()) h = h * 1099511628211ULL ^ std::hash<svb::Generator>{}(g);
    return h;
  }
};
