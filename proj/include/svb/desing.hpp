#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/relations.hpp"

namespace svb {

// An integer combination of virtual braid words. Keys are free words: no
// relation of VB_n is applied to them.
class FormalSum {
 public:
  void add(const BraidWord& word, long long coeff) {
    if (singularity_count(word) != 0) throw DomainError("formal sum terms must be free of singular letters");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  const std::map<BraidWord, long long>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  long long coefficient(const BraidWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? 0 : it->second;
  }

  // Terms ordered by the printed word, as used for serialization.
  std::vector<std::pair<std::string, long long>> sorted_by_text() const {
    std::vector<std::pair<std::string, long long>> out;
    for (const auto& [w, c] : terms_) out.emplace_back(print_word(w), c);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<BraidWord, long long> terms_;
};

struct SignedTerm {
  int sign;
  BraidWord word;
};

inline constexpr std::size_t kDefaultMaxSingularities = 20;

// The 2^d terms of η̂(w) before like terms are merged. Term t takes the
// negative branch at the k-th τ (counted from the left) when bit d-1-k of t
// is set, so the all-positive term comes first.
inline std::vector<SignedTerm> expand_eta_hat(const BraidWord& w,
                                              std::size_t max_singularities = kDefaultMaxSingularities) {
  const std::size_t d = singularity_count(w);
  if (d > max_singularities) {
    throw DomainError("word has " + std::to_string(d) + " singular letters; expansion is capped at " +
                      std::to_string(max_singularities));
  }
  std::vector<SignedTerm> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << d); ++t) {
    std::vector<Generator> letters;
    letters.reserve(w.size());
    std::size_t k = 0;
    for (const auto& g : w.letters()) {
      if (!g.is_singular()) {
        letters.push_back(g);
        continue;
      }
      const bool negative = (t >> (d - 1 - k)) & 1U;
      letters.push_back(negative ? Generator::sigma_inv(g.index) : Generator::sigma(g.index));
      ++k;
    }
    const int sign = (std::popcount(t) % 2 == 0) ? 1 : -1;
    out.push_back({sign, BraidWord(w.strand_count(), std::move(letters))});
  }
  return out;
}

// η̂: τᵢ ↦ σᵢ − σᵢ⁻¹, fixing σᵢ^{±1} and ρᵢ.
inline FormalSum eta_hat(const BraidWord& w, std::size_t max_singularities = kDefaultMaxSingularities) {
  FormalSum sum;
  for (const auto& term : expand_eta_hat(w, max_singularities)) sum.add(term.word, term.sign);
  return sum;
}

// η on the singular braid monoid: the restriction of η̂ to ρ-free words.
inline FormalSum eta(const BraidWord& w) {
  for (const auto& g : w.letters()) {
    if (g.is_virtual()) throw DomainError("eta is defined on words without virtual letters; got " + to_string(g));
  }
  return eta_hat(w);
}

// θ̂: τᵢ ↦ σᵢ.
inline BraidWord flatten(const BraidWord& w) {
  std::vector<Generator> letters = w.letters();
  for (auto& g : letters) {
    if (g.is_singular()) g = Generator::sigma(g.index);
  }
  return BraidWord(w.strand_count(), std::move(letters));
}

// degree -> number of terms of that degree, counted with |coefficient|.
using DegreeSpectrum = std::map<int, long long>;

inline DegreeSpectrum degree_spectrum(const FormalSum& f) {
  DegreeSpectrum out;
  for (const auto& [w, c] : f.terms()) out[degree(w)] += std::llabs(c);
  return out;
}

inline DegreeSpectrum degree_spectrum(const std::vector<SignedTerm>& terms) {
  DegreeSpectrum out;
  for (const auto& t : terms) out[degree(t.word)] += 1;
  return out;
}

// Whether η̂(w) can be an integer multiple of the empty word. A word with
// d >= 1 singular letters has terms at the two distinct degrees s - d and
// s + d, so its image is never a scalar; for d = 0, η̂(w) = w and the test is
// whether w freely reduces to the empty word.
inline bool scalar_preimage_check(const BraidWord& w) {
  if (singularity_count(w) != 0) return false;
  return free_reduce(w).empty();
}

}  // namespace svb
