#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/gauss.hpp"
#include "svb/permutation.hpp"
#include "svb/pure.hpp"

namespace svb {

using Rng = std::mt19937_64;

// Which letter kinds a random word may use.
struct LetterMix {
  bool classical = true;
  bool virtual_ = true;
  bool singular = true;
};

inline Generator random_generator(Rng& rng, std::size_t n, const LetterMix& mix = {}) {
  if (n < 2) throw DomainError("need at least 2 strands for a generator");
  std::vector<GeneratorKind> kinds;
  if (mix.classical) {
    kinds.push_back(GeneratorKind::ClassicalPos);
    kinds.push_back(GeneratorKind::ClassicalNeg);
  }
  if (mix.virtual_) kinds.push_back(GeneratorKind::Virtual);
  if (mix.singular) kinds.push_back(GeneratorKind::Singular);
  if (kinds.empty()) throw DomainError("letter mix allows no generators");
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
  std::uniform_int_distribution<int> pick_index(1, static_cast<int>(n) - 1);
  const auto kind = kinds[pick_kind(rng)];
  return Generator{kind, pick_index(rng)};
}

// Length uniform in [0, max_len].
inline BraidWord random_word(Rng& rng, std::size_t n, std::size_t max_len, const LetterMix& mix = {}) {
  std::uniform_int_distribution<std::size_t> pick_len(0, max_len);
  const std::size_t len = pick_len(rng);
  std::vector<Generator> letters;
  letters.reserve(len);
  for (std::size_t k = 0; k < len; ++k) letters.push_back(random_generator(rng, n, mix));
  return BraidWord(n, std::move(letters));
}

inline std::size_t random_strand_count(Rng& rng, std::size_t max_n) {
  return std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_n))(rng);
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline Arrow random_arrow(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> strand(1, static_cast<int>(n));
  std::uniform_int_distribution<int> kind(0, 2);
  const int tail = strand(rng);
  int head = strand(rng);
  while (head == tail) head = strand(rng);
  return Arrow{tail, head, static_cast<ArrowKind>(kind(rng))};
}

// Arrow count uniform in [0, max_arrows], arbitrary endpoint permutation.
inline GaussWord random_gauss_word(Rng& rng, std::size_t n, std::size_t max_arrows) {
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_arrows)(rng);
  std::vector<Arrow> arrows;
  arrows.reserve(count);
  for (std::size_t k = 0; k < count; ++k) arrows.push_back(random_arrow(rng, n));
  return GaussWord(n, std::move(arrows), random_permutation(rng, n));
}

inline PureWord random_pure_word(Rng& rng, std::size_t n, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::vector<PureGenerator> letters;
  for (std::size_t k = 0; k < len; ++k) letters.push_back(PureGenerator::from_arrow(random_arrow(rng, n)));
  return PureWord(n, std::move(letters));
}

}  // namespace svb
