#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "svb/errors.hpp"

namespace svb {

// Permutation of {1, ..., n} in one-line image notation.
//
// images()[i - 1] is the slot in which the strand that starts in slot i ends
// up. Products are taken in diagram order: a.then(b) first applies a, then b,
// which is how a braid word is read left to right.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
        throw DomainError("permutation images are not a bijection of 1..n");
      }
      seen[v - 1] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  // The adjacent transposition (i, i+1).
  static Permutation transposition(std::size_t n, int i) {
    if (i < 1 || i >= static_cast<int>(n)) {
      throw IndexError("transposition index out of range");
    }
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }

  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  Permutation then(const Permutation& next) const {
    if (next.size() != size()) {
      throw DomainError("permutation sizes differ");
    }
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out[i] = next(images_[i]);
    }
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out[images_[i] - 1] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(out));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < size(); ++i) {
      if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  // Slot contents after the permutation: arrangement()[k - 1] is the strand
  // (named by its starting slot) that occupies slot k at the end.
  std::vector<int> arrangement() const { return inverse().images_; }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) os << ',';
      os << images_[i];
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace svb
