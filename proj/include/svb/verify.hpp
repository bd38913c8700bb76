#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/desing.hpp"
#include "svb/equivalence.hpp"
#include "svb/gauss.hpp"
#include "svb/io.hpp"
#include "svb/pure.hpp"
#include "svb/random.hpp"
#include "svb/relations.hpp"
#include "svb/surface.hpp"

namespace svb {

struct SuiteCheck {
  std::string name;
  std::size_t count = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }

  void record(bool ok, const std::string& what) {
    ++count;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;  // sorted by name

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"degree-lemma",  "gauss-roundtrip", "relations",
                                              "scalar-preimage", "sp-relations",  "surface"};
  return names;
}

namespace detail {

class CheckSet {
 public:
  SuiteCheck& operator[](const std::string& name) {
    auto& c = checks_[name];
    c.name = name;
    return c;
  }

  std::vector<SuiteCheck> sorted() && {
    std::vector<SuiteCheck> out;
    for (auto& [_, c] : checks_) out.push_back(std::move(c));
    return out;
  }

 private:
  std::map<std::string, SuiteCheck> checks_;
};

inline void suite_relations(CheckSet& checks, std::size_t n, const SearchBudget& budget) {
  SearchBudget moves = budget;
  moves.max_depth = 6;
  for (const auto& rel : relation_catalog(n)) {
    const std::string what = print_word(rel.lhs) + " = " + print_word(rel.rhs);
    checks["invariants/" + rel.family].record(!separating_invariant(rel.lhs, rel.rhs).has_value(), what);
    const auto verdict = omega_equivalent(gauss_of_braid(rel.lhs), gauss_of_braid(rel.rhs), moves);
    checks["omega/" + rel.family].record(verdict.kind == VerdictKind::Equivalent, what);
  }
}

inline void suite_gauss_roundtrip(CheckSet& checks, std::size_t n, Rng& rng) {
  for (int k = 0; k < 500; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, n), 10);
    checks["gauss-braid-gauss"].record(gauss_of_braid(braid_of_gauss(g)) == g, to_json(g).dump());
  }
  for (int k = 0; k < 500; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, n), 12);
    checks["perm-equals-theta"].record(gauss_of_braid(w).perm() == theta(w), print_word(w));
  }
}

inline void suite_degree_lemma(CheckSet& checks, std::size_t n, Rng& rng) {
  for (int k = 0; k < 500; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, n), 12);
    const auto terms = expand_eta_hat(w);
    const int s = degree(w);
    const auto d = static_cast<int>(singularity_count(w));
    const auto spectrum = degree_spectrum(terms);
    const std::string what = print_word(w);
    checks["term-count"].record(terms.size() == (std::size_t{1} << d), what);
    if (d == 0) {
      checks["extremal-terms"].record(spectrum == DegreeSpectrum{{s, 1}}, what);
    } else {
      const auto low = spectrum.find(s - d);
      const auto high = spectrum.find(s + d);
      checks["extremal-terms"].record(low != spectrum.end() && low->second == 1 && high != spectrum.end() &&
                                          high->second == 1,
                                      what);
    }
    checks["support"].record(spectrum.begin()->first >= s - d && spectrum.rbegin()->first <= s + d, what);
    checks["flatten-degree"].record(degree(flatten(w)) == s + d, what);
  }
}

inline void suite_sp_relations(CheckSet& checks, std::size_t n, const SearchBudget& budget) {
  for (const auto& c : verify_sp_relations(n, budget).checks) {
    checks[c.label.substr(0, c.label.find('['))].record(c.verdict == VerdictKind::Equivalent,
                                                        c.label + ": " + to_string(c.verdict));
  }
}

inline void suite_scalar_preimage(CheckSet& checks, std::size_t n) {
  const std::array<Generator, 4> alphabet{Generator::sigma(1), Generator::sigma_inv(1), Generator::rho(1),
                                          Generator::tau(1)};
  std::vector<Generator> letters;
  const auto visit = [&](const auto& self, std::size_t depth) -> void {
    const BraidWord w(n, letters);
    const std::string what = print_word(w);
    checks["iff-free-reduces"].record(scalar_preimage_check(w) == (singularity_count(w) == 0 && free_reduce(w).empty()),
                                      what);
    if (singularity_count(w) >= 1) checks["singular-spectrum"].record(degree_spectrum(eta_hat(w)).size() >= 2, what);
    if (depth == 6) return;
    for (const auto& g : alphabet) {
      letters.push_back(g);
      self(self, depth + 1);
      letters.pop_back();
    }
  };
  visit(visit, 0);
}

inline void suite_surface(CheckSet& checks, std::size_t n, Rng& rng) {
  for (std::size_t m = 1; m <= n; ++m) {
    checks["empty-genus"].record(genus(BraidWord(m)) == 0, "n=" + std::to_string(m));
  }
  const LetterMix classical{true, false, true};
  for (int k = 0; k < 100; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, n), 12, classical);
    checks["planar-genus"].record(genus(w) == 0, print_word(w));
  }
  for (int k = 0; k < 200; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, n), 12);
    const auto r = ribbon_of_braid(w);
    checks["euler-routes"].record(euler_by_weights(r) == euler_by_traversal(r), print_word(w));
    const auto before = genus(w);
    checks["genus-nonnegative"].record(before >= 0, print_word(w));
    for (const auto& rel : relation_catalog(w.strand_count())) {
      static const std::array<std::string, 6> commuting{"R0", "S1", "S2", "SV1", "V1", "V2"};
      if (std::find(commuting.begin(), commuting.end(), rel.family) == commuting.end()) continue;
      for (const auto& step : rewrite_moves({rel}, w.letters(), w.size())) {
        const BraidWord moved(w.strand_count(), apply_step(w.letters(), step));
        checks["commutation-invariance"].record(genus(moved) == before, print_word(w) + " via " + to_string(step));
      }
    }
  }
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& suite, std::size_t n, std::uint64_t seed,
                             const SearchBudget& budget = {}) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw DomainError("unknown suite \"" + suite + "\"");
  }
  if (n < 2) throw DomainError("suites need at least 2 strands");
  detail::CheckSet checks;
  Rng rng(seed);
  if (suite == "relations") detail::suite_relations(checks, n, budget);
  if (suite == "gauss-roundtrip") detail::suite_gauss_roundtrip(checks, n, rng);
  if (suite == "degree-lemma") detail::suite_degree_lemma(checks, n, rng);
  if (suite == "sp-relations") detail::suite_sp_relations(checks, n, budget);
  if (suite == "scalar-preimage") detail::suite_scalar_preimage(checks, n);
  if (suite == "surface") detail::suite_surface(checks, n, rng);
  return {suite, n, seed, std::move(checks).sorted()};
}

inline Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name}, {"count", c.count}, {"failures", c.failures}, {"passed", c.passed()}};
    if (!c.passed()) entry["first_failure"] = c.first_failure;
    checks.push_back(std::move(entry));
  }
  return {{"suite", r.suite}, {"n", r.n}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace svb
