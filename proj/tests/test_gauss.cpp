#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "svb/svb.hpp"

using namespace svb;

namespace {

BraidWord W(const std::string& text, std::size_t n) { return parse_word(text, n); }

GaussWord D(std::size_t n, std::vector<Arrow> arrows, std::vector<int> perm = {}) {
  if (perm.empty()) return GaussWord(n, std::move(arrows));
  return GaussWord(n, std::move(arrows), Permutation(std::move(perm)));
}

std::vector<oracle::Arrow> as_tuples(const std::vector<Arrow>& arrows) {
  std::vector<oracle::Arrow> out;
  for (const auto& a : arrows) {
    out.emplace_back(a.tail, a.head, a.kind == ArrowKind::Pos ? '+' : a.kind == ArrowKind::Neg ? '-' : 's');
  }
  return out;
}

}  // namespace

TEST(GaussWord, Validation) {
  EXPECT_THROW(D(2, {Arrow::pos(1, 1)}), DomainError);
  EXPECT_THROW(D(2, {Arrow::pos(1, 3)}), IndexError);
  EXPECT_THROW(GaussWord(3, {}, Permutation({2, 1})), DomainError);
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(D(4, {})), D(4, {}));
  EXPECT_EQ(canonical_form(D(4, {Arrow::pos(3, 4), Arrow::pos(1, 2)})).arrows(),
            (std::vector<Arrow>{Arrow::pos(1, 2), Arrow::pos(3, 4)}));
  const std::vector<Arrow> blocked{Arrow::pos(1, 2), Arrow::pos(2, 3)};
  EXPECT_EQ(canonical_form(D(3, blocked)).arrows(), blocked);
  const auto g = D(4, {Arrow::pos(3, 4), Arrow::pos(1, 2)}, {2, 1, 4, 3});
  EXPECT_EQ(canonical_form(g).perm(), g.perm());
}

// Brute force: the least sequence among everything reachable by disjoint swaps.
TEST(CanonicalForm, IsLeastOverCommutationClass) {
  Rng rng(21);
  const CanonicalArrowLess less;
  const auto seq_less = [&](const std::vector<Arrow>& a, const std::vector<Arrow>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
  };
  for (int k = 0; k < 150; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 5), 6);
    std::vector<Arrow> best = g.arrows();
    std::set<std::vector<Arrow>, decltype(seq_less)> seen(seq_less);
    std::vector<std::vector<Arrow>> stack{g.arrows()};
    seen.insert(g.arrows());
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      if (seq_less(cur, best)) best = cur;
      for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
        if (!cur[p].disjoint(cur[p + 1])) continue;
        auto next = cur;
        std::swap(next[p], next[p + 1]);
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    ASSERT_EQ(canonical_form(g).arrows(), best);
    ASSERT_EQ(canonical_form(canonical_form(g)), canonical_form(g));
  }
}

TEST(OmegaNeighbors, Examples) {
  const auto o2 = omega_neighbors(D(2, {Arrow::pos(1, 2), Arrow::neg(1, 2)}));
  EXPECT_TRUE(o2.count(D(2, {})));

  const auto o3 = omega_neighbors(D(3, {Arrow::pos(1, 2), Arrow::pos(1, 3), Arrow::pos(2, 3)}));
  EXPECT_TRUE(o3.count(D(3, {Arrow::pos(2, 3), Arrow::pos(1, 3), Arrow::pos(1, 2)})));

  const auto so2 = omega_neighbors(D(2, {Arrow::sing(1, 2), Arrow::pos(2, 1)}));
  EXPECT_TRUE(so2.count(D(2, {Arrow::pos(1, 2), Arrow::sing(2, 1)})));
}

TEST(OmegaNeighbors, PreservePairInvariantsAndPerm) {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 4), 6);
    const auto inv = pair_invariants(g);
    for (const auto& h : omega_neighbors(g)) {
      ASSERT_EQ(pair_invariants(h), inv);
      ASSERT_EQ(h.perm(), g.perm());
      ASSERT_NE(h, g);
    }
  }
}

TEST(OmegaMoves, StepsReplayAndInvert) {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 4), 5);
    for (const auto& step : omega_moves(g.arrows(), g.strand_count(), g.arrows().size() + 2)) {
      const auto next = apply_step(g.arrows(), step);
      ASSERT_EQ(apply_step(next, step.inverted()), g.arrows());
    }
  }
}

TEST(PairInvariants, Examples) {
  const auto zero = pair_invariants(D(3, {}));
  for (const auto& e : zero.entries) {
    EXPECT_EQ(e.writhe, 0);
    EXPECT_EQ(e.sing_count, 0);
  }
  EXPECT_EQ(pair_invariants(D(3, {Arrow::pos(1, 2), Arrow::pos(1, 2)})).at(1, 2).writhe, 2);
  EXPECT_EQ(pair_invariants(D(3, {Arrow::pos(1, 2), Arrow::neg(2, 1)})).at(1, 2).writhe, 0);
  EXPECT_EQ(pair_invariants(D(3, {Arrow::sing(3, 1)})).at(1, 3).sing_count, 1);
}

TEST(GaussOfBraid, Examples) {
  const auto r = gauss_of_braid(W("r1", 2));
  EXPECT_TRUE(r.arrows().empty());
  EXPECT_EQ(r.perm().to_string(), "[2,1]");

  const auto s = gauss_of_braid(W("s1", 2));
  EXPECT_EQ(s.arrows(), (std::vector<Arrow>{Arrow::pos(1, 2)}));
  EXPECT_EQ(s.perm().to_string(), "[2,1]");

  const auto a = gauss_of_braid(W("r1 t2 r1", 3));
  const auto b = gauss_of_braid(W("r2 t1 r2", 3));
  EXPECT_EQ(a.arrows(), (std::vector<Arrow>{Arrow::sing(1, 3)}));
  EXPECT_EQ(a, b);
  // Both sides of SV2 permute the outer strands.
  EXPECT_EQ(a.perm().to_string(), "[3,2,1]");
}

TEST(GaussOfBraid, MatchesTrackingOracle) {
  Rng rng(24);
  for (int k = 0; k < 500; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, 6), 12);
    const auto g = gauss_of_braid(w);
    const auto [arrows, perm] = oracle::gauss(static_cast<int>(w.strand_count()), print_word(w));
    ASSERT_EQ(as_tuples(g.arrows()), arrows) << print_word(w);
    ASSERT_EQ(g.perm().images(), perm);
    ASSERT_EQ(g.perm(), theta(w));
  }
}

TEST(BraidOfGauss, Examples) {
  EXPECT_EQ(print_word(braid_of_gauss(D(2, {}))), "e");
  EXPECT_EQ(print_word(braid_of_gauss(D(2, {}, {2, 1}))), "r1");
  EXPECT_EQ(print_word(braid_of_gauss(D(2, {Arrow::pos(1, 2)}, {2, 1}))), "s1");
}

TEST(BraidOfGauss, RoundTripIsExact) {
  Rng rng(25);
  for (int k = 0; k < 500; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 6), 10);
    const auto w = braid_of_gauss(g);
    ASSERT_EQ(gauss_of_braid(w), g);
    std::size_t signed_letters = 0;
    std::size_t sing_letters = 0;
    for (const auto& x : w.letters()) {
      signed_letters += x.is_classical();
      sing_letters += x.is_singular();
    }
    std::size_t signed_arrows = 0;
    for (const auto& a : g.arrows()) signed_arrows += a.is_signed();
    ASSERT_EQ(signed_letters, signed_arrows);
    ASSERT_EQ(sing_letters, g.arrows().size() - signed_arrows);
  }
}

TEST(OmegaEquivalent, Examples) {
  const auto g = D(3, {Arrow::pos(1, 2), Arrow::sing(2, 3)});
  EXPECT_EQ(omega_equivalent(g, g).kind, VerdictKind::Equivalent);

  const auto pair = D(2, {Arrow::pos(1, 2), Arrow::neg(1, 2)});
  const auto v = omega_equivalent(pair, D(2, {}));
  ASSERT_EQ(v.kind, VerdictKind::Equivalent);
  EXPECT_TRUE(replay(pair.arrows(), v.trace).empty());

  EXPECT_EQ(omega_equivalent(D(2, {}), D(2, {}, {2, 1})).kind, VerdictKind::Distinct);
  EXPECT_EQ(omega_equivalent(D(2, {Arrow::pos(1, 2)}), D(2, {Arrow::neg(1, 2)})).kind, VerdictKind::Distinct);
}

// S(1,2) and S(2,1) agree on every invariant; no move sequence of length <= 4
// joins them, so the bounded search must report Unknown rather than a verdict.
TEST(OmegaEquivalent, ReversedSingularArrowIsUnknown) {
  const auto a = D(2, {Arrow::sing(1, 2)});
  const auto b = D(2, {Arrow::sing(2, 1)});
  ASSERT_EQ(pair_invariants(a), pair_invariants(b));
  const bool found = oracle::reachable(a, b, 4, [](const GaussWord& g) { return omega_neighbors(g, 5); });
  EXPECT_FALSE(found);
  SearchBudget small;
  small.max_nodes = 5000;
  EXPECT_EQ(omega_equivalent(a, b, small).kind, VerdictKind::Unknown);
}

TEST(OmegaEquivalent, RelationInstancesWithinSixMoves) {
  SearchBudget six;
  six.max_depth = 6;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& r : relation_catalog(n)) {
      const auto gl = gauss_of_braid(r.lhs);
      const auto gr = gauss_of_braid(r.rhs);
      const auto v = omega_equivalent(gl, gr, six);
      ASSERT_EQ(v.kind, VerdictKind::Equivalent) << r.family << " " << print_word(r.lhs);
      ASSERT_LE(v.trace.size(), 6u);
      ASSERT_EQ(replay(gl.arrows(), v.trace), gr.arrows());
      static const std::set<std::string> commuting{"R0", "S1", "S2", "SV1", "SV2", "V1", "V2", "V3", "V4", "V5"};
      if (commuting.count(r.family)) {
        ASSERT_EQ(canonical_form(gl), canonical_form(gr)) << r.family;
      }
    }
  }
}

TEST(OmegaEquivalent, RandomWalksAreFoundAgain) {
  Rng rng(26);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 3), 4);
    GaussWord h = g;
    for (int step = 0; step < 2; ++step) {
      const auto next = omega_neighbors(h);
      if (next.empty()) break;
      auto it = next.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng));
      h = *it;
    }
    const auto v = omega_equivalent(g, h);
    ASSERT_EQ(v.kind, VerdictKind::Equivalent);
    ASSERT_EQ(replay(g.arrows(), v.trace), h.arrows());
  }
}

TEST(GaussJson, RoundTrip) {
  Rng rng(27);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_gauss_word(rng, random_strand_count(rng, 5), 6);
    ASSERT_EQ(gauss_from_json(Json::parse(to_json(g).dump())), g);
  }
  const auto j = to_json(D(2, {Arrow::sing(1, 2), Arrow::neg(2, 1)}, {2, 1}));
  EXPECT_EQ(j.dump(),
            R"({"n":2,"arrows":[{"tail":1,"head":2,"kind":"s"},{"tail":2,"head":1,"kind":"-"}],"perm":[2,1]})");
  EXPECT_THROW(gauss_from_json(Json::parse(R"({"n":2,"arrows":[{"tail":1,"head":2,"kind":"x"}],"perm":[1,2]})")),
               DomainError);
  EXPECT_THROW(gauss_from_json(Json::parse(R"({"n":2})")), DomainError);
}
