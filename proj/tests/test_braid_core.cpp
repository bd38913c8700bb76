#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "svb/svb.hpp"

using namespace svb;

namespace {

BraidWord W(const std::string& text, std::size_t n) { return parse_word(text, n); }

const char* const kOmega = "r1 s2' t1 r2 s2 t2";

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_NO_THROW(Permutation({2, 1}));
}

TEST(Permutation, ThenComposesInDiagramOrder) {
  const auto a = Permutation::transposition(3, 1);
  const auto b = Permutation::transposition(3, 2);
  EXPECT_EQ(a.then(b).to_string(), "[3,1,2]");
  EXPECT_EQ(a.then(b).then(a.then(b).inverse()), Permutation::identity(3));
}

TEST(ParseWord, AcceptsGrammar) {
  EXPECT_TRUE(W("e", 3).empty());
  EXPECT_EQ(W("e", 3).strand_count(), 3u);
  const auto omega = W(kOmega, 3);
  const std::vector<Generator> expected{Generator::rho(1), Generator::sigma_inv(2), Generator::tau(1),
                                        Generator::rho(2), Generator::sigma(2),     Generator::tau(2)};
  EXPECT_EQ(omega.letters(), expected);
  EXPECT_EQ(W("s1^-1", 2), W("s1'", 2));
  EXPECT_EQ(print_word(W("  s1   r1 ", 2)), "s1 r1");
}

TEST(ParseWord, RejectsBadInput) {
  EXPECT_THROW(W("s3", 3), IndexError);
  EXPECT_THROW(W("s0", 3), IndexError);
  EXPECT_THROW(W("r1'", 3), ParseError);
  EXPECT_THROW(W("t1^-1", 3), ParseError);
  EXPECT_THROW(W("x1", 3), ParseError);
  EXPECT_THROW(W("s", 3), ParseError);
  EXPECT_THROW(W("", 3), ParseError);
  EXPECT_THROW(W("e s1", 3), ParseError);
  EXPECT_THROW(W("s1\ts2", 3), ParseError);
  EXPECT_THROW(W("s1", 1), DomainError);
}

TEST(ParseWord, ErrorCarriesPosition) {
  try {
    W("s1 q2", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(ParseWord, IndexErrorNamesToken) {
  try {
    W("s1 t5", 3);
    FAIL() << "expected an index error";
  } catch (const IndexError& e) {
    EXPECT_NE(std::string(e.what()).find("t5"), std::string::npos);
  }
}

TEST(PrintWord, Examples) {
  EXPECT_EQ(print_word(BraidWord(3)), "e");
  EXPECT_EQ(print_word(BraidWord(3, {Generator::sigma_inv(1), Generator::tau(2)})), "s1' t2");
}

TEST(PrintWord, RoundTripOnRandomWords) {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, 6), 15);
    ASSERT_EQ(parse_word(print_word(w), w.strand_count()), w);
  }
}

TEST(Theta, Examples) {
  EXPECT_TRUE(theta(BraidWord(4)).is_identity());
  EXPECT_EQ(theta(W("s1", 2)).to_string(), "[2,1]");
  EXPECT_EQ(theta(W("s1 t2", 3)).to_string(), "[3,1,2]");
  EXPECT_EQ(theta(W("t1 t2", 3)).to_string(), "[3,1,2]");
}

TEST(Theta, MatchesStrandTrackingOracle) {
  Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, 6), 12);
    ASSERT_EQ(theta(w).images(), oracle::theta(static_cast<int>(w.strand_count()), print_word(w))) << print_word(w);
  }
}

TEST(Invariants, AreHomomorphisms) {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const auto n = random_strand_count(rng, 5);
    const auto u = random_word(rng, n, 8);
    const auto v = random_word(rng, n, 8);
    ASSERT_EQ(theta(u * v), theta(u).then(theta(v)));
    ASSERT_EQ(degree(u * v), degree(u) + degree(v));
    ASSERT_EQ(singularity_count(u * v), singularity_count(u) + singularity_count(v));
  }
}

TEST(Invariants, DegreeAndSingularityExamples) {
  EXPECT_EQ(degree(BraidWord(2)), 0);
  EXPECT_EQ(degree(W(kOmega, 3)), 0);
  EXPECT_EQ(degree(W("s1 s1 s2'", 3)), 1);
  EXPECT_EQ(singularity_count(BraidWord(2)), 0u);
  EXPECT_EQ(singularity_count(W(kOmega, 3)), 2u);
  Rng rng(14);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, 5), 12);
    const auto text = print_word(w);
    ASSERT_EQ(degree(w), oracle::degree(text));
    ASSERT_EQ(static_cast<int>(singularity_count(w)), oracle::singularities(text));
  }
}

TEST(RelationCatalog, TwoStrands) {
  const auto cat = relation_catalog(2);
  ASSERT_EQ(cat.size(), 4u);
  std::multiset<std::string> families;
  for (const auto& r : cat) families.insert(r.family);
  EXPECT_EQ(families, (std::multiset<std::string>{"R2", "R2", "S3", "V3"}));
}

// Hand count of index ranges: per family, the number of admissible indices.
TEST(RelationCatalog, InstanceCountsByFamily) {
  for (int n = 2; n <= 6; ++n) {
    const int m = n - 1;                              // generators per kind
    const int far_unordered = (m - 1) * (m - 2) / 2;  // pairs with |i-j| >= 2
    const int adjacent = std::max(0, m - 1);
    std::map<std::string, int> expected{{"R0", far_unordered}, {"R2", 2 * m},       {"R3", adjacent},
                                        {"S1", far_unordered}, {"S2", 2 * far_unordered}, {"S3", m},
                                        {"S4", adjacent},      {"SV1", 2 * far_unordered}, {"SV2", adjacent},
                                        {"V1", far_unordered}, {"V2", 2 * far_unordered}, {"V3", m},
                                        {"V4", adjacent},      {"V5", adjacent}};
    std::map<std::string, int> actual;
    for (const auto& r : relation_catalog(static_cast<std::size_t>(n))) ++actual[r.family];
    for (auto it = expected.begin(); it != expected.end();) {
      it = it->second == 0 ? expected.erase(it) : std::next(it);
    }
    EXPECT_EQ(actual, expected) << "n=" << n;
  }
}

TEST(RelationCatalog, ContainsSv2AndIsSortedByFamily) {
  const auto cat = relation_catalog(3);
  const auto sv2 = std::find_if(cat.begin(), cat.end(), [](const RelationInstance& r) { return r.family == "SV2"; });
  ASSERT_NE(sv2, cat.end());
  EXPECT_EQ(print_word(sv2->lhs), "r1 t2 r1");
  EXPECT_EQ(print_word(sv2->rhs), "r2 t1 r2");
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end(),
                             [](const RelationInstance& a, const RelationInstance& b) { return a.family < b.family; }));
}

TEST(RelationCatalog, SidesAgreeOnCheapInvariants) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& r : relation_catalog(n)) {
      EXPECT_EQ(theta(r.lhs), theta(r.rhs)) << r.family;
      EXPECT_EQ(degree(r.lhs), degree(r.rhs)) << r.family;
      EXPECT_EQ(singularity_count(r.lhs), singularity_count(r.rhs)) << r.family;
    }
  }
}

TEST(RewriteNeighbors, Examples) {
  const auto del = rewrite_neighbors(W("s1 s1'", 2), 2);
  EXPECT_TRUE(del.count(BraidWord(2)));

  const auto ins = rewrite_neighbors(BraidWord(2), 2);
  EXPECT_TRUE(ins.count(W("s1 s1'", 2)));
  EXPECT_TRUE(ins.count(W("s1' s1", 2)));
  EXPECT_TRUE(ins.count(W("r1 r1", 2)));
  EXPECT_EQ(ins.size(), 3u);

  const auto w = W("r1 t2 r1", 3);
  const auto sv = rewrite_neighbors(w, 3);
  EXPECT_TRUE(sv.count(W("r2 t1 r2", 3)));
  EXPECT_FALSE(sv.count(w));
  for (const auto& x : rewrite_neighbors(w, 5)) EXPECT_LE(x.size(), 5u);
}

TEST(FreeReduce, Examples) {
  EXPECT_EQ(print_word(free_reduce(W("s1 s1'", 2))), "e");
  EXPECT_EQ(print_word(free_reduce(W("r2 r2 t1", 3))), "t1");
  EXPECT_EQ(print_word(free_reduce(W("s1 r2 r2 s1'", 3))), "e");
}

TEST(FreeReduce, MatchesStackOracleAndTraceReplays) {
  Rng rng(15);
  for (int k = 0; k < 500; ++k) {
    const auto n = random_strand_count(rng, 3);
    const auto w = random_word(rng, n, 14);
    BraidTrace trace;
    const auto r = free_reduce(w, &trace);
    ASSERT_EQ(print_word(r), oracle::free_reduce(print_word(w)));
    ASSERT_EQ(replay(w, trace), r);
    ASSERT_EQ(free_reduce(r), r);
    for (const auto& s : trace) ASSERT_TRUE(s.label == "R2" || s.label == "V3");
  }
}

TEST(Equivalent, Examples) {
  const auto w = W(kOmega, 3);
  auto same = equivalent(w, w);
  EXPECT_EQ(same.kind, VerdictKind::Equivalent);
  EXPECT_TRUE(same.trace.empty());

  auto s3 = equivalent(W("s1 t1", 2), W("t1 s1", 2));
  ASSERT_EQ(s3.kind, VerdictKind::Equivalent);
  EXPECT_EQ(replay(W("s1 t1", 2), s3.trace), W("t1 s1", 2));

  auto d = equivalent(W("s1", 2), W("t1", 2));
  ASSERT_EQ(d.kind, VerdictKind::Distinct);
  EXPECT_EQ(d.witness.invariant, "singularity_count");
  EXPECT_EQ(d.witness.first, "0");
  EXPECT_EQ(d.witness.second, "1");

  auto d2 = equivalent(W("s1 s1", 2), W("s1' s1'", 2));
  ASSERT_EQ(d2.kind, VerdictKind::Distinct);
  EXPECT_EQ(d2.witness.invariant, "degree");
  EXPECT_EQ(d2.witness.first, "2");
  EXPECT_EQ(d2.witness.second, "-2");
}

TEST(Equivalent, RejectsBadInput) {
  SearchBudget zero;
  zero.max_nodes = 0;
  EXPECT_THROW(equivalent(BraidWord(2), BraidWord(2), zero), DomainError);
  EXPECT_THROW(equivalent(BraidWord(2), BraidWord(3)), DomainError);
}

TEST(Equivalent, RelationInstancesAreCertified) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& r : relation_catalog(n)) {
      const auto v = equivalent(r.lhs, r.rhs);
      ASSERT_EQ(v.kind, VerdictKind::Equivalent) << r.family << " " << print_word(r.lhs);
      ASSERT_EQ(replay(r.lhs, v.trace), r.rhs);
    }
  }
}

// Pairs joined by a random walk of relation applications; every verdict must
// agree in class across argument order and every trace must replay.
TEST(Equivalent, SymmetricVerdictsAndReplaySoundness) {
  Rng rng(16);
  SearchBudget budget;
  budget.max_nodes = 20000;
  for (int k = 0; k < 100; ++k) {
    const auto n = random_strand_count(rng, 3);
    const auto u = random_word(rng, n, 5);
    BraidWord v = u;
    if (k % 2 == 0) {
      v = random_word(rng, n, 5);
    } else {
      for (int step = 0; step < 3; ++step) {
        const auto next = rewrite_neighbors(v, v.size() + 2);
        if (next.empty()) break;
        auto it = next.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng));
        v = *it;
      }
    }
    const auto uv = equivalent(u, v, budget);
    const auto vu = equivalent(v, u, budget);
    ASSERT_EQ(uv.kind, vu.kind) << print_word(u) << " | " << print_word(v);
    if (uv.kind == VerdictKind::Equivalent) {
      ASSERT_EQ(replay(u, uv.trace), v);
      ASSERT_EQ(replay(v, vu.trace), u);
      auto back = uv.trace;
      std::reverse(back.begin(), back.end());
      for (auto& s : back) s = s.inverted();
      ASSERT_EQ(replay(v, back), u);
    }
    if (k % 2 == 1) {
      ASSERT_NE(uv.kind, VerdictKind::Distinct) << "walked pair declared distinct";
    }
  }
}

TEST(Equivalent, NeverEquivalentAcrossASeparatingInvariant) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto n = random_strand_count(rng, 4);
    const auto u = random_word(rng, n, 6);
    const auto v = random_word(rng, n, 6);
    const auto verdict = equivalent(u, v, SearchBudget{2000});
    if (separating_invariant(u, v)) {
      ASSERT_EQ(verdict.kind, VerdictKind::Distinct);
    }
    if (verdict.kind == VerdictKind::Equivalent) {
      ASSERT_EQ(replay(u, verdict.trace), v);
    }
  }
}

TEST(Equivalent, NormalizationTraceReachesRealization) {
  Rng rng(18);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_word(rng, random_strand_count(rng, 4), 8);
    const auto trace = normalization_trace(w);
    if (!trace) continue;
    ASSERT_EQ(replay(w, *trace), braid_of_gauss(gauss_of_braid(w))) << print_word(w);
  }
}

TEST(Equivalent, UnknownWhenBudgetIsTiny) {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto v = equivalent(W("s1 s2 s1", 3), W("s2 s1 s2", 3), tiny);
  EXPECT_EQ(v.kind, VerdictKind::Unknown);
  EXPECT_TRUE(v.trace.empty());
}

TEST(SearchBudget, LengthCap) {
  SearchBudget b;
  EXPECT_EQ(b.length_cap(3, 5), 9u);
  b.max_len = 7;
  EXPECT_EQ(b.length_cap(3, 5), 7u);
}

TEST(ApplyStep, RejectsMismatch) {
  const BraidStep step{"R2", 0, {Generator::sigma(1), Generator::sigma_inv(1)}, {}};
  EXPECT_THROW(apply_step(std::vector<Generator>{Generator::rho(1)}, step), DomainError);
}
