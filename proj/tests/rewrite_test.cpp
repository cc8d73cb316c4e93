#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "admon/rewrite.hpp"
#include "support/brute_force.hpp"

namespace admon {
namespace {

word w(const char* text) { return parse(text); }

std::vector<std::pair<std::size_t, rule_case>> positions(const word& x) {
  std::vector<std::pair<std::size_t, rule_case>> out;
  for (const auto& r : redexes(x)) out.emplace_back(r.position, r.rule.which);
  return out;
}

TEST(Redexes, Examples) {
  EXPECT_TRUE(redexes(w("h0 h1")).empty());
  EXPECT_EQ(positions(w("e0 h0")), (std::vector<std::pair<std::size_t, rule_case>>{{0, rule_case::eps_eta_zero}}));
  EXPECT_EQ(positions(w("e0 e1 h2")),
            (std::vector<std::pair<std::size_t, rule_case>>{{0, rule_case::eps_eps},
                                                            {1, rule_case::eps_eta_j_eq_i_plus_1}}));
}

TEST(Redexes, AgreeWithReferenceRewriter) {
  for (const auto& x : all_words(3, 3)) {
    const auto ref = brute::redex_list(brute::read(print(x)));
    const auto got = redexes(x);
    ASSERT_EQ(got.size(), ref.size()) << print(x);
    for (std::size_t n = 0; n < got.size(); ++n) {
      EXPECT_EQ(got[n].position, ref[n].first);
      EXPECT_EQ(to_string(got[n].rule.which), ref[n].second) << print(x);
    }
  }
}

TEST(MatchRule, EpsEtaSubcasesPartitionIndexPairs) {
  for (std::uint64_t i = 0; i <= 12; ++i) {
    for (std::uint64_t j = 0; j <= 12; ++j) {
      const int hits = int(j > i + 1) + int(i > j) + int(i == j && i > 0) + int(j == i + 1) + int(i == 0 && j == 0);
      ASSERT_EQ(hits, 1) << i << "," << j;
      ASSERT_TRUE(match_rule(eps(i), eta(j)).has_value());
      ASSERT_FALSE(match_rule(eta(i), eps(j)).has_value());
      ASSERT_EQ(match_rule(eps(i), eps(j)).has_value(), j > i);
      ASSERT_EQ(match_rule(eta(i), eta(j)).has_value(), i > j);
    }
  }
}

TEST(MatchRule, LeftSideIsTheMatchedFactor) {
  const auto r = *match_rule(eps(2), eta(5));
  EXPECT_EQ(r.lhs, w("e2 h5"));
  EXPECT_EQ(r.rhs, w("h4 e2"));
  EXPECT_EQ(r.which, rule_case::eps_eta_j_gt_i_plus_1);
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(w("e0 h0"), 0), word{});
  EXPECT_EQ(apply(w("e0 e1"), 0), w("e0 e0"));
  EXPECT_EQ(apply(w("e2 h0"), 0), w("h0 e1"));
  EXPECT_EQ(apply(w("h3 e0 h0 h2"), 1), w("h3 h2"));
}

TEST(Apply, RejectsNonRedex) {
  EXPECT_THROW((void)apply(w("h0 e0"), 0), not_a_redex);
  EXPECT_THROW((void)apply(w("h0 h1"), 0), not_a_redex);
  EXPECT_THROW((void)apply(w("e0 h0"), 1), not_a_redex);
  EXPECT_THROW((void)apply(word{}, 0), not_a_redex);
}

TEST(Step, DecompositionAroundPosition) {
  const auto s = make_step(w("h0 e3 e5 h1"), 1);
  EXPECT_EQ(s.before, w("h0 e3 e5 h1"));
  EXPECT_EQ(s.after, w("h0 e4 e3 h1"));
  EXPECT_EQ(s.rule.lhs, w("e3 e5"));
  EXPECT_EQ(s.rule.which, rule_case::eps_eps);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(w("e0 h1")), word{});
  EXPECT_EQ(normalize(w("h0 e0")), w("h0 e0"));
  EXPECT_EQ(normalize(w("h1 h0")), w("h0 h0"));
  EXPECT_EQ(normalize(w("e1 h1")), word{});
}

TEST(Normalize, AgreesWithReferenceRewriter) {
  for (const auto& x : all_words(4, 2)) {
    const std::string ref = brute::normal_form(print(x));
    ASSERT_FALSE(ref.empty()) << "reference rewriter found several sinks for " << print(x);
    ASSERT_EQ(print(normalize(x)), ref) << print(x);
  }
}

TEST(Normalize, IdempotentAndNormal) {
  std::mt19937_64 rng(11);
  const auto letters = alphabet(8);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1), len(0, 14);
  for (int trial = 0; trial < 3000; ++trial) {
    word x;
    for (std::size_t n = len(rng); n > 0; --n) x.push_back(letters[pick(rng)]);
    const word nf = normalize(x);
    ASSERT_TRUE(is_normal(nf)) << print(x);
    ASSERT_EQ(normalize(nf), nf);
  }
}

TEST(NormalizeTrace, Examples) {
  const auto t0 = normalize_trace(w("e0 h0"));
  ASSERT_EQ(t0.steps.size(), 1u);
  EXPECT_EQ(t0.result(), word{});
  EXPECT_EQ(t0.steps[0].rule.which, rule_case::eps_eta_zero);

  EXPECT_TRUE(normalize_trace(w("h0 e0")).steps.empty());

  const auto t = normalize_trace(w("e1 h1"));
  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_EQ(t.steps[0].after, w("e0 h1"));
  EXPECT_EQ(t.steps[1].after, w("e0 h0"));
  EXPECT_EQ(t.steps[2].after, word{});
  EXPECT_EQ(t.steps[0].rule.which, rule_case::eps_eta_i_eq_j_pos);
  EXPECT_EQ(t.steps[1].rule.which, rule_case::eps_eta_j_eq_i_plus_1);
  EXPECT_EQ(t.steps[2].rule.which, rule_case::eps_eta_zero);
}

TEST(NormalizeTrace, ChainsAndDescends) {
  for (const auto& x : all_words(4, 2)) {
    const auto t = normalize_trace(x);
    word cur = x;
    for (const auto& s : t.steps) {
      ASSERT_EQ(s.before, cur);
      ASSERT_EQ(s.after, apply(s.before, s.position));
      ASSERT_LT(degree(s.after), degree(s.before));
      // The step is the leftmost redex.
      ASSERT_EQ(redexes(s.before).front().position, s.position);
      cur = s.after;
    }
    ASSERT_EQ(t.result(), normalize(x));
  }
}

TEST(IsNormal, Examples) {
  EXPECT_TRUE(is_normal(word{}));
  EXPECT_TRUE(is_normal(w("h0 h2 e3 e3 e1")));
  EXPECT_FALSE(is_normal(w("e0 h5")));
  EXPECT_FALSE(is_normal(w("h2 h1")));
  EXPECT_FALSE(is_normal(w("e1 e2")));
}

TEST(IsNormal, ThreeCharacterizationsAgree) {
  for (const auto& x : all_words(4, 4)) {
    const bool shape = is_normal(x);
    ASSERT_EQ(shape, redexes(x).empty()) << print(x);
    ASSERT_EQ(shape, !has_redex(x)) << print(x);
  }
}

TEST(ReductionGraph, NormalWordIsSingleNode) {
  const reduction_graph g(w("h0 e0"));
  EXPECT_EQ(g.nodes().size(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(ReductionGraph, CancellationHasTwoNodes) {
  const reduction_graph g(w("e0 h0"));
  ASSERT_EQ(g.nodes().size(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.nodes()[1], word{});
  EXPECT_EQ(g.edges()[0].which, rule_case::eps_eta_zero);
}

TEST(ReductionGraph, SinksMatchNormalForm) {
  const reduction_graph g(w("e0 e1 h2"));
  const auto sinks = g.sinks();
  ASSERT_EQ(sinks.size(), 1u);
  EXPECT_EQ(sinks[0], normalize(w("e0 e1 h2")));
  EXPECT_EQ(sinks[0], w("e0"));
}

TEST(ReductionGraph, SinksMatchReferenceSinks) {
  for (const auto& x : all_words(3, 2)) {
    const reduction_graph g(x);
    std::set<std::string> ref;
    for (const auto& s : brute::sinks(brute::read(print(x)))) ref.insert(brute::show(s));
    for (const auto& s : g.sinks()) ASSERT_TRUE(ref.contains(print(s)));
    ASSERT_EQ(g.sinks().size(), ref.size());
  }
}

TEST(ReductionGraph, StrictDescentAndGap) {
  for (const auto& x : all_words(4, 2)) {
    const reduction_graph g(x);
    for (const auto& e : g.edges()) {
      const auto gap = degree(g.nodes()[e.from]) - degree(g.nodes()[e.to]);
      ASSERT_EQ(gap, e.which == rule_case::eps_eta_zero ? 2u : 1u);
    }
    ASSERT_LE(g.longest_chain(), degree(x));
  }
}

TEST(ReductionGraph, LongestChainOfCancellationTower) {
  EXPECT_EQ(reduction_graph(w("e1 h1")).longest_chain(), 3u);
  EXPECT_EQ(reduction_graph(w("h0 e0")).longest_chain(), 0u);
}

TEST(Rewrite, WorksWithUnboundedIndices) {
  using big = boost::multiprecision::cpp_int;
  const auto x = parse<big>("e100000000000000000000000 h2");
  EXPECT_EQ(print(normalize(x)), "h2 e99999999999999999999999");
  const auto y = parse<big>("h100000000000000000000000 h3");
  EXPECT_EQ(print(normalize(y)), "h3 h99999999999999999999999");
}

}  // namespace
}  // namespace admon
