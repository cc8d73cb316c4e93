#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

#include "admon/monoid.hpp"
#include "support/brute_force.hpp"

namespace admon {
namespace {

element el(const char* text) { return element::from_word(parse(text)); }
word w(const char* text) { return parse(text); }

TEST(Element, Distinguished) {
  EXPECT_EQ(print(element::identity().nf()), "1");
  EXPECT_EQ(print(element::eta().nf()), "h0");
  EXPECT_EQ(print(element::eps().nf()), "e0");
}

TEST(Element, FromNormalRejectsNonCanonical) {
  EXPECT_THROW((void)element::from_normal(w("e0 h0")), std::invalid_argument);
  EXPECT_NO_THROW((void)element::from_normal(w("h0 e0")));
}

TEST(Mul, Examples) {
  EXPECT_EQ(print(mul(el("h0 e0"), el("h0 e0")).nf()), "h0 e0");
  EXPECT_EQ(print(mul(el("e0"), el("h0")).nf()), "1");
  EXPECT_EQ(print(mul(el("h0"), el("e0")).nf()), "h0 e0");
}

TEST(Mul, MonoidLawsExhaustive) {
  std::vector<element> es;
  for (const auto& m : normal_forms(2, 2)) es.push_back(element::from_normal(m));
  ASSERT_EQ(es.size(), 28u);
  const element one = element::identity();
  for (const auto& a : es) {
    ASSERT_EQ(a * one, a);
    ASSERT_EQ(one * a, a);
    for (const auto& b : es)
      for (const auto& c : es) ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Mul, WellDefinedOnRepresentatives) {
  const auto ws = all_words(2, 2);
  for (const auto& u : ws)
    for (const auto& v : ws)
      ASSERT_EQ(normalize(u * v), mul(element::from_word(u), element::from_word(v)).nf());
}

TEST(Mul, AssociativeOnRandomElements) {
  std::mt19937_64 rng(3);
  const auto letters = alphabet(6);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1), len(0, 6);
  auto random_element = [&] {
    word x;
    for (std::size_t n = len(rng); n > 0; --n) x.push_back(letters[pick(rng)]);
    return element::from_word(x);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_element(), b = random_element(), c = random_element();
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(ApplyF, Examples) {
  EXPECT_EQ(print(apply_f(el("h0 e0")).nf()), "h1 e1");
  EXPECT_EQ(print(apply_f(el("1")).nf()), "1");
  EXPECT_EQ(normalize(apply_f_word(w("e0 h0"))), word{});
  EXPECT_EQ(apply_f(el("e0 h0")).nf(), word{});
}

TEST(ApplyF, EndomorphismInjectiveAndCommutesWithNormalize) {
  const auto ws = all_words(4, 3);
  for (const auto& x : ws) ASSERT_EQ(normalize(apply_f_word(x)), apply_f_word(normalize(x))) << print(x);
  std::vector<element> es;
  for (const auto& m : normal_forms(2, 2)) es.push_back(element::from_normal(m));
  for (const auto& a : es)
    for (const auto& b : es) {
      ASSERT_EQ(apply_f(a * b), apply_f(a) * apply_f(b));
      ASSERT_EQ(apply_f(a) == apply_f(b), a == b);
    }
}

TEST(ApplyF, TowerCancellations) {
  for (std::uint64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(normalize(word{eps(k), eta(k)}), word{}) << k;
    EXPECT_EQ(normalize(word{eps(k), eta(k + 1)}), word{}) << k;
  }
}

TEST(ApplyF, UnboundedIndices) {
  using big = boost::multiprecision::cpp_int;
  const auto a = basic_element<big>::from_word(parse<big>("h18446744073709551615 e0"));
  EXPECT_EQ(print(apply_f(a).nf()), "h18446744073709551616 e1");
}

TEST(ApplyF, OverflowIsReported) {
  EXPECT_THROW((void)apply_f_word(word{eta(std::numeric_limits<std::uint64_t>::max())}), std::overflow_error);
}

TEST(NormalForms, CountsMatchEnumerationOfAllWords) {
  // Independent count: filter every word by the reference rewriter.
  for (auto [len, idx] : {std::pair<std::size_t, std::uint64_t>{4, 3}, {3, 2}, {2, 2}}) {
    std::size_t expected = 0;
    for (const auto& x : all_words(len, idx))
      if (brute::redex_list(brute::read(print(x))).empty()) ++expected;
    const auto nfs = normal_forms(len, idx);
    EXPECT_EQ(nfs.size(), expected);
    for (std::size_t n = 1; n < nfs.size(); ++n)
      ASSERT_TRUE(nfs[n - 1].size() < nfs[n].size() || nfs[n - 1] < nfs[n]);
  }
  EXPECT_EQ(normal_forms(4, 3).size(), 495u);
  EXPECT_EQ(normal_forms(3, 2).size(), 84u);
}

TEST(NormalForms, ByDegree) {
  const auto nfs = normal_forms_by_degree(6);
  std::size_t expected = 0;
  for (const auto& x : all_words(6, 5))
    if (is_normal(x) && degree(x) <= 6) ++expected;
  EXPECT_EQ(nfs.size(), expected);
  for (std::size_t n = 1; n < nfs.size(); ++n) ASSERT_TRUE(degree_less(nfs[n - 1], nfs[n]));
}

TEST(CheckAxioms, InstanceExamples) {
  EXPECT_EQ(normalize(w("e0 h0")), word{});
  // eps f^2(m) = f(m) eps at m = h0
  EXPECT_EQ(normalize(w("e0 h2")), w("h1 e0"));
  EXPECT_EQ(normalize(w("h1 e0")), w("h1 e0"));
  // f(m) eta = eta m at m = e0
  EXPECT_EQ(normalize(w("e1 h0")), w("h0 e0"));
}

TEST(CheckAxioms, PassesWithCounts) {
  const auto r = check_axioms(2, 2);
  ASSERT_TRUE(r.passed());
  ASSERT_EQ(r.checks.size(), 7u);
  EXPECT_EQ(r.find(identity_ids::eps_eta)->instances, 1u);
  EXPECT_EQ(r.find(identity_ids::eps_f2)->instances, 28u);
  EXPECT_EQ(r.find(identity_ids::retraction)->instances, 28u);
}

TEST(CheckAxioms, ParallelMatchesSerial) {
  const auto a = check_axioms(3, 2, 1);
  const auto b = check_axioms(3, 2, 4);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t n = 0; n < a.checks.size(); ++n) {
    EXPECT_EQ(a.checks[n].id, b.checks[n].id);
    EXPECT_EQ(a.checks[n].instances, b.checks[n].instances);
    EXPECT_EQ(a.checks[n].passed(), b.checks[n].passed());
  }
}

TEST(CheckAxioms, RejectsZeroBounds) { EXPECT_THROW((void)check_axioms(0, 3), std::invalid_argument); }

TEST(InN, Examples) {
  const auto e = in_N(el("e0"), 4);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->nf(), word{});

  const auto one = in_N(el("1"), 4);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->nf(), w("h0"));
}

TEST(InN, ProductOfMembersHasConstructiveWitness) {
  const auto m1 = el("h1 e0"), m2 = el("e2");
  const auto product = n_image(m1) * n_image(m2);
  const auto witness = n_product_witness(m1, m2);
  EXPECT_EQ(n_image(witness), product);
  const auto found = in_N(product, degree(witness.nf()));
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(n_image(*found), product);
}

TEST(InN, EtaIsNotFoundWithinBound) {
  // eta in N would force eta = eps*f(eta*eta) = h1, so no witness exists.
  EXPECT_FALSE(in_N(el("h0"), 8).has_value());
}

TEST(InN, MembershipTableAgreesWithSearch) {
  const n_membership table(6);
  for (const auto& m : normal_forms(2, 1)) {
    const auto a = element::from_normal(m);
    const auto by_search = in_N(a, 6);
    const auto by_table = table.witness(a);
    ASSERT_EQ(by_search.has_value(), by_table.has_value()) << print(m);
    if (by_search) {
      ASSERT_EQ(*by_search, *by_table);
    }
  }
}

TEST(CheckNClosure, Examples) {
  // m1 = m2 = 1
  EXPECT_EQ(normalize(w("e0 e0")), w("e0 e0"));
  EXPECT_EQ(normalize(w("e0 e1")), w("e0 e0"));
  // m1 = h0, m2 = 1
  EXPECT_EQ(normalize(w("e0 h1 e0")), w("e0"));
  EXPECT_EQ(normalize(w("e0 e1 h2")), w("e0"));
  // n = eps f(n eta) at n = e0
  EXPECT_EQ(normalize(w("e0 e1 h1")), w("e0"));
}

TEST(CheckNClosure, Passes) {
  const auto r = check_N_closure(2, 2);
  ASSERT_TRUE(r.passed());
  EXPECT_EQ(r.find(identity_ids::n_closure)->instances, 28u * 28u);
  EXPECT_EQ(r.find(identity_ids::n_retraction)->instances, 28u);
}

TEST(Prop3, AllCriteriaFail) {
  const auto r = evaluate_prop3();
  EXPECT_FALSE(r.f_fixes_eta.holds);
  EXPECT_EQ(r.f_fixes_eta.lhs, w("h1"));
  EXPECT_EQ(r.f_fixes_eta.rhs, w("h0"));
  EXPECT_FALSE(r.f_fixes_eps.holds);
  EXPECT_EQ(r.f_fixes_eps.lhs, w("e1"));
  EXPECT_FALSE(r.eta_eps_is_unit.holds);
  EXPECT_EQ(r.eta_eps_is_unit.lhs, w("h0 e0"));
  EXPECT_EQ(r.eta_eps_is_unit.rhs, word{});
  EXPECT_FALSE(r.f_is_inner.holds);
  ASSERT_TRUE(r.f_is_inner.at.has_value());
  EXPECT_EQ(*r.f_is_inner.at, word{});
  EXPECT_EQ(r.f_is_inner.rhs, w("h0 e0"));
  EXPECT_EQ(r.derived_iso(), std::optional<bool>(false));
}

TEST(Prop3, DerivationRule) {
  EXPECT_EQ(prop3_report::derive(true, true, true, true), std::optional<bool>(true));
  EXPECT_EQ(prop3_report::derive(false, false, false, false), std::optional<bool>(false));
  EXPECT_EQ(prop3_report::derive(true, false, false, false), std::nullopt);
}

TEST(OpenQuestion, NotIso) {
  const auto v = answer_open_question();
  EXPECT_EQ(v.verdict, iso_verdict::not_iso);
  EXPECT_EQ(v.eta_eps.result(), w("h0 e0"));
  EXPECT_TRUE(v.eta_eps.steps.empty());
  EXPECT_EQ(v.eps_eta.result(), word{});
  EXPECT_EQ(v.eta_eps_squared, w("h0 e0"));
  EXPECT_FALSE(v.confluence_certified.has_value());
}

}  // namespace
}  // namespace admon
