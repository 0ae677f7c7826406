#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psi/errors.hpp"
#include "psi/ideal_spec.hpp"
#include "psi/parse.hpp"
#include "psi/psi_checks.hpp"

using namespace psi;

namespace {

Polynomial P(const char* text, std::size_t d) { return parse_polynomial(text, d); }
SymmetricIdeal Psi(const char* text, std::size_t d) { return SymmetricIdeal::psi(P(text, d)); }
Partition A(std::vector<Exponent> parts) { return Partition(std::move(parts)); }

SymmetricIdeal product_of_quadrics() { return product(Psi("x1*x2", 4), Psi("x1*x2 + x3*x4", 4)); }

}  // namespace

TEST(MuBound, Examples) {
  auto sq = power(Psi("x1", 2), 2);
  auto v = mu_bound_check(sq);
  EXPECT_EQ(v.verdict, VerdictKind::NotPsi);
  const auto* c = std::get_if<MuBoundCertificate>(&v.certificate);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->mu, 3u);
  EXPECT_EQ(c->d_factorial, 2u);
  EXPECT_TRUE(validate_certificate(sq, v));

  EXPECT_EQ(mu_bound_check(Psi("x1^2 - x1*x2 + 3*x2*x3", 3)).verdict, VerdictKind::Inconclusive);
  auto two = product(Psi("x1^2 + x1*x2", 2), Psi("x1", 2));
  EXPECT_EQ(mu_bound_check(two).verdict, VerdictKind::NotPsi);
}

TEST(Obstruction, ProductOfQuadrics) {
  auto i = product_of_quadrics();
  auto v = order_type_obstruction(i);
  ASSERT_EQ(v.verdict, VerdictKind::NotPsi) << v.notes;
  const auto* c = std::get_if<OrderTypePairCertificate>(&v.certificate);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->degree, 4u);
  EXPECT_TRUE(validate_certificate(i, v));
  EXPECT_TRUE(validate_order_type_pair(i, P("x1*x2*x3*x4 + x3^2*x4^2", 4),
                                       P("x2*x3^2*x4 + x1*x3*x4^2", 4)));
  // mu alone does not decide it.
  EXPECT_EQ(mu_bound_check(i).verdict, VerdictKind::Inconclusive);
}

TEST(Obstruction, MonomialPsiIsInconclusive) {
  EXPECT_EQ(order_type_obstruction(Psi("x1^2*x2", 3)).verdict, VerdictKind::Inconclusive);
}

TEST(Obstruction, ExplicitQuadrics) {
  auto i = SymmetricIdeal::from_generators({P("x1^2", 2), P("x1*x2", 2), P("x2^2", 2)}, 2);
  auto v = order_type_obstruction(i);
  ASSERT_EQ(v.verdict, VerdictKind::NotPsi);
  const auto& c = std::get<OrderTypePairCertificate>(v.certificate);
  EXPECT_EQ(c.g1, P("x1^2", 2));
  EXPECT_EQ(c.g2, P("x1*x2", 2));
  EXPECT_EQ(c.a, (std::vector<Partition>{A({2})}));
  EXPECT_EQ(c.b, (std::vector<Partition>{A({1, 1})}));
}

TEST(Obstruction, NeedsSingleGenerationDegree) {
  auto i = SymmetricIdeal::from_generators({P("x1", 2), P("x2^2", 2)}, 2);
  EXPECT_EQ(order_type_obstruction(i).verdict, VerdictKind::Inconclusive);
  auto v = check_ideal(i);
  EXPECT_EQ(v.verdict, VerdictKind::NotPsi);
  EXPECT_TRUE(std::holds_alternative<GeneratorDegreesCertificate>(v.certificate));
  EXPECT_TRUE(validate_certificate(i, v));
}

TEST(Validator, RejectsBadWitnesses) {
  auto i = product_of_quadrics();
  auto g1 = P("x1*x2*x3*x4 + x3^2*x4^2", 4);
  auto g2 = P("x2*x3^2*x4 + x1*x3*x4^2", 4);
  EXPECT_FALSE(validate_order_type_pair(i, g1, g1));                         // shared types
  EXPECT_FALSE(validate_order_type_pair(i, g1, P("x1^4", 4)));                // not in I
  EXPECT_FALSE(validate_order_type_pair(i, g1, P("x1^2*x2*x3 - x1*x2^2*x3", 4)));  // f(1) = 0
  EXPECT_FALSE(validate_order_type_pair(i, g1, P("x1*x2", 4)));               // wrong degree
  PsiVerdict forged;
  forged.verdict = VerdictKind::NotPsi;
  forged.certificate = MuBoundCertificate{99, 24};
  EXPECT_FALSE(validate_certificate(i, forged));
  PsiVerdict listed;
  listed.verdict = VerdictKind::NotPsi;
  listed.certificate = OrderTypePairCertificate{4, {A({1, 1, 1, 1})}, {A({2, 1, 1})}, g1, g2};
  EXPECT_FALSE(validate_certificate(i, listed));  // g1 also has type (2,2)
  listed.certificate = OrderTypePairCertificate{4, {A({2, 2}), A({1, 1, 1, 1})}, {A({2, 1, 1})}, g1, g2};
  EXPECT_TRUE(validate_certificate(i, listed));
  PsiVerdict fake_psi;
  fake_psi.verdict = VerdictKind::IsPsi;
  fake_psi.witness = P("x1*x2*x3*x4", 4);
  EXPECT_FALSE(validate_certificate(i, fake_psi));
}

TEST(MonomialIdeal, Examples) {
  EXPECT_TRUE(is_monomial_ideal(Psi("x1*x2", 4)));
  EXPECT_FALSE(is_monomial_ideal(Psi("x1*x2 + x3*x4", 4)));
  EXPECT_FALSE(is_monomial_ideal(Psi("x1 - x2", 2)));
  EXPECT_EQ(monomial_psi_test(Psi("x1*x2", 4)), Monomial({1, 1, 0, 0}));
  EXPECT_FALSE(monomial_psi_test(SymmetricIdeal::from_generators({P("x1^2", 2), P("x1*x2", 2)}, 2)));
  EXPECT_EQ(monomial_psi_test(Psi("x1^2*x2^2*x3^2", 3)), Monomial({2, 2, 2}));
}

TEST(StronglyHomogeneous, Examples) {
  auto r = strongly_homogeneous_psi_check(P("x1*x2", 2));
  EXPECT_TRUE(r.monomial_ideal);
  EXPECT_EQ(r.order_type, A({1, 1}));
  EXPECT_EQ(r.monomial, Monomial({1, 1}));
  EXPECT_TRUE(r.consistent);
  auto mixed = strongly_homogeneous_psi_check(P("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4", 4));
  EXPECT_FALSE(mixed.monomial_ideal);
  EXPECT_FALSE(mixed.order_type);
  EXPECT_TRUE(mixed.consistent);
  auto j = strongly_homogeneous_psi_check(P("x1*x2 + x3*x4", 4));
  EXPECT_FALSE(j.monomial_ideal);
  EXPECT_TRUE(j.consistent);
}

TEST(ProductMonomial, Examples) {
  EXPECT_TRUE(product_monomial_psi_predict(A({1, 1}), A({1, 1, 1, 1}), 4));
  EXPECT_FALSE(product_monomial_psi_predict(A({1, 1}), A({1, 1}), 4));
  EXPECT_TRUE(product_monomial_psi_predict(A({}), A({3, 1}), 2));
  EXPECT_TRUE(product_monomial_psi_constructive(A({1, 1}), A({1, 1, 1, 1}), 4));
  EXPECT_FALSE(product_monomial_psi_constructive(A({1, 1}), A({1, 1}), 4));
}

TEST(Property, MonomialPsiRecognizesItsOrderType) {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::uint64_t n = 1; n <= (d <= 4 ? 4u : 3u); ++n) {
      for (const auto& a : partitions_of(n, d)) {
        for (const auto& m : monomials_of_order_type(a, d)) {
          auto found = monomial_psi_test(SymmetricIdeal::psi(Polynomial(m, Scalar(1))));
          ASSERT_TRUE(found) << m;
          EXPECT_EQ(order_type(*found), a);
        }
      }
    }
  }
}

TEST(PowerAnalysis, DifferenceInThreeVariables) {
  auto r = power_psi_analysis(P("x1 - x2", 3));
  EXPECT_FALSE(r.k_symmetric);
  EXPECT_TRUE(r.square_is_psi_of_f_squared);
  EXPECT_EQ(r.square_verdict.verdict, VerdictKind::IsPsi);
  EXPECT_TRUE(r.consistent);
  // Cap from mu = 2: smallest k with 2 + k - 1 > 6.
  EXPECT_EQ(r.exponent_cap, 6u);
}

TEST(PowerAnalysis, LinearFormInTwoVariables) {
  auto r = power_psi_analysis(P("x1", 2));
  EXPECT_EQ(r.square_verdict.verdict, VerdictKind::NotPsi);
  EXPECT_EQ(r.power_mus.at(1), 3u);
  EXPECT_EQ(r.first_failing_exponent, 2u);
  ASSERT_TRUE(r.two_var_square_predicted);
  EXPECT_FALSE(*r.two_var_square_predicted);
  ASSERT_TRUE(r.monomial_square_predicted);
  EXPECT_FALSE(*r.monomial_square_predicted);
  EXPECT_TRUE(r.consistent);
}

TEST(PowerAnalysis, KSymmetricMonomial) {
  auto r = power_psi_analysis(P("x1^2*x2^2*x3^2", 3));
  EXPECT_TRUE(r.k_symmetric);
  EXPECT_TRUE(r.all_powers_psi);
  EXPECT_EQ(r.square_verdict.verdict, VerdictKind::IsPsi);
  EXPECT_TRUE(r.monomial_square_predicted.value_or(false));
  EXPECT_TRUE(r.consistent);
}

TEST(PowerAnalysis, TwoVariableConsistency) {
  for (const char* f : {"x1^2 + x2^2", "x1^2 - x2^2", "x1^2 + 3*x1*x2", "x1^3 - x1*x2^2", "x1*x2"}) {
    auto r = power_psi_analysis(P(f, 2));
    EXPECT_TRUE(r.consistent) << f;
  }
}

TEST(StabilizerCriterion, Examples) {
  auto f = P("x1^2*x2 + x2^2*x3 + x3^2*x1", 3);
  auto g = P("x1 - x2", 3);
  auto proof = stabilizer_product_criterion(f, g);
  ASSERT_TRUE(proof);
  EXPECT_EQ(proof->product_size, 6u);
  EXPECT_TRUE(proof->alternating_case);
  EXPECT_TRUE(ideal_equal(product(SymmetricIdeal::psi(f), SymmetricIdeal::psi(g)),
                          SymmetricIdeal::psi(f * g)));
  EXPECT_TRUE(stabilizer_product_criterion(P("x1 + x2 + x3", 3), P("x1*x2*x3", 3)));
  EXPECT_FALSE(stabilizer_product_criterion(P("x1 - x2", 4), P("x1 - x2", 4)));
}

TEST(Property, StabilizerCriterionImpliesPrincipalProduct) {
  std::mt19937_64 rng(53);
  int fired = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto f = oracle::random_homogeneous(d, 1 + trial % 3, rng, 2, 1);
    auto g = oracle::random_homogeneous(d, 1 + trial % 2, rng, 2, 1);
    if (!stabilizer_product_criterion(f, g)) continue;
    ++fired;
    EXPECT_TRUE(ideal_equal(product(SymmetricIdeal::psi(f), SymmetricIdeal::psi(g)),
                            SymmetricIdeal::psi(f * g)))
        << f << " ; " << g;
  }
  EXPECT_GT(fired, 0);
}

TEST(TwoVarProduct, Examples) {
  auto a = two_var_product_psi_test(P("x1", 2), P("x1", 2));
  EXPECT_FALSE(a.predicted_psi);
  EXPECT_EQ(a.product_mu, 3u);
  EXPECT_TRUE(a.consistent);
  EXPECT_TRUE(two_var_product_psi_test(P("x1*x2", 2), P("x1^2 + 5*x2^2 - x1*x2", 2)).predicted_psi);
  auto c = two_var_product_psi_test(P("x1 - x2", 2), P("x1", 2));
  EXPECT_TRUE(c.predicted_psi);
  EXPECT_TRUE(c.consistent);
  EXPECT_THROW(two_var_product_psi_test(P("x1", 3), P("x1", 3)), DimensionMismatch);
}

TEST(CheckIdeal, SpecExamples) {
  auto not_psi = make_product(make_psi(P("x1*x2", 4)), make_psi(P("x1*x2 + x3*x4", 4)));
  auto v = check_ideal(not_psi.ideal, not_psi.candidates);
  EXPECT_EQ(v.verdict, VerdictKind::NotPsi);
  EXPECT_TRUE(std::holds_alternative<OrderTypePairCertificate>(v.certificate));

  auto is_psi = make_product(make_psi(P("x1*x2", 4)), make_psi(P("x1 - x2", 4)));
  auto w = check_ideal(is_psi.ideal, is_psi.candidates);
  ASSERT_EQ(w.verdict, VerdictKind::IsPsi);
  ASSERT_TRUE(w.witness);
  EXPECT_TRUE(ideal_equal(is_psi.ideal, SymmetricIdeal::psi(*w.witness)));
  EXPECT_TRUE(ideal_equal(SymmetricIdeal::psi(*w.witness), Psi("x1^2*x2 - x1*x2*x3", 4)));

  auto gens = make_gens({P("x1", 2), P("x2", 2)}, 2);
  auto u = check_ideal(gens.ideal, gens.candidates);
  EXPECT_NE(u.verdict, VerdictKind::NotPsi);
  if (u.verdict == VerdictKind::IsPsi) {
    EXPECT_TRUE(ideal_equal(gens.ideal, Psi("x1", 2)));
  }
  EXPECT_EQ(check_ideal(SymmetricIdeal::from_generators({}, 2)).verdict, VerdictKind::Inconclusive);
}

// Randomized soundness: psi's are never refuted, and every verdict re-validates.
TEST(Property, CheckIdealSoundOnPsis) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto f = oracle::random_homogeneous(d, 1 + trial % 3, rng);
    auto i = SymmetricIdeal::psi(f);
    EXPECT_NE(order_type_obstruction(i).verdict, VerdictKind::NotPsi) << f;
    auto v = check_ideal(i);
    EXPECT_EQ(v.verdict, VerdictKind::IsPsi) << f;
    EXPECT_TRUE(validate_certificate(i, v));
  }
}

TEST(Property, CheckIdealCertificatesValidateOnProducts) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto e = make_product(make_psi(oracle::random_homogeneous(d, 1 + trial % 2, rng)),
                          make_psi(oracle::random_homogeneous(d, 1, rng)));
    auto v = check_ideal(e.ideal, e.candidates);
    EXPECT_TRUE(validate_certificate(e.ideal, v)) << to_string(v.verdict) << " " << v.notes;
  }
}

TEST(FieldGuards, PrimeFieldObstruction) {
  // Over F_2 the value at 1 of x1^2 + x1*x2 is 0, so only x1*x2-type data helps.
  auto i = SymmetricIdeal::from_generators({P("x1^2", 2), P("x1*x2", 2), P("x2^2", 2)}, 2,
                                           Field::prime(2));
  auto v = order_type_obstruction(i);
  EXPECT_EQ(v.verdict, VerdictKind::NotPsi);
  EXPECT_TRUE(validate_certificate(i, v));
}
