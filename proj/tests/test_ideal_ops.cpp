#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psi/errors.hpp"
#include "psi/group_action.hpp"
#include "psi/parse.hpp"
#include "psi/symmetric_ideal.hpp"

using namespace psi;

namespace {

Polynomial P(const char* text, std::size_t d) { return parse_polynomial(text, d); }
SymmetricIdeal Psi(const char* text, std::size_t d) { return SymmetricIdeal::psi(P(text, d)); }

std::size_t oracle_mu_of_psi(const Polynomial& f) {
  return oracle::mu(oracle::full_orbit(f), f.num_vars());
}

}  // namespace

TEST(Psi, Examples) {
  auto i = Psi("x1", 2);
  EXPECT_EQ(mu(i), 2u);
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(ideal_equal(i, SymmetricIdeal::from_generators({P("x1", 2), P("x2", 2)}, 2)));
  EXPECT_EQ(mu(Psi("x1*x2 + x3*x4", 4)), 3u);
  EXPECT_EQ(mu(Psi("x1 + x2 + x3 + x4 + x5", 5)), 1u);
  EXPECT_EQ(Psi("x1", 2).provenance(), Provenance::PsiOf);
  ASSERT_TRUE(Psi("x1", 2).psi_generator());
  EXPECT_THROW(Psi("x1 + x2^2", 2), DomainError);
  EXPECT_THROW(SymmetricIdeal::psi(Polynomial(2)), DomainError);
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu(power(Psi("x1", 2), 2)), 3u);
  EXPECT_EQ(mu(Psi("x1 - x2", 2)), 1u);
  EXPECT_EQ(mu(Psi("x1*x2", 4)), 6u);
  EXPECT_EQ(mu(Psi("x1 - x2", 4)), 3u);
  // Generators in two degrees: x1 and x2^2 (x2^2 is not in (x1)).
  auto mixed = SymmetricIdeal::from_generators({P("x1", 2), P("x2^2", 2), P("x1*x2", 2)}, 2);
  EXPECT_EQ(mu(mixed), 2u);
  EXPECT_FALSE(mixed.generated_in_single_degree());
  EXPECT_EQ(mixed.min_degree(), 1u);
  EXPECT_EQ(mixed.max_generator_degree(), 2u);
  EXPECT_EQ(mu(SymmetricIdeal::from_generators({}, 3)), 0u);
}

TEST(Product, Examples) {
  EXPECT_EQ(mu(product(Psi("x1", 2), Psi("x1", 2))), 3u);
  auto ij = product(Psi("x1*x2", 4), Psi("x1 - x2", 4));
  EXPECT_TRUE(ideal_equal(ij, Psi("x1^2*x2 - x1*x2*x3", 4)));
  EXPECT_EQ(ij.provenance(), Provenance::Product);

  // Shift by the k-symmetric x1x2x3x4.
  auto j = Psi("x1*x2 + x3*x4", 4);
  auto shifted = product(Psi("x1*x2*x3*x4", 4), j);
  EXPECT_EQ(mu(shifted), mu(j));
  for (const auto& g : shifted.generators()) {
    EXPECT_TRUE(exact_quotient(g, P("x1*x2*x3*x4", 4)).has_value());
  }
  EXPECT_THROW(product(Psi("x1", 2), Psi("x1", 3)), DimensionMismatch);
}

TEST(Power, Examples) {
  EXPECT_TRUE(ideal_equal(power(Psi("x1 - x2", 3), 2), Psi("x1^2 - 2*x1*x2 + x2^2", 3)));
  auto i = Psi("x1^2 + x2*x3", 3);
  EXPECT_TRUE(ideal_equal(power(i, 1), i));
  auto sq = power(Psi("x1", 2), 2);
  EXPECT_EQ(mu(sq), 3u);
  EXPECT_GT(mu(sq), factorial(2));
  EXPECT_EQ(sq.provenance(), Provenance::Power);
  EXPECT_THROW(power(i, 0), DomainError);
}

TEST(Hilbert, Examples) {
  auto zero = SymmetricIdeal::from_generators({}, 2);
  for (std::uint64_t m = 0; m <= 6; ++m) EXPECT_EQ(hilbert_R_mod_I(zero, m), m + 1);
  auto i = Psi("x1^2*x2", 2);
  EXPECT_EQ(hilbert_I(i, 2), 0u);
  EXPECT_EQ(hilbert_I(i, 3), 2u);
  EXPECT_EQ(hilbert_I(i, 4), 3u);
  EXPECT_EQ(hilbert_I(i, 5), 4u);
  EXPECT_EQ(hilbert_table(i, 5), (std::vector<std::uint64_t>{0, 0, 0, 2, 3, 4}));
  EXPECT_EQ(default_cutoff(i), 3u + 2u + 2u);
}

TEST(Hilbert, GeneralQuadricInFiveVariables) {
  // Generic-enough quadric: the orbit spans a 14-dimensional subspace and
  // the quotient is 1 in degree 2 and 0 from degree 3 on.
  auto i = Psi("x1^2 + 2*x1*x2 + 3*x2*x3 - 5*x3^2 + 7*x4*x5 + x1*x5 - 2*x4^2", 5);
  EXPECT_EQ(mu(i), 14u);
  EXPECT_EQ(hilbert_R_mod_I(i, 2), 1u);
  EXPECT_EQ(hilbert_R_mod_I(i, 3), 0u);
}

TEST(Cache, CopiesShareAndAgree) {
  auto i = Psi("x1*x2 - x3^2", 3);
  auto copy = i;
  EXPECT_EQ(i.piece(4), copy.piece(4));
  EXPECT_EQ(hilbert_I(i, 4), oracle::psi_piece_dim(P("x1*x2 - x3^2", 3), 4));
}

// mu and Hilbert values against the naive span oracle.
TEST(Property, MuAndHilbertMatchOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto f = oracle::random_homogeneous(d, 1 + trial % 3, rng);
    auto i = SymmetricIdeal::psi(f);
    EXPECT_EQ(mu(i), oracle_mu_of_psi(f)) << f;
    const auto k = require_homogeneous(f, "test");
    for (std::uint64_t n = k; n <= k + 2; ++n) {
      EXPECT_EQ(hilbert_I(i, n), oracle::psi_piece_dim(f, n)) << f << " n=" << n;
    }
  }
}

// mu <= d!, mu = 1 iff k-symmetric, H_I <= H_R, and the f(1) = 0 bound.
TEST(Property, PsiInvariants) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + trial % 4;
    auto f = oracle::random_homogeneous(d, 1 + trial % 3, rng);
    auto i = SymmetricIdeal::psi(f);
    const auto m = mu(i);
    EXPECT_LE(m, factorial(d));
    EXPECT_EQ(m == 1, is_k_symmetric(f)) << f;
    for (std::uint64_t n = 0; n <= default_cutoff(i); ++n) {
      EXPECT_LE(hilbert_I(i, n), hilbert_R(d, static_cast<std::int64_t>(n)));
    }
    if (auto a = is_strongly_homogeneous(f); a && f.eval_at_one() == 0) {
      EXPECT_LE(m, dim_R_a(*a, d) - 1) << f;
    }
  }
}

// Strongly homogeneous f with f(1) = 0, built deliberately.
TEST(Property, VanishingStronglyHomogeneousBound) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto parts = partitions_of(2 + trial % 2, d);
    const auto& a = parts[trial % parts.size()];
    auto ms = monomials_of_order_type(a, d);
    if (ms.size() < 2) continue;
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial f(d);
    Scalar sum = 0;
    for (std::size_t j = 0; j + 1 < ms.size(); ++j) {
      Scalar c = coef(rng);
      f.add_term(ms[j], c);
      sum += c;
    }
    f.add_term(ms.back(), -sum);
    if (f.is_zero()) continue;
    EXPECT_LE(mu(SymmetricIdeal::psi(f)), dim_R_a(a, d) - 1) << f;
  }
}

TEST(Property, KSymmetricFactorGivesPrincipalProduct) {
  std::mt19937_64 rng(43);
  const std::vector<const char*> symmetric{"x1*x2*x3", "x1 + x2 + x3", "x1^2 + x2^2 + x3^2",
                                           "x1*x2 - x1*x3 + x2*x3"};
  for (int trial = 0; trial < 20; ++trial) {
    auto f = P(symmetric[trial % symmetric.size()], 3);
    if (!is_k_symmetric(f)) continue;
    auto g = oracle::random_homogeneous(3, 1 + trial % 2, rng);
    EXPECT_TRUE(ideal_equal(product(SymmetricIdeal::psi(f), SymmetricIdeal::psi(g)),
                            SymmetricIdeal::psi(f * g)))
        << f << " * " << g;
  }
}

// mu(IJ) >= max(mu(I), mu(J)) + 1 when neither generator is k-symmetric.
TEST(Property, ProductMuGrows) {
  std::mt19937_64 rng(47);
  int checked = 0;
  for (int trial = 0; checked < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto f = oracle::random_homogeneous(d, 1 + trial % 3, rng);
    auto g = oracle::random_homogeneous(d, 1 + (trial / 3) % 3, rng);
    if (is_k_symmetric(f) || is_k_symmetric(g)) continue;
    ++checked;
    auto i = SymmetricIdeal::psi(f);
    auto j = SymmetricIdeal::psi(g);
    EXPECT_GE(mu(product(i, j)), std::max(mu(i), mu(j)) + 1) << f << " ; " << g;
  }
}

TEST(IdealEqual, FieldsMustAgree) {
  auto q = Psi("x1", 2);
  auto p = SymmetricIdeal::psi(P("x1", 2), Field::prime(3));
  EXPECT_THROW(ideal_equal(q, p), FieldError);
}
