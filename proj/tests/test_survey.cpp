#include <gtest/gtest.h>

#include "psi/errors.hpp"
#include "psi/survey.hpp"

using namespace psi;

TEST(Survey, SamplesAreNeverZero) {
  // B = 1 in one variable of degree 1: a third of the raw draws are zero.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = sample_rng(seed, 0);
    auto f = sample_polynomial(1, 1, 1, rng);
    EXPECT_FALSE(f.is_zero());
  }
}

TEST(Survey, SamplesDependOnlyOnSeedAndIndex) {
  auto a = sample_rng(42, 3);
  auto b = sample_rng(42, 3);
  EXPECT_EQ(sample_polynomial(4, 2, 100, a), sample_polynomial(4, 2, 100, b));
  auto c = sample_rng(42, 4);
  auto d = sample_rng(42, 3);
  EXPECT_NE(sample_polynomial(4, 2, 100, c), sample_polynomial(4, 2, 100, d));
}

TEST(Survey, RowsAndBound) {
  SurveyConfig config;
  config.d = 5;
  config.samples = 3;
  config.seed = 9;
  const auto rows = run_survey(config);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].index, i);
    EXPECT_EQ(rows[i].mu, 14u);
    EXPECT_TRUE(rows[i].mu_upper_bound_holds);
    EXPECT_TRUE(rows[i].hf_matches_hss);
  }
  EXPECT_EQ(survey_mu_upper_bound(5, 2), 14u);
  EXPECT_EQ(survey_mu_upper_bound(4, 3), 18u);
}

TEST(Survey, ConfigValidation) {
  SurveyConfig config;
  config.samples = 0;
  EXPECT_THROW(config.validate(), DomainError);
  config.samples = 1;
  config.coeff_bound = 0;
  EXPECT_THROW(config.validate(), DomainError);
  config.coeff_bound = 1;
  EXPECT_NO_THROW(config.validate());
  EXPECT_EQ(config.effective_cutoff(), 2u + 4u + 2u);
}
