#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "psi/field.hpp"
#include "psi/polynomial.hpp"

namespace psi {

struct SurveyConfig {
  std::size_t d = 4;
  std::uint64_t degree = 2;
  std::size_t samples = 50;
  std::uint64_t coeff_bound = 100;
  std::uint64_t seed = 0;
  // Defaults to degree + d + 2.
  std::optional<std::uint64_t> cutoff;
  // Worker threads; 0 means PSI_LAB_THREADS or hardware concurrency.
  std::size_t threads = 0;

  void validate() const;
  std::uint64_t effective_cutoff() const { return cutoff.value_or(degree + d + 2); }
};

struct SurveyRow {
  std::size_t index = 0;
  std::size_t mu = 0;
  bool mu_upper_bound_holds = false;
  bool hf_matches_hss = false;
  std::optional<std::uint64_t> first_mismatch_degree;
};

// Every degree-n coefficient drawn uniformly from [-B, B]; the zero
// polynomial is rejected and redrawn.
Polynomial sample_polynomial(std::size_t d, std::uint64_t degree, std::uint64_t coeff_bound,
                             std::mt19937_64& rng);

// Generator for sample `index`: depends only on (seed, index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index);

SurveyRow survey_sample(const SurveyConfig& config, std::size_t index);
std::vector<SurveyRow> run_survey(const SurveyConfig& config);

// binom(n + d - 1, d - 1) - P(n) + 1.
std::uint64_t survey_mu_upper_bound(std::size_t d, std::uint64_t degree);

std::string survey_csv(const SurveyConfig& config, const std::vector<SurveyRow>& rows);

// Pool size: PSI_LAB_THREADS when set to a positive integer, else the
// hardware concurrency (at least 1).
std::size_t worker_threads();

}  // namespace psi
