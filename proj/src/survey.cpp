#include "psi/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "psi/errors.hpp"
#include "psi/hilbert_sym.hpp"
#include "psi/partition.hpp"
#include "psi/symmetric_ideal.hpp"

namespace psi {

void SurveyConfig::validate() const {
  if (samples < 1) throw DomainError("survey needs at least one sample");
  if (coeff_bound < 1) throw DomainError("coefficient bound must be >= 1");
  if (degree < 2) throw DomainError("survey degree must be >= 2");
  if (d < 2) throw DomainError("survey needs at least 2 variables");
}

Polynomial sample_polynomial(std::size_t d, std::uint64_t degree, std::uint64_t coeff_bound,
                             std::mt19937_64& rng) {
  const auto monomials = monomials_of_degree(d, degree);
  const auto bound = static_cast<std::int64_t>(coeff_bound);
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  while (true) {
    Polynomial f(d);
    for (const auto& m : monomials) f.add_term(m, Scalar(static_cast<long>(coeff(rng))));
    if (!f.is_zero()) return f;
  }
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t survey_mu_upper_bound(std::size_t d, std::uint64_t degree) {
  return hilbert_R(d, static_cast<std::int64_t>(degree)) - partition_count(degree) + 1;
}

SurveyRow survey_sample(const SurveyConfig& config, std::size_t index) {
  auto rng = sample_rng(config.seed, index);
  const Polynomial f = sample_polynomial(config.d, config.degree, config.coeff_bound, rng);
  const SymmetricIdeal ideal = SymmetricIdeal::psi(f);
  const HFTable predicted = hss_general_hf(config.degree, config.d);
  SurveyRow row;
  row.index = index;
  row.mu = mu(ideal);
  row.mu_upper_bound_holds = row.mu <= survey_mu_upper_bound(config.d, config.degree);
  for (std::uint64_t i = 0; i <= config.effective_cutoff(); ++i) {
    if (hilbert_R_mod_I(ideal, i) != predicted.at(i)) {
      row.first_mismatch_degree = i;
      break;
    }
  }
  row.hf_matches_hss = !row.first_mismatch_degree;
  return row;
}

std::size_t worker_threads() {
  if (const char* env = std::getenv("PSI_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SurveyRow> run_survey(const SurveyConfig& config) {
  config.validate();
  std::vector<SurveyRow> rows(config.samples);
  const std::size_t threads = std::min(config.threads ? config.threads : worker_threads(), config.samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.samples; i = next++) rows[i] = survey_sample(config, i);
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return rows;
}

std::string survey_csv(const SurveyConfig& config, const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << "sample,mu,mu_upper_bound_holds,hf_matches_hss,first_mismatch_degree\n";
  std::size_t matches = 0;
  for (const auto& r : rows) {
    out << r.index << ',' << r.mu << ',' << (r.mu_upper_bound_holds ? "true" : "false") << ','
        << (r.hf_matches_hss ? "true" : "false") << ',';
    if (r.first_mismatch_degree) out << *r.first_mismatch_degree;
    out << '\n';
    matches += r.hf_matches_hss ? 1 : 0;
  }
  out << "# d=" << config.d << " degree=" << config.degree << " seed=" << config.seed
      << " coeff_bound=" << config.coeff_bound << " cutoff=" << config.effective_cutoff() << '\n';
  out << "# match_rate," << matches << '/' << rows.size() << '\n';
  return out.str();
}

}  // namespace psi
