// psilab: construct, analyze, compare and survey principal symmetric ideals.
//
// stdout carries JSON or CSV only; diagnostics go to stderr.
// Exit codes: 0 success, 2 usage or input error, 3 internal error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psi/errors.hpp"
#include "psi/field.hpp"
#include "psi/group_action.hpp"
#include "psi/hilbert_sym.hpp"
#include "psi/ideal_spec.hpp"
#include "psi/parse.hpp"
#include "psi/psi_checks.hpp"
#include "psi/serialize.hpp"
#include "psi/survey.hpp"
#include "psi/symmetric_ideal.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Common {
  std::size_t vars = 0;
  std::string field = "q";
  std::optional<std::uint64_t> max_degree;
  bool csv = false;
};

std::size_t require_vars(const Common& c) {
  if (c.vars == 0) throw psi::DomainError("--vars must be at least 1");
  return c.vars;
}

void emit(const psi::Json& j) { std::cout << j.dump() << '\n'; }

psi::SymmetricIdeal psi_of(const std::string& text, const Common& c) {
  const auto d = require_vars(c);
  return psi::SymmetricIdeal::psi(psi::parse_polynomial(text, d), psi::Field::parse(c.field));
}

void cmd_psi(const std::string& poly, const Common& c) {
  const auto ideal = psi_of(poly, c);
  emit(psi::to_json(ideal, c.max_degree.value_or(psi::default_cutoff(ideal))));
}

void cmd_mu(const std::string& poly, const Common& c) {
  emit(psi::Json{{"mu", psi::mu(psi_of(poly, c))}});
}

void cmd_hilbert(const std::string& poly, const Common& c) {
  const auto ideal = psi_of(poly, c);
  psi::HFTable table{psi::hilbert_table(ideal, c.max_degree.value_or(psi::default_cutoff(ideal)))};
  if (c.csv) {
    std::cout << table.to_csv();
  } else {
    emit(psi::Json{{"d", ideal.num_vars()}, {"hilbert", psi::to_json(table)}});
  }
}

void cmd_orbit(const std::string& poly, const Common& c) {
  const auto f = psi::parse_polynomial(poly, require_vars(c));
  psi::Json elements = psi::Json::array();
  for (const auto& g : psi::orbit(f)) elements.push_back(g.to_string());
  emit(psi::Json{{"d", c.vars}, {"size", elements.size()}, {"orbit", elements}});
}

void cmd_stab(const std::string& poly, const Common& c) {
  const auto f = psi::parse_polynomial(poly, require_vars(c));
  emit(psi::to_json(psi::k_stabilizer(f)));
}

void cmd_check(const std::vector<std::string>& specs, bool as_product, bool as_gens,
               const Common& c) {
  const auto d = require_vars(c);
  const auto field = psi::Field::parse(c.field);
  if (as_product && as_gens) throw psi::DomainError("--product and --gens are exclusive");
  if (specs.empty()) throw psi::DomainError("check needs at least one ideal spec");

  std::optional<psi::EvaluatedIdeal> target;
  if (as_gens) {
    std::vector<psi::Polynomial> gens;
    for (const auto& s : specs) gens.push_back(psi::parse_polynomial(s, d));
    target = psi::make_gens(gens, d, field);
  } else if (as_product) {
    if (specs.size() < 2) throw psi::DomainError("--product needs at least two ideal specs");
    target = psi::evaluate_ideal_spec(specs[0], d, field);
    for (std::size_t i = 1; i < specs.size(); ++i) {
      target = psi::make_product(*target, psi::evaluate_ideal_spec(specs[i], d, field));
    }
  } else {
    if (specs.size() != 1) throw psi::DomainError("expected one ideal spec (use --product or --gens)");
    target = psi::evaluate_ideal_spec(specs[0], d, field);
  }

  const auto verdict = psi::check_ideal(target->ideal, target->candidates);
  auto j = psi::to_json(verdict);
  j["validated"] = psi::validate_certificate(target->ideal, verdict);
  j["mu"] = psi::mu(target->ideal);
  emit(j);
}

void cmd_survey(psi::SurveyConfig config, const Common& c, bool json) {
  config.d = require_vars(c);
  psi::Field::parse(c.field).require_characteristic_zero("survey");
  if (c.max_degree) config.cutoff = c.max_degree;
  config.validate();
  const auto rows = psi::run_survey(config);
  if (!json) {
    std::cout << psi::survey_csv(config, rows);
    return;
  }
  psi::Json out = psi::Json::array();
  for (const auto& r : rows) {
    psi::Json row{{"sample", r.index},
                  {"mu", r.mu},
                  {"mu_upper_bound_holds", r.mu_upper_bound_holds},
                  {"hf_matches_hss", r.hf_matches_hss}};
    row["first_mismatch_degree"] =
        r.first_mismatch_degree ? psi::Json(*r.first_mismatch_degree) : psi::Json(nullptr);
    out.push_back(row);
  }
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal symmetric ideal laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--vars,-d", common.vars, "number of variables d")->check(CLI::PositiveNumber);
  app.add_option("--field", common.field, "coefficient field: q or fp:<p>");
  app.add_option("--max-degree", common.max_degree, "largest degree reported");
  app.add_flag("--csv", common.csv, "CSV output where supported");
  app.add_flag("--json", "JSON output (default except for survey)");

  std::string poly;
  auto add_poly_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("polynomial", poly, "homogeneous polynomial in x1..xd")->required();
    return sub;
  };
  auto* psi_cmd = add_poly_cmd("psi", "generators and Hilbert function of (f)_{S_d}");
  auto* mu_cmd = add_poly_cmd("mu", "minimal number of generators of (f)_{S_d}");
  auto* hilbert_cmd = add_poly_cmd("hilbert", "Hilbert function of (f)_{S_d}");
  auto* orbit_cmd = add_poly_cmd("orbit", "distinct elements of the S_d-orbit of f");
  auto* stab_cmd = add_poly_cmd("stab", "k-stabilizer of f with its character");

  std::vector<std::string> specs;
  bool as_product = false;
  bool as_gens = false;
  auto* check_cmd = app.add_subcommand("check", "decide whether an ideal is principal symmetric");
  check_cmd->add_option("specs", specs, "ideal specs, or polynomials with --gens")->required();
  check_cmd->add_flag("--product", as_product, "check the product of the given specs");
  check_cmd->add_flag("--gens", as_gens, "positional arguments are generators");

  psi::SurveyConfig survey;
  auto* survey_cmd = app.add_subcommand("survey", "random general psi versus the predicted shape");
  survey_cmd->add_option("--degree,-n", survey.degree, "generator degree n");
  survey_cmd->add_option("--samples", survey.samples, "number of samples");
  survey_cmd->add_option("--coeff-bound", survey.coeff_bound, "coefficients drawn from [-B, B]");
  survey_cmd->add_option("--seed", survey.seed, "64-bit seed");
  survey_cmd->add_option("--cutoff", survey.cutoff, "largest degree compared");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*psi_cmd) cmd_psi(poly, common);
    if (*mu_cmd) cmd_mu(poly, common);
    if (*hilbert_cmd) cmd_hilbert(poly, common);
    if (*orbit_cmd) cmd_orbit(poly, common);
    if (*stab_cmd) cmd_stab(poly, common);
    if (*check_cmd) cmd_check(specs, as_product, as_gens, common);
    if (*survey_cmd) cmd_survey(survey, common, app.count("--json") > 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "psilab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "psilab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "psilab: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
