#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psi/group_action.hpp"
#include "psi/partition.hpp"
#include "psi/symmetric_ideal.hpp"

namespace psi {

enum class VerdictKind { IsPsi, NotPsi, Inconclusive };

std::string to_string(VerdictKind kind);

// mu(I) exceeds |S_d|.
struct MuBoundCertificate {
  std::size_t mu = 0;
  std::uint64_t d_factorial = 0;
};

// g1, g2 in I_n with disjoint order-type supports and nonzero values at
// the all-ones point, I generated in degree n. a and b list the order types
// of g1 and g2 in canonical order; usually one type each.
struct OrderTypePairCertificate {
  std::uint64_t degree = 0;
  std::vector<Partition> a;
  std::vector<Partition> b;
  Polynomial g1;
  Polynomial g2;
};

// Minimal generators in more than one degree; a psi is generated in the
// degree of its generator.
struct GeneratorDegreesCertificate {
  std::uint64_t low = 0;
  std::uint64_t high = 0;
};

using Certificate = std::variant<std::monostate, MuBoundCertificate, OrderTypePairCertificate,
                                 GeneratorDegreesCertificate>;

struct PsiVerdict {
  VerdictKind verdict = VerdictKind::Inconclusive;
  // Set for IsPsi: ideal_equal(I, psi(*witness)) was verified.
  std::optional<Polynomial> witness;
  Certificate certificate;
  std::string notes;
};

PsiVerdict mu_bound_check(const SymmetricIdeal& ideal);

// Scans W_a = I_n ∩ R_a over the partitions a of n in canonical order and
// reports the first two on which evaluation at the all-ones point does not
// vanish identically. When fewer than two single types qualify, searches
// splittings S, T \ S of the order types T occurring in I_n for one where
// both W_S and W_{T\S} qualify (up to kMaxUnionSearchTypes types).
PsiVerdict order_type_obstruction(const SymmetricIdeal& ideal);

inline constexpr std::size_t kMaxUnionSearchTypes = 14;

// Re-checks a verdict against the ideal using only the data it carries.
bool validate_certificate(const SymmetricIdeal& ideal, const PsiVerdict& verdict);
bool validate_order_type_pair(const SymmetricIdeal& ideal, const Polynomial& g1, const Polynomial& g2);

// Every graded piece up to the top generator degree is spanned by monomials.
bool is_monomial_ideal(const SymmetricIdeal& ideal);

// m with I = (m)_{S_d}: I is monomial, generated in one degree, and I_n = R_a
// for a single order type a. Returns x^a.
std::optional<Monomial> monomial_psi_test(const SymmetricIdeal& ideal);

struct StronglyHomogeneousReport {
  bool monomial_ideal = false;
  std::optional<Partition> order_type;  // set when f is strongly homogeneous
  std::optional<Monomial> monomial;     // from monomial_psi_test
  // monomial ideal implies f strongly homogeneous and (f) = (m).
  bool consistent = true;
};

StronglyHomogeneousReport strongly_homogeneous_psi_check(const Polynomial& f,
                                                         const Field& field = Field::rationals());

// (x^a)(x^b) is a psi iff a or b is a constant tuple.
bool product_monomial_psi_predict(const Partition& a, const Partition& b, std::size_t d);
// Builds the product and runs monomial_psi_test on it.
bool product_monomial_psi_constructive(const Partition& a, const Partition& b, std::size_t d);

struct PowerAnalysisOptions {
  // Largest exponent tried when searching for the first I^k with mu > d!.
  // nullopt: the smallest k with mu(I) + k - 1 > d!.
  std::optional<unsigned> max_exponent;
};

struct PowerReport {
  std::size_t d = 0;
  std::size_t mu = 0;
  bool k_symmetric = false;
  // When k-symmetric, every I^k equals (f^k)_{S_d}.
  bool all_powers_psi = false;

  bool is_monomial = false;
  // Monomial f: I^2 is a psi iff f is a power of x1...xd.
  std::optional<bool> monomial_square_predicted;
  // d = 2: I^2 is a psi iff f is k-symmetric.
  std::optional<bool> two_var_square_predicted;
  // check_ideal(I^2, {f^2}).
  PsiVerdict square_verdict;
  // ideal_equal(I^2, (f^2)_{S_d}).
  bool square_is_psi_of_f_squared = false;

  // Not k-symmetric: the first k with mu(I^k) > d!, searched up to exponent_cap.
  unsigned exponent_cap = 0;
  std::optional<unsigned> first_failing_exponent;
  std::vector<std::size_t> power_mus;  // mu(I^1), mu(I^2), ...

  // Every theorem-backed prediction agrees with the constructive result.
  bool consistent = true;
};

PowerReport power_psi_analysis(const Polynomial& f, const PowerAnalysisOptions& options = {});

struct StabilizerProductProof {
  StabilizerReport stab_f;
  StabilizerReport stab_g;
  std::size_t product_size = 0;
  // Stab_f = A_d and |Stab_g| = 2 (or with f and g swapped).
  bool alternating_case = false;
};

// Fires when Stab_f Stab_g = S_d, in which case (f)(g) = (fg).
std::optional<StabilizerProductProof> stabilizer_product_criterion(const Polynomial& f,
                                                                   const Polynomial& g);

struct TwoVarProductReport {
  bool predicted_psi = false;  // f or g k-symmetric
  std::size_t product_mu = 0;
  PsiVerdict mu_verdict;       // mu_bound_check on the product
  bool consistent = false;
};

// d = 2 only.
TwoVarProductReport two_var_product_psi_test(const Polynomial& f, const Polynomial& g);

// Generator degrees, mu bound, order-type obstruction, then witness search
// (monomial characterization, the recorded psi generator, a single generator,
// the supplied candidates).
// IsPsi is only reported with a verified witness.
PsiVerdict check_ideal(const SymmetricIdeal& ideal, const std::vector<Polynomial>& candidates = {});

}  // namespace psi
