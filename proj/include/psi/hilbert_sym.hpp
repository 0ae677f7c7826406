#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psi/field.hpp"
#include "psi/group_action.hpp"
#include "psi/partition.hpp"
#include "psi/polynomial.hpp"

namespace psi {

// Hilbert function values for degrees 0..cutoff.
struct HFTable {
  std::vector<std::uint64_t> values;

  std::uint64_t cutoff() const { return values.empty() ? 0 : values.size() - 1; }
  std::uint64_t at(std::uint64_t n) const { return n < values.size() ? values[n] : 0; }

  // "degree,value" rows.
  std::string to_csv() const;

  friend bool operator==(const HFTable&, const HFTable&) = default;
};

// Symmetric monomial ideal, described by the order types of its minimal
// generators (an antichain under divisibility of types).
struct SymmetricMonomialIdeal {
  std::size_t d = 0;
  OrderTypeSet selected;

  // All monomials of every selected type, for building the ideal directly.
  std::vector<Polynomial> generators() const;
  // R_b lies in the ideal (any monomial of type b is divisible by one of a selected type).
  bool covers(const Partition& b) const;

  friend bool operator==(const SymmetricMonomialIdeal&, const SymmetricMonomialIdeal&) = default;
};

struct SymmetricReduction {
  Polynomial sred;
  std::uint64_t ell = 0;
};

// f / gcd(f, (1 2).f), monic. d = 2, f homogeneous and nonzero.
SymmetricReduction symmetric_reduction(const Polynomial& f);

// 2 H_R(n - k) - H_R(n - k - ell) in two variables, H_R(m) = m + 1 for m >= 0.
std::uint64_t hf_two_var(std::uint64_t k, std::uint64_t ell, std::int64_t n);
HFTable hf_two_var_table(std::uint64_t k, std::uint64_t ell, std::uint64_t cutoff);

struct ParityWitnesses {
  Polynomial monomial;  // x1^{a+ell} x2^a, a = (k - ell)/2
  Polynomial binomial;  // x1^ell (x2^{k-ell} + x1^{k-ell})
};

// Present iff k + ell is even.
std::optional<ParityWitnesses> parity_match(std::uint64_t k, std::uint64_t ell);

// x1^ell (x2^{k-ell} + x1^{k-ell}); its psi has the Hilbert function of any
// degree-k f with deg sRed(f) = ell when the characteristic is not 2.
Polynomial binomial_witness(std::uint64_t k, std::uint64_t ell, const Field& field = Field::rationals());

// H_J(n) = sum of dim R_a over the order types a of degree n whose monomials
// lie in J.
HFTable symmetric_monomial_hf(const SymmetricMonomialIdeal& ideal, std::uint64_t cutoff);

// Predicted H_{R/I} for a general psi generated in degree n in d variables
// (characteristic 0): dim R_i below n, P(n) - 1 at n, zero above. The
// table runs to max(n, d) + 1.
HFTable hss_general_hf(std::uint64_t n, std::size_t d, const Field& field = Field::rationals());

// H_R - H_{R/I} for i in 0..cutoff.
HFTable ideal_hf_from_quotient(const HFTable& quotient, std::size_t d);

// Depth-first search for a symmetric monomial ideal J whose H_J equals the
// target on 0..target.cutoff(), adding generator types of degree at most
// gen_degree_bound (default: the target cutoff). Returns the first match in
// canonical order (include-before-exclude over types in canonical order).
std::optional<SymmetricMonomialIdeal> no_monomial_match_search(
    const HFTable& target, std::size_t d, std::optional<std::uint64_t> gen_degree_bound = std::nullopt);

}  // namespace psi
