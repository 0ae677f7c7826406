#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "psi/graded_linalg.hpp"
#include "psi/permutation.hpp"
#include "psi/polynomial.hpp"

namespace psi {

enum class Provenance { PsiOf, Product, Power, Explicit };

std::string to_string(Provenance p);

// Homogeneous ideal of k[x1..xd] held through a minimal homogeneous
// generating set. Graded pieces are computed on demand and cached; copies
// share the cache, which is filled under a per-ideal lock.
class SymmetricIdeal {
 public:
  // (f)_{S_d}: the generators are the reduced basis of span(orbit(f)).
  static SymmetricIdeal psi(const Polynomial& f, const Field& field = Field::rationals(),
                            std::size_t cap = kDefaultGroupCap);
  // Ideal generated by the given homogeneous polynomials (zeros ignored).
  static SymmetricIdeal from_generators(const std::vector<Polynomial>& gens, std::size_t d,
                                        const Field& field = Field::rationals(),
                                        Provenance provenance = Provenance::Explicit);

  std::size_t num_vars() const { return d_; }
  const Field& field() const { return field_; }
  Provenance provenance() const { return provenance_; }
  // The f of (f)_{S_d} when built by psi().
  const std::optional<Polynomial>& psi_generator() const { return psi_generator_; }
  // Minimal homogeneous generators, grouped by ascending degree.
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  std::uint64_t min_degree() const { return min_degree_; }
  std::uint64_t max_generator_degree() const { return max_degree_; }
  bool generated_in_single_degree() const { return !is_zero() && min_degree_ == max_degree_; }

  // I_n, the degree-n graded piece.
  GradedPiece piece(std::uint64_t n) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::uint64_t, GradedPiece> pieces;
  };

  SymmetricIdeal(std::size_t d, Field field) : d_(d), field_(field), cache_(std::make_shared<Cache>()) {}
  void build(const std::vector<Polynomial>& gens);
  std::vector<Polynomial> generators_of_degree(std::uint64_t n) const;

  std::size_t d_ = 0;
  Field field_;
  Provenance provenance_ = Provenance::Explicit;
  std::optional<Polynomial> psi_generator_;
  std::vector<Polynomial> generators_;
  std::uint64_t min_degree_ = 0;
  std::uint64_t max_degree_ = 0;
  std::shared_ptr<Cache> cache_;
};

// Minimal number of homogeneous generators, summed degree by degree as
// dim I_n - dim(R_1 I_{n-1}).
std::size_t mu(const SymmetricIdeal& ideal);

// IJ from pairwise generator products, reduced immediately.
SymmetricIdeal product(const SymmetricIdeal& a, const SymmetricIdeal& b);

// I^k by repeated products; k >= 1.
SymmetricIdeal power(const SymmetricIdeal& ideal, unsigned k);

bool ideal_equal(const SymmetricIdeal& a, const SymmetricIdeal& b);

std::uint64_t hilbert_I(const SymmetricIdeal& ideal, std::uint64_t n);
std::uint64_t hilbert_R_mod_I(const SymmetricIdeal& ideal, std::uint64_t n);

// H_I(0..cutoff).
std::vector<std::uint64_t> hilbert_table(const SymmetricIdeal& ideal, std::uint64_t cutoff);

// Largest generator degree + d + 2: the default upper degree for checks
// that compare Hilbert functions "for all n".
std::uint64_t default_cutoff(const SymmetricIdeal& ideal);

}  // namespace psi
