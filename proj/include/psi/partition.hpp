#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "psi/monomial.hpp"

namespace psi {

// Non-increasing tuple of natural numbers, stored without trailing zeros.
// Use padded(d) for the d-part order-type form.
class Partition {
 public:
  Partition() = default;
  // Sorts and trims; any order of parts is accepted.
  explicit Partition(std::vector<Exponent> parts);

  const std::vector<Exponent>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::uint64_t size() const { return size_; }
  std::vector<Exponent> padded(std::size_t d) const;
  // x^a = x1^{a1} ... xd^{ad}; requires length() <= d.
  Monomial leading_monomial(std::size_t d) const;
  // All d parts equal (after padding).
  bool is_constant(std::size_t d) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Exponent> parts_;
  std::uint64_t size_ = 0;
};

// Comparator for the canonical partition order: lexicographically decreasing.
struct PartitionDescending {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// Partitions of n with at most max_parts parts, lexicographically decreasing.
std::vector<Partition> partitions_of(std::uint64_t n, std::size_t max_parts);

// P(n).
std::uint64_t partition_count(std::uint64_t n);

Partition order_type(const Monomial& m);

// d! / (n_1! ... n_k!) where n_i are the multiplicities of the values of a
// padded to d parts. Zero when a has more than d parts.
std::uint64_t dim_R_a(const Partition& a, std::size_t d);

// Distinct permutations of the padded exponent tuple, grevlex-descending.
std::vector<Monomial> monomials_of_order_type(const Partition& a, std::size_t d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// binom(n + d - 1, d - 1): number of degree-n monomials in d variables.
std::uint64_t hilbert_R(std::size_t d, std::int64_t n);

// True iff some monomial of type a divides some (equivalently every up to
// symmetry) monomial of type b in d variables.
bool order_type_divides(const Partition& a, const Partition& b, std::size_t d);

inline std::ostream& operator<<(std::ostream& os, const Partition& v) { return os << v.to_string(); }

}  // namespace psi
