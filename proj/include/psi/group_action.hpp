#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "psi/partition.hpp"
#include "psi/permutation.hpp"
#include "psi/polynomial.hpp"

namespace psi {

// sigma.f = f(x_{sigma(1)}, ..., x_{sigma(d)}): the exponent of x_i in a
// monomial moves to x_{sigma(i)}.
Monomial act(const Permutation& sigma, const Monomial& m);
Polynomial act(const Permutation& sigma, const Polynomial& f);

// Distinct elements of the S_d-orbit of f, in canonical polynomial order.
std::vector<Polynomial> orbit(const Polynomial& f, std::size_t cap = kDefaultGroupCap);

// c with g = c*f, if it exists. c is read off the leading terms and then
// checked on every term. Both inputs nonzero.
std::optional<Scalar> proportionality_constant(const Polynomial& g, const Polynomial& f);

// The k-stabilizer {sigma : sigma.f = c f, c != 0} with its character.
struct StabilizerReport {
  std::size_t d = 0;
  std::vector<Permutation> elements;  // lexicographic order
  std::vector<Scalar> characters;     // characters[i] belongs to elements[i]
  bool is_full_group = false;
  bool is_alternating = false;

  std::size_t size() const { return elements.size(); }
  bool contains(const Permutation& sigma) const;
  // Character of an element; throws DomainError when sigma is not in the group.
  const Scalar& character(const Permutation& sigma) const;
};

StabilizerReport k_stabilizer(const Polynomial& f, std::size_t cap = kDefaultGroupCap);

enum class SymmetryCheck {
  // Proportionality under the d-1 adjacent transpositions, which generate S_d.
  AdjacentTranspositions,
  // Every element of S_d; kept for cross-checking.
  FullEnumeration,
};

bool is_k_symmetric(const Polynomial& f,
                    SymmetryCheck method = SymmetryCheck::AdjacentTranspositions,
                    std::size_t cap = kDefaultGroupCap);

// Strongly homogeneous components of f, keyed by order type (canonical order).
using OrderTypeMap = std::map<Partition, Polynomial, PartitionDescending>;
using OrderTypeSet = std::set<Partition, PartitionDescending>;

OrderTypeMap order_type_decompose(const Polynomial& f);
OrderTypeSet order_types_of(const Polynomial& f);

// (g', h): g' collects the components of f whose order type is in `types`,
// h = f - g' shares no order type with `types`.
std::pair<Polynomial, Polynomial> order_type_split(const Polynomial& f, const OrderTypeSet& types);

// Common order type when all terms of f share one.
std::optional<Partition> is_strongly_homogeneous(const Polynomial& f);

bool share_order_types(const Polynomial& f, const Polynomial& g);

// {sigma * tau : sigma in a, tau in b}.
std::set<Permutation> subgroup_product(const std::vector<Permutation>& a,
                                       const std::vector<Permutation>& b);

}  // namespace psi
