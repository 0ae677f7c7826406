#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psi/field.hpp"
#include "psi/partition.hpp"
#include "psi/polynomial.hpp"

namespace psi {

// Reduced row-echelon form of a dense matrix. Rows are ordered by pivot
// column; each pivot entry is 1 with zeros above and below.
struct RowEchelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return rows.size(); }
};

// Fraction-free (Bareiss) Gauss-Jordan elimination over Z after clearing
// row denominators; a single rational normalization pass at the end.
RowEchelon rref_fraction_free(const std::vector<std::vector<Scalar>>& matrix);

// Gauss-Jordan elimination over F_p; entries of the result are residues.
RowEchelon rref_mod_p(const std::vector<std::vector<Scalar>>& matrix, const Field& field);

// A subspace of the degree-n homogeneous polynomials, stored as its reduced
// row-echelon basis with respect to grevlex-descending monomial coordinates.
// Two pieces over the same field span the same space iff they compare equal.
class GradedPiece {
 public:
  GradedPiece() = default;
  GradedPiece(std::size_t d, std::uint64_t degree, Field field = Field::rationals())
      : d_(d), degree_(degree), field_(field) {}

  std::size_t num_vars() const { return d_; }
  std::uint64_t degree() const { return degree_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  // Whole of R_n.
  bool is_full() const;

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;

 private:
  friend GradedPiece span_reduce(const std::vector<Polynomial>&, std::uint64_t, std::size_t,
                                 const Field&);
  friend GradedPiece full_piece(std::size_t, std::uint64_t, const Field&);
  friend GradedPiece intersect_order_types(const GradedPiece&, const std::vector<Partition>&);

  std::size_t d_ = 0;
  std::uint64_t degree_ = 0;
  Field field_;
  std::vector<Polynomial> basis_;
};

// Canonical reduced basis of span(vectors). Zero polynomials are dropped;
// any other input must be homogeneous of `degree` (DomainError otherwise).
GradedPiece span_reduce(const std::vector<Polynomial>& vectors, std::uint64_t degree, std::size_t d,
                        const Field& field = Field::rationals());

// R_n itself.
GradedPiece full_piece(std::size_t d, std::uint64_t degree, const Field& field = Field::rationals());

// span{x_i b : b in piece} + span(extra), one degree up.
GradedPiece next_piece(const GradedPiece& piece, const std::vector<Polynomial>& extra = {});

// Degree-m piece of the ideal generated by homogeneous `generators`:
// span{u g : u a monomial of degree m - deg g}. Empty below the minimum
// generator degree.
GradedPiece graded_piece(const std::vector<Polynomial>& generators, std::uint64_t m, std::size_t d,
                         const Field& field = Field::rationals());

// f lies in the span of piece. f must be zero or homogeneous of piece.degree().
bool contains(const GradedPiece& piece, const Polynomial& f);

// Same ideal: graded pieces agree in every degree up to the largest
// generator degree of either list.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t d,
                 const Field& field = Field::rationals());

// piece ∩ R_a: the elements of the span supported on monomials of order
// type a only. Empty when |a| differs from the piece degree.
GradedPiece intersect_order_type(const GradedPiece& piece, const Partition& a);
// piece ∩ (sum of R_a over the given types).
GradedPiece intersect_order_types(const GradedPiece& piece, const std::vector<Partition>& types);

}  // namespace psi
