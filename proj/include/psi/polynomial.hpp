#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "psi/field.hpp"
#include "psi/monomial.hpp"

namespace psi {

// Marker returned by homogeneous_degree for the zero polynomial, which is
// homogeneous of every degree.
struct ZeroPolynomial {
  friend bool operator==(ZeroPolynomial, ZeroPolynomial) { return true; }
};

using HomogeneousDegree = std::variant<ZeroPolynomial, std::uint64_t>;

// Sparse polynomial in x_1..x_d with exact rational coefficients. Terms are
// kept in grevlex-descending order and never carry a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t d) : d_(d) {}
  Polynomial(const Monomial& m, const Scalar& c);

  static Polynomial constant(std::size_t d, const Scalar& c);
  static Polynomial variable(std::size_t index, std::size_t d);

  std::size_t num_vars() const { return d_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Coefficient of m (zero when absent).
  Scalar coefficient(const Monomial& m) const;
  // Grevlex-largest term; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  // Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;
  Polynomial shifted(const Monomial& m) const;

  // Divides by the leading coefficient.
  Polynomial monic() const;
  // Maps every coefficient to the field's canonical representative.
  Polynomial reduced(const Field& field) const;

  Scalar eval_at_one() const;

  std::string to_string() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  // Total order used for exact deduplication (orbits, sets).
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void check_dims(const Polynomial& other) const;

  std::size_t d_ = 0;
  TermMap terms_;
};

// Degree if every term has the same degree; ZeroPolynomial for 0; nullopt
// when the polynomial mixes degrees.
std::optional<HomogeneousDegree> homogeneous_degree(const Polynomial& f);

// Degree of a nonzero homogeneous polynomial; throws DomainError otherwise.
std::uint64_t require_homogeneous(const Polynomial& f, std::string_view what);

// f / g when g divides f exactly, nullopt otherwise. g must be nonzero.
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

// Monic gcd of two homogeneous polynomials in k[x1, x2]. Powers of x1 and
// x2 are split off first; the remaining parts are dehomogenized at x2 = 1,
// run through the univariate Euclidean algorithm, and rehomogenized.
Polynomial bivariate_homogeneous_gcd(const Polynomial& f, const Polynomial& g);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& v) { return os << v.to_string(); }

}  // namespace psi
