#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <ostream>
#include <string>
#include <vector>

namespace psi {

using Exponent = std::uint32_t;

// x_1^{e_1} ... x_d^{e_d}. Immutable once built.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t d) { return Monomial(std::vector<Exponent>(d, 0)); }
  static Monomial variable(std::size_t index, std::size_t d);

  std::size_t num_vars() const { return exponents_.size(); }
  std::uint64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

// Graded reverse-lexicographic order: higher degree first, ties broken by the
// last variable whose exponent differs (smaller exponent wins).
bool grevlex_greater(const Monomial& a, const Monomial& b);

// Comparator placing the grevlex-largest monomial first.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// All monomials of the given degree in d variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t d, std::uint64_t degree);

inline std::ostream& operator<<(std::ostream& os, const Monomial& v) { return os << v.to_string(); }

}  // namespace psi
