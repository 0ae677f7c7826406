#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psi {

// Exact rational number, always kept in lowest terms with a positive
// denominator.
using Scalar = mpq_class;

// Coefficient field for linear algebra on graded pieces.
//
// The default is Q. A prime field F_p is available as an experimental
// mode: rational inputs are mapped to F_p (denominators must be units) and
// every reduced coefficient is represented by its integer residue in
// [0, p). Operations whose correctness depends on the characteristic call
// require_characteristic_zero / require_characteristic_not.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  // "q" or "fp:<p>".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  // Canonical representative: the value itself over Q, the residue in
  // [0, p) over F_p.
  Scalar reduce(const Scalar& value) const;
  std::uint64_t residue(const Scalar& value) const;
  bool is_zero(const Scalar& value) const;

  std::string to_string() const;

  // Throw FieldError naming `what` when the field has the wrong characteristic.
  void require_characteristic_zero(std::string_view what) const;
  void require_characteristic_not(std::uint32_t p, std::string_view what) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t mod);

}  // namespace psi
