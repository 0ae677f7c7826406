#include "psi/field.hpp"

#include <charconv>

#include "psi/errors.hpp"

namespace psi {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t mpz_mod_u(const mpz_class& value, std::uint32_t p) {
  return mpz_fdiv_ui(value.get_mpz_t(), p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw FieldError("malformed prime in field spec '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::uint64_t Field::residue(const Scalar& value) const {
  std::uint64_t num = mpz_mod_u(value.get_num(), p_);
  std::uint64_t den = mpz_mod_u(value.get_den(), p_);
  if (den == 0) {
    throw FieldError("coefficient denominator is divisible by " + std::to_string(p_));
  }
  return num * mod_inverse(den, p_) % p_;
}

Scalar Field::reduce(const Scalar& value) const {
  if (is_rational()) return value;
  return Scalar(mpz_class(static_cast<unsigned long>(residue(value))));
}

bool Field::is_zero(const Scalar& value) const {
  if (is_rational()) return sgn(value) == 0;
  return residue(value) == 0;
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

void Field::require_characteristic_zero(std::string_view what) const {
  if (!is_rational()) {
    throw FieldError(std::string(what) + " requires characteristic 0, got " + to_string());
  }
}

void Field::require_characteristic_not(std::uint32_t p, std::string_view what) const {
  if (p_ == p) {
    throw FieldError(std::string(what) + " requires characteristic other than " +
                     std::to_string(p));
  }
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t mod) {
  // mod is prime
  return mod_pow(value, mod - 2, mod);
}

}  // namespace psi
