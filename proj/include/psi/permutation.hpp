#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace psi {

// Largest d for which S_d is enumerated element by element (8! = 40320).
inline constexpr std::size_t kDefaultGroupCap = 8;

// Bijection of {1..d}, stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t d);
  // images[i] = sigma(i + 1), 1-based values; throws DomainError if not a bijection.
  static Permutation from_images(const std::vector<std::size_t>& one_based);
  // Accepts one-line "[2,1,3]" or cycle notation "(1 2)(3 4)" / "()" in S_d.
  static Permutation parse(std::string_view text, std::size_t d);
  static Permutation transposition(std::size_t i, std::size_t j, std::size_t d);

  std::size_t degree() const { return images_.size(); }
  // 0-based image.
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_even() const;
  bool is_identity() const;

  // One-line notation, e.g. "[2,1,3]".
  std::string to_string() const;
  // Cycle notation without fixed points, e.g. "(1 2)"; "()" for the identity.
  std::string to_cycle_string() const;

  // (sigma * tau)(i) = sigma(tau(i)), so that sigma.(tau.f) = (sigma*tau).f.
  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// S_d in lexicographic order of one-line notation. Throws GroupCapExceeded
// when d > cap.
std::vector<Permutation> symmetric_group(std::size_t d, std::size_t cap = kDefaultGroupCap);

std::uint64_t factorial(std::size_t n);

inline std::ostream& operator<<(std::ostream& os, const Permutation& v) { return os << v.to_string(); }

}  // namespace psi
