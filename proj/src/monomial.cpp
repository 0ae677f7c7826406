#include "psi/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "psi/errors.hpp"

namespace psi {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t index, std::size_t d) {
  std::vector<Exponent> e(d, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (num_vars() != other.num_vars()) {
    throw DimensionMismatch("monomials in different numbers of variables");
  }
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (num_vars() != other.num_vars()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Exponent> e(other.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exponents_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill_degree(std::size_t pos, std::uint64_t remaining, std::vector<Exponent>& current,
                 std::vector<Monomial>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = static_cast<Exponent>(remaining);
    out.emplace_back(current);
    return;
  }
  for (std::uint64_t e = remaining + 1; e-- > 0;) {
    current[pos] = static_cast<Exponent>(e);
    fill_degree(pos + 1, remaining - e, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t d, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (d == 0) return out;
  std::vector<Exponent> current(d, 0);
  fill_degree(0, degree, current, out);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

}  // namespace psi
