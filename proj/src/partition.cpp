#include "psi/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "psi/errors.hpp"

namespace psi {

Partition::Partition(std::vector<Exponent> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::vector<Exponent> Partition::padded(std::size_t d) const {
  if (parts_.size() > d) {
    throw DimensionMismatch("partition " + to_string() + " has more than " + std::to_string(d) +
                            " parts");
  }
  std::vector<Exponent> out(parts_);
  out.resize(d, 0);
  return out;
}

Monomial Partition::leading_monomial(std::size_t d) const { return Monomial(padded(d)); }

bool Partition::is_constant(std::size_t d) const {
  auto p = padded(d);
  return std::all_of(p.begin(), p.end(), [&](Exponent e) { return e == p.front(); });
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void enumerate(std::uint64_t remaining, Exponent max_part, std::size_t parts_left,
               std::vector<Exponent>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  Exponent top = static_cast<Exponent>(std::min<std::uint64_t>(max_part, remaining));
  for (Exponent part = top; part >= 1; --part) {
    current.push_back(part);
    enumerate(remaining - part, part, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::uint64_t n, std::size_t max_parts) {
  std::vector<Partition> out;
  std::vector<Exponent> current;
  enumerate(n, static_cast<Exponent>(n), max_parts, current, out);
  return out;
}

std::uint64_t partition_count(std::uint64_t n) {
  // p(m) by the standard part-size recurrence.
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part) {
    for (std::uint64_t m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p[n];
}

Partition order_type(const Monomial& m) {
  return Partition(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i = binom(n - k + i, i), always integral
    result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * (n - k + i) / i);
  }
  return result;
}

std::uint64_t hilbert_R(std::size_t d, std::int64_t n) {
  if (n < 0 || d == 0) return 0;
  return binomial(static_cast<std::uint64_t>(n) + d - 1, d - 1);
}

std::uint64_t dim_R_a(const Partition& a, std::size_t d) {
  if (a.length() > d) return 0;
  auto parts = a.padded(d);
  // Multinomial as a product of binomials: choose positions for each value.
  std::uint64_t result = 1;
  std::size_t remaining = d;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    result *= binomial(remaining, j - i);
    remaining -= j - i;
    i = j;
  }
  return result;
}

std::vector<Monomial> monomials_of_order_type(const Partition& a, std::size_t d) {
  std::vector<Monomial> out;
  if (a.length() > d) return out;
  auto exps = a.padded(d);
  std::sort(exps.begin(), exps.end());
  do {
    out.emplace_back(exps);
  } while (std::next_permutation(exps.begin(), exps.end()));
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

bool order_type_divides(const Partition& a, const Partition& b, std::size_t d) {
  if (a.length() > d || b.length() > d) return false;
  auto pa = a.padded(d);
  auto pb = b.padded(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (pa[i] > pb[i]) return false;
  }
  return true;
}

}  // namespace psi
