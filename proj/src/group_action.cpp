#include "psi/group_action.hpp"

#include <algorithm>

#include "psi/errors.hpp"

namespace psi {

Monomial act(const Permutation& sigma, const Monomial& m) {
  if (sigma.degree() != m.num_vars()) {
    throw DimensionMismatch("permutation of degree " + std::to_string(sigma.degree()) +
                            " acting on " + std::to_string(m.num_vars()) + " variables");
  }
  std::vector<Exponent> e(m.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[sigma(i)] = m[i];
  return Monomial(std::move(e));
}

Polynomial act(const Permutation& sigma, const Polynomial& f) {
  if (sigma.degree() != f.num_vars()) {
    throw DimensionMismatch("permutation of degree " + std::to_string(sigma.degree()) +
                            " acting on " + std::to_string(f.num_vars()) + " variables");
  }
  Polynomial out(f.num_vars());
  for (const auto& [m, c] : f.terms()) out.add_term(act(sigma, m), c);
  return out;
}

std::vector<Polynomial> orbit(const Polynomial& f, std::size_t cap) {
  std::set<Polynomial> seen;
  for (const auto& sigma : symmetric_group(f.num_vars(), cap)) seen.insert(act(sigma, f));
  return {seen.begin(), seen.end()};
}

std::optional<Scalar> proportionality_constant(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero() || g.is_zero()) throw DomainError("proportionality test on the zero polynomial");
  if (g.num_terms() != f.num_terms()) return std::nullopt;
  if (g.leading_monomial() != f.leading_monomial()) return std::nullopt;
  Scalar c = g.leading_coefficient() / f.leading_coefficient();
  auto ig = g.terms().begin();
  for (const auto& [m, coeff] : f.terms()) {
    if (ig->first != m || ig->second != c * coeff) return std::nullopt;
    ++ig;
  }
  return c;
}

bool StabilizerReport::contains(const Permutation& sigma) const {
  return std::binary_search(elements.begin(), elements.end(), sigma);
}

const Scalar& StabilizerReport::character(const Permutation& sigma) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), sigma);
  if (it == elements.end() || *it != sigma) {
    throw DomainError(sigma.to_cycle_string() + " is not in the stabilizer");
  }
  return characters[static_cast<std::size_t>(it - elements.begin())];
}

StabilizerReport k_stabilizer(const Polynomial& f, std::size_t cap) {
  if (f.is_zero()) throw DomainError("k-stabilizer of the zero polynomial");
  StabilizerReport report;
  report.d = f.num_vars();
  const auto group = symmetric_group(report.d, cap);
  for (const auto& sigma : group) {
    if (auto c = proportionality_constant(act(sigma, f), f)) {
      report.elements.push_back(sigma);
      report.characters.push_back(*c);
    }
  }
  report.is_full_group = report.elements.size() == group.size();
  report.is_alternating =
      report.d >= 2 && report.elements.size() * 2 == group.size() &&
      std::all_of(report.elements.begin(), report.elements.end(),
                  [](const Permutation& p) { return p.is_even(); });
  return report;
}

bool is_k_symmetric(const Polynomial& f, SymmetryCheck method, std::size_t cap) {
  if (f.is_zero()) throw DomainError("k-symmetry of the zero polynomial");
  if (method == SymmetryCheck::FullEnumeration) return k_stabilizer(f, cap).is_full_group;
  const std::size_t d = f.num_vars();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (!proportionality_constant(act(Permutation::transposition(i, i + 1, d), f), f)) return false;
  }
  return true;
}

OrderTypeMap order_type_decompose(const Polynomial& f) {
  if (!homogeneous_degree(f)) throw DomainError("order-type decomposition needs a homogeneous polynomial");
  OrderTypeMap out;
  for (const auto& [m, c] : f.terms()) {
    auto [it, inserted] = out.try_emplace(order_type(m), f.num_vars());
    it->second.add_term(m, c);
  }
  return out;
}

OrderTypeSet order_types_of(const Polynomial& f) {
  OrderTypeSet out;
  for (const auto& [m, c] : f.terms()) out.insert(order_type(m));
  return out;
}

std::pair<Polynomial, Polynomial> order_type_split(const Polynomial& f, const OrderTypeSet& types) {
  if (!homogeneous_degree(f)) throw DomainError("order-type split needs a homogeneous polynomial");
  Polynomial kept(f.num_vars());
  Polynomial rest(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    (types.count(order_type(m)) ? kept : rest).add_term(m, c);
  }
  return {kept, rest};
}

std::optional<Partition> is_strongly_homogeneous(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("strong homogeneity of the zero polynomial");
  auto types = order_types_of(f);
  if (types.size() != 1) return std::nullopt;
  return *types.begin();
}

bool share_order_types(const Polynomial& f, const Polynomial& g) {
  auto a = order_types_of(f);
  for (const auto& t : order_types_of(g)) {
    if (a.count(t)) return true;
  }
  return false;
}

std::set<Permutation> subgroup_product(const std::vector<Permutation>& a,
                                       const std::vector<Permutation>& b) {
  std::set<Permutation> out;
  for (const auto& sigma : a) {
    for (const auto& tau : b) out.insert(sigma * tau);
  }
  return out;
}

}  // namespace psi
