#include "psi/symmetric_ideal.hpp"

#include <algorithm>

#include "psi/errors.hpp"
#include "psi/group_action.hpp"
#include "psi/partition.hpp"

namespace psi {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PsiOf: return "psi";
    case Provenance::Product: return "product";
    case Provenance::Power: return "power";
    case Provenance::Explicit: return "explicit";
  }
  return "explicit";
}

SymmetricIdeal SymmetricIdeal::psi(const Polynomial& f, const Field& field, std::size_t cap) {
  const std::uint64_t n = require_homogeneous(f, "psi generator");
  if (f.reduced(field).is_zero()) throw DomainError("psi generator vanishes over " + field.to_string());
  SymmetricIdeal ideal(f.num_vars(), field);
  ideal.provenance_ = Provenance::PsiOf;
  ideal.psi_generator_ = f;
  GradedPiece span = span_reduce(orbit(f, cap), n, f.num_vars(), field);
  ideal.generators_ = span.basis();
  ideal.min_degree_ = ideal.max_degree_ = n;
  ideal.cache_->pieces.emplace(n, std::move(span));
  return ideal;
}

SymmetricIdeal SymmetricIdeal::from_generators(const std::vector<Polynomial>& gens, std::size_t d,
                                               const Field& field, Provenance provenance) {
  SymmetricIdeal ideal(d, field);
  ideal.provenance_ = provenance;
  for (const auto& g : gens) {
    if (g.num_vars() != d) throw DimensionMismatch("generator in the wrong number of variables");
  }
  ideal.build(gens);
  return ideal;
}

void SymmetricIdeal::build(const std::vector<Polynomial>& gens) {
  std::map<std::uint64_t, std::vector<Polynomial>> by_degree;
  for (const auto& g : gens) {
    Polynomial r = g.reduced(field_);
    if (r.is_zero()) continue;
    by_degree[require_homogeneous(r, "ideal generator")].push_back(std::move(r));
  }
  if (by_degree.empty()) return;
  min_degree_ = by_degree.begin()->first;
  max_degree_ = by_degree.rbegin()->first;

  GradedPiece current(d_, min_degree_, field_);
  for (std::uint64_t n = min_degree_; n <= max_degree_; ++n) {
    GradedPiece lower = n == min_degree_ ? GradedPiece(d_, n, field_) : next_piece(current);
    auto it = by_degree.find(n);
    if (it == by_degree.end()) {
      current = std::move(lower);
    } else {
      // Residues modulo R_1 I_{n-1}; their reduced span is the new minimal part.
      std::vector<Polynomial> residues;
      for (const auto& g : it->second) {
        Polynomial r = g;
        for (const auto& row : lower.basis()) {
          Scalar c = r.coefficient(row.leading_monomial());
          if (sgn(c) != 0) r = (r - c * row).reduced(field_);
        }
        residues.push_back(std::move(r));
      }
      GradedPiece fresh = span_reduce(residues, n, d_, field_);
      generators_.insert(generators_.end(), fresh.basis().begin(), fresh.basis().end());
      std::vector<Polynomial> rows = lower.basis();
      rows.insert(rows.end(), fresh.basis().begin(), fresh.basis().end());
      current = span_reduce(rows, n, d_, field_);
    }
    cache_->pieces.emplace(n, current);
  }
}

std::vector<Polynomial> SymmetricIdeal::generators_of_degree(std::uint64_t n) const {
  std::vector<Polynomial> out;
  for (const auto& g : generators_) {
    if (g.leading_monomial().degree() == n) out.push_back(g);
  }
  return out;
}

GradedPiece SymmetricIdeal::piece(std::uint64_t n) const {
  if (is_zero() || n < min_degree_) return GradedPiece(d_, n, field_);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& pieces = cache_->pieces;
  if (auto it = pieces.find(n); it != pieces.end()) return it->second;
  auto below = std::prev(pieces.upper_bound(n));
  for (std::uint64_t deg = below->first + 1; deg <= n; ++deg) {
    GradedPiece next = next_piece(pieces.at(deg - 1), generators_of_degree(deg));
    pieces.emplace(deg, std::move(next));
  }
  return pieces.at(n);
}

std::size_t mu(const SymmetricIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  std::size_t total = ideal.piece(ideal.min_degree()).dim();
  for (std::uint64_t n = ideal.min_degree() + 1; n <= ideal.max_generator_degree(); ++n) {
    total += ideal.piece(n).dim() - next_piece(ideal.piece(n - 1)).dim();
  }
  return total;
}

SymmetricIdeal product(const SymmetricIdeal& a, const SymmetricIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionMismatch("product of ideals in different rings");
  if (!(a.field() == b.field())) throw FieldError("product of ideals over different fields");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return SymmetricIdeal::from_generators(gens, a.num_vars(), a.field(), Provenance::Product);
}

SymmetricIdeal power(const SymmetricIdeal& ideal, unsigned k) {
  if (k == 0) throw DomainError("ideal power needs k >= 1");
  SymmetricIdeal result = ideal;
  for (unsigned i = 1; i < k; ++i) result = product(result, ideal);
  if (k > 1) {
    result = SymmetricIdeal::from_generators(result.generators(), ideal.num_vars(), ideal.field(),
                                             Provenance::Power);
  }
  return result;
}

bool ideal_equal(const SymmetricIdeal& a, const SymmetricIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionMismatch("comparing ideals in different rings");
  if (!(a.field() == b.field())) throw FieldError("comparing ideals over different fields");
  return ideal_equal(a.generators(), b.generators(), a.num_vars(), a.field());
}

std::uint64_t hilbert_I(const SymmetricIdeal& ideal, std::uint64_t n) { return ideal.piece(n).dim(); }

std::uint64_t hilbert_R_mod_I(const SymmetricIdeal& ideal, std::uint64_t n) {
  return hilbert_R(ideal.num_vars(), static_cast<std::int64_t>(n)) - hilbert_I(ideal, n);
}

std::vector<std::uint64_t> hilbert_table(const SymmetricIdeal& ideal, std::uint64_t cutoff) {
  std::vector<std::uint64_t> out;
  out.reserve(cutoff + 1);
  for (std::uint64_t n = 0; n <= cutoff; ++n) out.push_back(hilbert_I(ideal, n));
  return out;
}

std::uint64_t default_cutoff(const SymmetricIdeal& ideal) {
  return ideal.max_generator_degree() + ideal.num_vars() + 2;
}

}  // namespace psi
