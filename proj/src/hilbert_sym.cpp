#include "psi/hilbert_sym.hpp"

#include <algorithm>
#include <map>

#include "psi/errors.hpp"
#include "psi/permutation.hpp"

namespace psi {

std::string HFTable::to_csv() const {
  std::string out = "degree,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(n) + "," + std::to_string(values[n]) + "\n";
  }
  return out;
}

std::vector<Polynomial> SymmetricMonomialIdeal::generators() const {
  std::vector<Polynomial> out;
  for (const auto& a : selected) {
    for (const auto& m : monomials_of_order_type(a, d)) out.emplace_back(m, Scalar(1));
  }
  return out;
}

bool SymmetricMonomialIdeal::covers(const Partition& b) const {
  return std::any_of(selected.begin(), selected.end(),
                     [&](const Partition& a) { return order_type_divides(a, b, d); });
}

SymmetricReduction symmetric_reduction(const Polynomial& f) {
  if (f.num_vars() != 2) throw DimensionMismatch("symmetric reduction is defined for d = 2");
  require_homogeneous(f, "symmetric reduction");
  const Polynomial swapped = act(Permutation::transposition(0, 1, 2), f);
  const Polynomial g = bivariate_homogeneous_gcd(f, swapped);
  auto quotient = exact_quotient(f, g);
  if (!quotient) throw std::logic_error("gcd does not divide its argument");
  SymmetricReduction out;
  out.sred = quotient->monic();
  out.ell = out.sred.leading_monomial().degree();
  return out;
}

std::uint64_t hf_two_var(std::uint64_t k, std::uint64_t ell, std::int64_t n) {
  if (ell > k) throw DomainError("hf_two_var needs ell <= k");
  auto h_r = [](std::int64_t m) -> std::int64_t { return m < 0 ? 0 : m + 1; };
  const auto ki = static_cast<std::int64_t>(k);
  const auto li = static_cast<std::int64_t>(ell);
  return static_cast<std::uint64_t>(2 * h_r(n - ki) - h_r(n - ki - li));
}

HFTable hf_two_var_table(std::uint64_t k, std::uint64_t ell, std::uint64_t cutoff) {
  HFTable t;
  for (std::uint64_t n = 0; n <= cutoff; ++n) t.values.push_back(hf_two_var(k, ell, static_cast<std::int64_t>(n)));
  return t;
}

namespace {

Polynomial x1_x2(std::uint64_t a, std::uint64_t b) {
  return Polynomial(Monomial({static_cast<Exponent>(a), static_cast<Exponent>(b)}), Scalar(1));
}

}  // namespace

Polynomial binomial_witness(std::uint64_t k, std::uint64_t ell, const Field& field) {
  field.require_characteristic_not(2, "binomial Hilbert-function witness");
  if (ell > k) throw DomainError("binomial witness needs ell <= k");
  return x1_x2(ell, k - ell) + x1_x2(k, 0);
}

std::optional<ParityWitnesses> parity_match(std::uint64_t k, std::uint64_t ell) {
  if (ell > k) throw DomainError("parity_match needs ell <= k");
  if ((k + ell) % 2 != 0) return std::nullopt;
  const std::uint64_t a = (k - ell) / 2;
  return ParityWitnesses{x1_x2(a + ell, a), binomial_witness(k, ell)};
}

HFTable symmetric_monomial_hf(const SymmetricMonomialIdeal& ideal, std::uint64_t cutoff) {
  HFTable t;
  for (std::uint64_t n = 0; n <= cutoff; ++n) {
    std::uint64_t sum = 0;
    for (const auto& b : partitions_of(n, ideal.d)) {
      if (ideal.covers(b)) sum += dim_R_a(b, ideal.d);
    }
    t.values.push_back(sum);
  }
  return t;
}

HFTable hss_general_hf(std::uint64_t n, std::size_t d, const Field& field) {
  field.require_characteristic_zero("general psi Hilbert function");
  if (n < 2) throw DomainError("general psi Hilbert function needs generator degree >= 2");
  HFTable t;
  const std::uint64_t cutoff = std::max<std::uint64_t>(n, d) + 1;
  for (std::uint64_t i = 0; i <= cutoff; ++i) {
    if (i < n) {
      t.values.push_back(hilbert_R(d, static_cast<std::int64_t>(i)));
    } else if (i == n) {
      t.values.push_back(partition_count(n) - 1);
    } else {
      t.values.push_back(0);
    }
  }
  return t;
}

HFTable ideal_hf_from_quotient(const HFTable& quotient, std::size_t d) {
  HFTable t;
  for (std::size_t i = 0; i < quotient.values.size(); ++i) {
    t.values.push_back(hilbert_R(d, static_cast<std::int64_t>(i)) - quotient.values[i]);
  }
  return t;
}

namespace {

class MonomialMatchSearch {
 public:
  MonomialMatchSearch(const HFTable& target, std::size_t d, std::uint64_t bound)
      : target_(target), bound_(bound) {
    ideal_.d = d;
  }

  std::optional<SymmetricMonomialIdeal> run() {
    if (dfs(0)) return ideal_;
    return std::nullopt;
  }

 private:
  bool dfs(std::uint64_t n) {
    if (n > target_.cutoff()) return true;
    std::vector<Partition> covered;
    std::vector<Partition> open;
    std::uint64_t base = 0;
    for (const auto& b : partitions_of(n, ideal_.d)) {
      if (ideal_.covers(b)) {
        covered.push_back(b);
        base += dim_R_a(b, ideal_.d);
      } else {
        open.push_back(b);
      }
    }
    const std::uint64_t want = target_.at(n);
    if (want < base) return false;
    if (n > bound_) return want == base && dfs(n + 1);
    auto key = std::make_pair(n, covered);
    if (failed_.count(key)) return false;
    std::vector<Partition> chosen;
    if (choose(n, open, 0, want - base, chosen)) return true;
    failed_.insert(std::move(key));
    return false;
  }

  // Subsets of open[i..] whose dimensions sum to `need`, including each type
  // before trying to leave it out.
  bool choose(std::uint64_t n, const std::vector<Partition>& open, std::size_t i, std::uint64_t need,
              std::vector<Partition>& chosen) {
    if (need == 0) {
      for (const auto& a : chosen) ideal_.selected.insert(a);
      if (dfs(n + 1)) return true;
      for (const auto& a : chosen) ideal_.selected.erase(a);
      return false;
    }
    if (i == open.size()) return false;
    const std::uint64_t dim = dim_R_a(open[i], ideal_.d);
    if (dim <= need) {
      chosen.push_back(open[i]);
      if (choose(n, open, i + 1, need - dim, chosen)) return true;
      chosen.pop_back();
    }
    return choose(n, open, i + 1, need, chosen);
  }

  const HFTable& target_;
  std::uint64_t bound_;
  SymmetricMonomialIdeal ideal_;
  std::set<std::pair<std::uint64_t, std::vector<Partition>>> failed_;
};

}  // namespace

std::optional<SymmetricMonomialIdeal> no_monomial_match_search(const HFTable& target, std::size_t d,
                                                               std::optional<std::uint64_t> gen_degree_bound) {
  if (target.values.empty()) return SymmetricMonomialIdeal{d, {}};
  return MonomialMatchSearch(target, d, gen_degree_bound.value_or(target.cutoff())).run();
}

}  // namespace psi
