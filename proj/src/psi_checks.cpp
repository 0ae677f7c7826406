#include "psi/psi_checks.hpp"

#include <algorithm>
#include <set>

#include "psi/errors.hpp"

namespace psi {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::IsPsi: return "IsPsi";
    case VerdictKind::NotPsi: return "NotPsi";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

PsiVerdict mu_bound_check(const SymmetricIdeal& ideal) {
  PsiVerdict v;
  const std::size_t m = mu(ideal);
  const std::uint64_t bound = factorial(ideal.num_vars());
  if (m > bound) {
    v.verdict = VerdictKind::NotPsi;
    v.certificate = MuBoundCertificate{m, bound};
    v.notes = "mu = " + std::to_string(m) + " exceeds d! = " + std::to_string(bound);
  } else {
    v.notes = "mu = " + std::to_string(m) + " <= d! = " + std::to_string(bound);
  }
  return v;
}

namespace {

// An element of w with nonzero value at 1, if any. W ∩ ker(eval) has
// codimension at most one in W, so the functional is nonzero on W iff it is
// nonzero on some basis element.
std::optional<Polynomial> eval_witness(const GradedPiece& w, const Field& field) {
  for (const auto& b : w.basis()) {
    if (!field.is_zero(b.eval_at_one())) return b;
  }
  return std::nullopt;
}

std::string types_string(const std::vector<Partition>& types) {
  std::string out;
  for (const auto& t : types) out += (out.empty() ? "" : "+") + t.to_string();
  return out;
}

}  // namespace

PsiVerdict order_type_obstruction(const SymmetricIdeal& ideal) {
  PsiVerdict v;
  if (!ideal.generated_in_single_degree()) {
    v.notes = "ideal is not generated in a single degree";
    return v;
  }
  const std::uint64_t n = ideal.min_degree();
  const GradedPiece top = ideal.piece(n);
  const Field& field = ideal.field();
  auto found = [&](std::vector<Partition> a, std::vector<Partition> b, Polynomial g1, Polynomial g2) {
    v.verdict = VerdictKind::NotPsi;
    v.notes = "I_" + std::to_string(n) + " meets R_S for S = " + types_string(a) + " and " +
              types_string(b) + " in elements with nonzero value at 1";
    v.certificate = OrderTypePairCertificate{n, std::move(a), std::move(b), std::move(g1), std::move(g2)};
    return v;
  };

  std::vector<std::pair<Partition, Polynomial>> hits;
  for (const auto& a : partitions_of(n, ideal.num_vars())) {
    if (auto g = eval_witness(intersect_order_type(top, a), field)) hits.emplace_back(a, *g);
    if (hits.size() == 2) {
      return found({hits[0].first}, {hits[1].first}, hits[0].second, hits[1].second);
    }
  }

  // Witnesses supported on several order types per side.
  OrderTypeSet present;
  for (const auto& b : top.basis()) {
    for (const auto& [m, c] : b.terms()) present.insert(order_type(m));
  }
  const std::vector<Partition> types(present.begin(), present.end());
  if (types.size() > kMaxUnionSearchTypes) {
    v.notes = "single order types inconclusive; " + std::to_string(types.size()) +
              " order types exceed the union search limit";
    return v;
  }
  // eval-nonzero on W_S is monotone in S, so it suffices to try S against
  // its complement. Fixing types[0] in S visits each splitting once.
  const std::size_t count = types.size();
  for (std::uint64_t mask = 1; count > 1 && mask < (std::uint64_t{1} << count) - 1; mask += 2) {
    std::vector<Partition> in;
    std::vector<Partition> out;
    for (std::size_t i = 0; i < count; ++i) ((mask >> i) & 1 ? in : out).push_back(types[i]);
    auto g1 = eval_witness(intersect_order_types(top, in), field);
    if (!g1) continue;
    auto g2 = eval_witness(intersect_order_types(top, out), field);
    if (!g2) continue;
    // Report the actual supports, which may be smaller than S and its complement.
    auto support = [](const Polynomial& g) {
      const auto t = order_types_of(g);
      return std::vector<Partition>(t.begin(), t.end());
    };
    return found(support(*g1), support(*g2), *g1, *g2);
  }
  v.notes = "no splitting of the order types of I_" + std::to_string(n) +
            " carries two elements with nonzero value at 1";
  return v;
}

bool validate_order_type_pair(const SymmetricIdeal& ideal, const Polynomial& g1, const Polynomial& g2) {
  if (!ideal.generated_in_single_degree()) return false;
  const std::uint64_t n = ideal.min_degree();
  for (const auto* g : {&g1, &g2}) {
    if (g->num_vars() != ideal.num_vars() || g->is_zero()) return false;
    auto h = homogeneous_degree(*g);
    if (!h || std::get<std::uint64_t>(*h) != n) return false;
    if (ideal.field().is_zero(g->eval_at_one())) return false;
  }
  if (share_order_types(g1, g2)) return false;
  const GradedPiece top = ideal.piece(n);
  return contains(top, g1) && contains(top, g2);
}

bool validate_certificate(const SymmetricIdeal& ideal, const PsiVerdict& verdict) {
  switch (verdict.verdict) {
    case VerdictKind::Inconclusive:
      return true;
    case VerdictKind::IsPsi:
      return verdict.witness &&
             ideal_equal(ideal, SymmetricIdeal::psi(*verdict.witness, ideal.field()));
    case VerdictKind::NotPsi:
      break;
  }
  if (const auto* c = std::get_if<MuBoundCertificate>(&verdict.certificate)) {
    return c->d_factorial == factorial(ideal.num_vars()) && mu(ideal) == c->mu && c->mu > c->d_factorial;
  }
  if (const auto* c = std::get_if<OrderTypePairCertificate>(&verdict.certificate)) {
    auto listed = [](const Polynomial& g, const std::vector<Partition>& types) {
      const auto t = order_types_of(g);
      return std::vector<Partition>(t.begin(), t.end()) == types;
    };
    return c->degree == ideal.min_degree() && listed(c->g1, c->a) && listed(c->g2, c->b) &&
           validate_order_type_pair(ideal, c->g1, c->g2);
  }
  if (const auto* c = std::get_if<GeneratorDegreesCertificate>(&verdict.certificate)) {
    return !ideal.is_zero() && c->low < c->high && c->low == ideal.min_degree() &&
           c->high == ideal.max_generator_degree();
  }
  return false;
}

bool is_monomial_ideal(const SymmetricIdeal& ideal) {
  if (ideal.is_zero()) return true;
  for (std::uint64_t n = ideal.min_degree(); n <= ideal.max_generator_degree(); ++n) {
    for (const auto& row : ideal.piece(n).basis()) {
      if (!row.is_monomial()) return false;
    }
  }
  return true;
}

std::optional<Monomial> monomial_psi_test(const SymmetricIdeal& ideal) {
  if (!ideal.generated_in_single_degree() || !is_monomial_ideal(ideal)) return std::nullopt;
  const GradedPiece top = ideal.piece(ideal.min_degree());
  std::optional<Partition> type;
  for (const auto& row : top.basis()) {
    Partition t = order_type(row.leading_monomial());
    if (type && *type != t) return std::nullopt;
    type = t;
  }
  if (!type || top.dim() != dim_R_a(*type, ideal.num_vars())) return std::nullopt;
  return type->leading_monomial(ideal.num_vars());
}

StronglyHomogeneousReport strongly_homogeneous_psi_check(const Polynomial& f, const Field& field) {
  require_homogeneous(f, "strongly homogeneous check");
  StronglyHomogeneousReport report;
  SymmetricIdeal ideal = SymmetricIdeal::psi(f, field);
  report.monomial_ideal = is_monomial_ideal(ideal);
  report.order_type = is_strongly_homogeneous(f);
  report.monomial = monomial_psi_test(ideal);
  if (report.monomial_ideal) {
    report.consistent = report.order_type.has_value() && report.monomial.has_value() &&
                        order_type(*report.monomial) == *report.order_type;
  }
  return report;
}

bool product_monomial_psi_predict(const Partition& a, const Partition& b, std::size_t d) {
  return a.is_constant(d) || b.is_constant(d);
}

bool product_monomial_psi_constructive(const Partition& a, const Partition& b, std::size_t d) {
  auto ia = SymmetricIdeal::psi(Polynomial(a.leading_monomial(d), Scalar(1)));
  auto ib = SymmetricIdeal::psi(Polynomial(b.leading_monomial(d), Scalar(1)));
  // A monomial ideal is a psi exactly when it is (m)_{S_d} for a monomial m.
  return monomial_psi_test(product(ia, ib)).has_value();
}

PowerReport power_psi_analysis(const Polynomial& f, const PowerAnalysisOptions& options) {
  require_homogeneous(f, "power analysis");
  PowerReport report;
  report.d = f.num_vars();
  const SymmetricIdeal ideal = SymmetricIdeal::psi(f);
  report.mu = mu(ideal);
  report.k_symmetric = is_k_symmetric(f);
  report.all_powers_psi = report.k_symmetric;
  report.is_monomial = f.is_monomial();

  const Polynomial f2 = f * f;
  const SymmetricIdeal square = power(ideal, 2);
  report.square_verdict = check_ideal(square, {f2});
  report.square_is_psi_of_f_squared = ideal_equal(square, SymmetricIdeal::psi(f2));
  const bool square_psi = report.square_verdict.verdict == VerdictKind::IsPsi;
  const bool square_not_psi = report.square_verdict.verdict == VerdictKind::NotPsi;

  auto agree = [&](bool predicted) {
    return predicted ? square_psi : square_not_psi;
  };
  if (report.k_symmetric && !square_psi) report.consistent = false;
  if (report.is_monomial) {
    const Monomial& m = f.leading_monomial();
    const bool diagonal = std::all_of(m.exponents().begin(), m.exponents().end(),
                                      [&](Exponent e) { return e == m[0]; });
    report.monomial_square_predicted = diagonal;
    // Monomial psi's: I^2 is monomial, so monomial_psi_test decides it.
    const bool constructive = monomial_psi_test(square).has_value();
    if (constructive != diagonal) report.consistent = false;
  }
  if (report.d == 2) {
    report.two_var_square_predicted = report.k_symmetric;
    if (!agree(report.k_symmetric)) report.consistent = false;
  }

  report.power_mus.push_back(report.mu);
  if (!report.k_symmetric) {
    const std::uint64_t bound = factorial(report.d);
    unsigned cap = 1;
    while (report.mu + cap - 1 <= bound) ++cap;
    report.exponent_cap = options.max_exponent ? std::min(*options.max_exponent, cap) : cap;
    SymmetricIdeal current = ideal;
    for (unsigned k = 2; k <= report.exponent_cap; ++k) {
      current = k == 2 ? square : product(current, ideal);
      const std::size_t m = mu(current);
      report.power_mus.push_back(m);
      if (m > bound) {
        report.first_failing_exponent = k;
        break;
      }
    }
    // mu(I^k) >= mu(I) + k - 1 guarantees failure by the full cap.
    if (!options.max_exponent && !report.first_failing_exponent) report.consistent = false;
  }
  return report;
}

std::optional<StabilizerProductProof> stabilizer_product_criterion(const Polynomial& f,
                                                                   const Polynomial& g) {
  if (f.num_vars() != g.num_vars()) throw DimensionMismatch("stabilizer criterion: rings differ");
  if (f.is_zero() || g.is_zero()) throw DomainError("stabilizer criterion: zero polynomial");
  StabilizerProductProof proof;
  proof.stab_f = k_stabilizer(f);
  proof.stab_g = k_stabilizer(g);
  proof.product_size = subgroup_product(proof.stab_f.elements, proof.stab_g.elements).size();
  if (proof.product_size != factorial(f.num_vars())) return std::nullopt;
  proof.alternating_case = (proof.stab_f.is_alternating && proof.stab_g.size() == 2) ||
                           (proof.stab_g.is_alternating && proof.stab_f.size() == 2);
  return proof;
}

TwoVarProductReport two_var_product_psi_test(const Polynomial& f, const Polynomial& g) {
  if (f.num_vars() != 2 || g.num_vars() != 2) {
    throw DimensionMismatch("two-variable product test needs d = 2");
  }
  require_homogeneous(f, "two-variable product test");
  require_homogeneous(g, "two-variable product test");
  TwoVarProductReport report;
  report.predicted_psi = is_k_symmetric(f) || is_k_symmetric(g);
  SymmetricIdeal prod = product(SymmetricIdeal::psi(f), SymmetricIdeal::psi(g));
  report.product_mu = mu(prod);
  report.mu_verdict = mu_bound_check(prod);
  if (report.predicted_psi) {
    report.consistent = report.mu_verdict.verdict != VerdictKind::NotPsi &&
                        ideal_equal(prod, SymmetricIdeal::psi(f * g));
  } else {
    report.consistent = report.mu_verdict.verdict == VerdictKind::NotPsi;
  }
  return report;
}

PsiVerdict check_ideal(const SymmetricIdeal& ideal, const std::vector<Polynomial>& candidates) {
  if (ideal.is_zero()) {
    PsiVerdict v;
    v.notes = "zero ideal";
    return v;
  }
  if (!ideal.generated_in_single_degree()) {
    PsiVerdict v;
    v.verdict = VerdictKind::NotPsi;
    v.certificate = GeneratorDegreesCertificate{ideal.min_degree(), ideal.max_generator_degree()};
    v.notes = "minimal generators occur in degrees " + std::to_string(ideal.min_degree()) + " and " +
              std::to_string(ideal.max_generator_degree());
    return v;
  }
  if (PsiVerdict v = mu_bound_check(ideal); v.verdict == VerdictKind::NotPsi) return v;
  if (PsiVerdict v = order_type_obstruction(ideal); v.verdict == VerdictKind::NotPsi) return v;

  std::vector<Polynomial> pool;
  if (auto m = monomial_psi_test(ideal)) pool.emplace_back(*m, Scalar(1));
  if (ideal.psi_generator()) pool.push_back(*ideal.psi_generator());
  if (ideal.generators().size() == 1) pool.push_back(ideal.generators().front());
  pool.insert(pool.end(), candidates.begin(), candidates.end());
  pool.insert(pool.end(), ideal.generators().begin(), ideal.generators().end());

  std::set<Polynomial> tried;
  const std::uint64_t n = ideal.min_degree();
  for (const auto& c : pool) {
    if (c.num_vars() != ideal.num_vars()) continue;
    Polynomial r = c.reduced(ideal.field());
    if (r.is_zero()) continue;
    auto h = homogeneous_degree(r);
    if (!h || std::get<std::uint64_t>(*h) != n) continue;
    if (!tried.insert(c).second) continue;
    if (ideal_equal(ideal, SymmetricIdeal::psi(c, ideal.field()))) {
      PsiVerdict v;
      v.verdict = VerdictKind::IsPsi;
      v.witness = c;
      v.notes = "I = (" + c.to_string() + ")_{S_" + std::to_string(ideal.num_vars()) + "}";
      return v;
    }
  }
  PsiVerdict v;
  v.notes = "mu bound and order-type obstruction pass; no witness among " +
            std::to_string(tried.size()) + " candidates";
  return v;
}

}  // namespace psi
