#include "psi/polynomial.hpp"

#include <algorithm>
#include <vector>

#include "psi/errors.hpp"

namespace psi {

Polynomial::Polynomial(const Monomial& m, const Scalar& c) : d_(m.num_vars()) {
  add_term(m, c);
}

Polynomial Polynomial::constant(std::size_t d, const Scalar& c) {
  return Polynomial(Monomial::one(d), c);
}

Polynomial Polynomial::variable(std::size_t index, std::size_t d) {
  return Polynomial(Monomial::variable(index, d), Scalar(1));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != d_) throw DimensionMismatch("term has the wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    // mpq_class(num, den) does not reduce; keep stored coefficients canonical.
    it->second.canonicalize();
  } else {
    Scalar term = c;
    term.canonicalize();
    it->second += term;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_dims(const Polynomial& other) const {
  if (d_ != other.d_) {
    throw DimensionMismatch("polynomials in " + std::to_string(d_) + " and " +
                            std::to_string(other.d_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dims(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dims(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Scalar factor = c;
  factor.canonicalize();
  for (auto& [m, coeff] : terms_) coeff *= factor;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dims(b);
  Polynomial out(a.d_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(d_, Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial out(d_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out(*this);
  out *= Scalar(1) / leading_coefficient();
  return out;
}

Polynomial Polynomial::reduced(const Field& field) const {
  if (field.is_rational()) return *this;
  Polynomial out(d_);
  for (const auto& [m, c] : terms_) out.add_term(m, field.reduce(c));
  return out;
}

Scalar Polynomial::eval_at_one() const {
  Scalar sum(0);
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Scalar magnitude = abs(c);
    bool unit = magnitude == 1;
    bool constant_term = m.degree() == 0;
    if (constant_term) {
      out += magnitude.get_str();
    } else {
      if (!unit) out += magnitude.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.d_ != b.d_) return a.d_ < b.d_;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return grevlex_greater(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::optional<HomogeneousDegree> homogeneous_degree(const Polynomial& f) {
  if (f.is_zero()) return HomogeneousDegree{ZeroPolynomial{}};
  std::uint64_t degree = f.leading_monomial().degree();
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree) return std::nullopt;
  }
  return HomogeneousDegree{degree};
}

std::uint64_t require_homogeneous(const Polynomial& f, std::string_view what) {
  auto h = homogeneous_degree(f);
  if (!h) throw DomainError(std::string(what) + ": polynomial is not homogeneous");
  if (std::holds_alternative<ZeroPolynomial>(*h)) {
    throw DomainError(std::string(what) + ": zero polynomial");
  }
  return std::get<std::uint64_t>(*h);
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.num_vars() != g.num_vars()) throw DimensionMismatch("quotient of mismatched rings");
  Polynomial remainder = f;
  Polynomial quotient(f.num_vars());
  const Monomial& lead = g.leading_monomial();
  const Scalar& lead_coeff = g.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& top = remainder.leading_monomial();
    if (!lead.divides(top)) return std::nullopt;
    Polynomial step(lead.quotient_of(top), remainder.leading_coefficient() / lead_coeff);
    remainder -= step * g;
    quotient += step;
  }
  return quotient;
}

namespace {

// Univariate polynomial as coefficient vector, index = exponent of x1.
using Univariate = std::vector<Scalar>;

void trim(Univariate& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Univariate univariate_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Scalar factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate univariate_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

Polynomial bivariate_homogeneous_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.num_vars() != 2 || g.num_vars() != 2) {
    throw DimensionMismatch("bivariate gcd needs polynomials in exactly 2 variables");
  }
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  require_homogeneous(f, "bivariate gcd");
  require_homogeneous(g, "bivariate gcd");

  auto strip = [](const Polynomial& p, Exponent& e1, Exponent& e2) {
    e1 = e2 = static_cast<Exponent>(-1);
    for (const auto& [m, c] : p.terms()) {
      e1 = std::min(e1, m[0]);
      e2 = std::min(e2, m[1]);
    }
    // Dehomogenize at x2 = 1 after removing x1^e1 x2^e2.
    Univariate u;
    for (const auto& [m, c] : p.terms()) {
      std::size_t k = m[0] - e1;
      if (u.size() <= k) u.resize(k + 1, Scalar(0));
      u[k] = c;
    }
    return u;
  };
  Exponent f1, f2, g1, g2;
  Univariate uf = strip(f, f1, f2);
  Univariate ug = strip(g, g1, g2);
  Univariate common = univariate_gcd(uf, ug);

  // Rehomogenize: common has nonzero constant term, so its degree is the
  // degree of the homogeneous factor.
  const std::size_t deg = common.size() - 1;
  const Exponent m1 = std::min(f1, g1);
  const Exponent m2 = std::min(f2, g2);
  Polynomial out(2);
  for (std::size_t k = 0; k <= deg; ++k) {
    if (sgn(common[k]) == 0) continue;
    out.add_term(Monomial({static_cast<Exponent>(k) + m1, static_cast<Exponent>(deg - k) + m2}),
                 common[k]);
  }
  return out.monic();
}

}  // namespace psi
