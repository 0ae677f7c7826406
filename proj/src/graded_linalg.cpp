#include "psi/graded_linalg.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "psi/errors.hpp"
#include "psi/group_action.hpp"

namespace psi {

RowEchelon rref_fraction_free(const std::vector<std::vector<Scalar>>& matrix) {
  RowEchelon out;
  if (matrix.empty()) return out;
  const std::size_t cols = matrix.front().size();

  // Clear denominators row by row.
  std::vector<std::vector<mpz_class>> m;
  m.reserve(matrix.size());
  for (const auto& row : matrix) {
    mpz_class lcm = 1;
    bool nonzero = false;
    for (const auto& x : row) {
      if (sgn(x) != 0) {
        nonzero = true;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    if (!nonzero) continue;
    std::vector<mpz_class> ints(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(row[j]) == 0) continue;
      ints[j] = row[j].get_num() * (lcm / row[j].get_den());
    }
    m.push_back(std::move(ints));
  }

  const std::size_t nrows = m.size();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
    std::size_t p = rank;
    while (p < nrows && sgn(m[p][col]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[rank]);
    const std::vector<mpz_class>& pivot_row = m[rank];
    const mpz_class pivot = pivot_row[col];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank) continue;
      auto& row = m[i];
      const mpz_class a = row[col];
      for (std::size_t j = 0; j < cols; ++j) {
        const bool row_zero = sgn(row[j]) == 0;
        const bool piv_zero = sgn(pivot_row[j]) == 0;
        if (row_zero && (piv_zero || sgn(a) == 0)) continue;
        // row[j] = (pivot * row[j] - a * pivot_row[j]) / prev, exact
        mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
        if (!piv_zero && sgn(a) != 0) {
          mpz_submul(t.get_mpz_t(), a.get_mpz_t(), pivot_row[j].get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    out.pivot_columns.push_back(col);
    ++rank;
  }

  out.rows.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const mpz_class& pivot = m[k][out.pivot_columns[k]];
    std::vector<Scalar> row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(m[k][j]) == 0) continue;
      row[j] = Scalar(m[k][j], pivot);
      row[j].canonicalize();
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

RowEchelon rref_mod_p(const std::vector<std::vector<Scalar>>& matrix, const Field& field) {
  RowEchelon out;
  if (matrix.empty()) return out;
  const std::uint64_t p = field.characteristic();
  const std::size_t cols = matrix.front().size();
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& row : matrix) {
    std::vector<std::uint64_t> r(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(row[j]) == 0) continue;
      r[j] = field.residue(row[j]);
      nonzero = nonzero || r[j] != 0;
    }
    if (nonzero) m.push_back(std::move(r));
  }
  const std::size_t nrows = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[rank]);
    auto& prow = m[rank];
    const std::uint64_t inv = mod_inverse(prow[col], p);
    for (auto& x : prow) x = x * inv % p;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const std::uint64_t factor = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        if (prow[j] == 0) continue;
        m[i][j] = (m[i][j] + (p - factor) * prow[j]) % p;
      }
    }
    out.pivot_columns.push_back(col);
    ++rank;
  }
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<Scalar> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = Scalar(static_cast<unsigned long>(m[k][j]));
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

// Row-reduces `vectors` in the given column order and maps the result back
// to polynomials (ordered by pivot position).
std::vector<Polynomial> reduce_in_order(const std::vector<Polynomial>& vectors,
                                        const std::vector<Monomial>& columns, std::size_t d,
                                        const Field& field) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) index.emplace(columns[j], j);

  std::vector<std::vector<Scalar>> matrix;
  matrix.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    std::vector<Scalar> row(columns.size());
    for (const auto& [m, c] : v.terms()) row[index.at(m)] = c;
    matrix.push_back(std::move(row));
  }
  RowEchelon rref = field.is_rational() ? rref_fraction_free(matrix) : rref_mod_p(matrix, field);
  std::vector<Polynomial> out;
  out.reserve(rref.rank());
  for (const auto& row : rref.rows) {
    Polynomial p(d);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (sgn(row[j]) != 0) p.add_term(columns[j], row[j]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Monomial> support_columns(const std::vector<Polynomial>& vectors) {
  std::set<Monomial, GrevlexDescending> support;
  for (const auto& v : vectors) {
    for (const auto& [m, c] : v.terms()) support.insert(m);
  }
  return {support.begin(), support.end()};
}

std::uint64_t min_degree(const std::vector<Polynomial>& gens, std::uint64_t& max_degree) {
  std::uint64_t lo = UINT64_MAX;
  max_degree = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::uint64_t deg = require_homogeneous(g, "graded piece generator");
    lo = std::min(lo, deg);
    max_degree = std::max(max_degree, deg);
  }
  return lo;
}

std::vector<Polynomial> of_degree(const std::vector<Polynomial>& gens, std::uint64_t degree) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (!g.is_zero() && g.leading_monomial().degree() == degree) out.push_back(g);
  }
  return out;
}

}  // namespace

bool GradedPiece::is_full() const { return dim() == hilbert_R(d_, static_cast<std::int64_t>(degree_)); }

GradedPiece span_reduce(const std::vector<Polynomial>& vectors, std::uint64_t degree, std::size_t d,
                        const Field& field) {
  std::vector<Polynomial> inputs;
  inputs.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.num_vars() != d) throw DimensionMismatch("span_reduce input in the wrong ring");
    Polynomial r = v.reduced(field);
    if (r.is_zero()) continue;
    auto h = homogeneous_degree(r);
    if (!h || std::get<std::uint64_t>(*h) != degree) {
      throw DomainError("span_reduce input " + v.to_string() + " is not homogeneous of degree " +
                        std::to_string(degree));
    }
    inputs.push_back(std::move(r));
  }
  GradedPiece piece(d, degree, field);
  piece.basis_ = reduce_in_order(inputs, support_columns(inputs), d, field);
  return piece;
}

GradedPiece full_piece(std::size_t d, std::uint64_t degree, const Field& field) {
  GradedPiece piece(d, degree, field);
  for (const auto& m : monomials_of_degree(d, degree)) piece.basis_.emplace_back(m, Scalar(1));
  return piece;
}

GradedPiece next_piece(const GradedPiece& piece, const std::vector<Polynomial>& extra) {
  const std::size_t d = piece.num_vars();
  const std::uint64_t degree = piece.degree() + 1;
  if (piece.is_full() && piece.dim() > 0) return full_piece(d, degree, piece.field());
  std::vector<Polynomial> rows;
  rows.reserve(piece.dim() * d + extra.size());
  for (std::size_t i = 0; i < d; ++i) {
    const Monomial x = Monomial::variable(i, d);
    for (const auto& b : piece.basis()) rows.push_back(b.shifted(x));
  }
  rows.insert(rows.end(), extra.begin(), extra.end());
  return span_reduce(rows, degree, d, piece.field());
}

GradedPiece graded_piece(const std::vector<Polynomial>& generators, std::uint64_t m, std::size_t d,
                         const Field& field) {
  std::uint64_t hi = 0;
  const std::uint64_t lo = min_degree(generators, hi);
  if (lo == UINT64_MAX || m < lo) return GradedPiece(d, m, field);
  GradedPiece piece = span_reduce(of_degree(generators, lo), lo, d, field);
  for (std::uint64_t deg = lo + 1; deg <= m; ++deg) {
    piece = next_piece(piece, deg <= hi ? of_degree(generators, deg) : std::vector<Polynomial>{});
  }
  return piece;
}

bool contains(const GradedPiece& piece, const Polynomial& f) {
  const Field& field = piece.field();
  Polynomial r = f.reduced(field);
  if (r.is_zero()) return true;
  auto h = homogeneous_degree(r);
  if (!h || std::get<std::uint64_t>(*h) != piece.degree()) {
    throw DomainError("membership test: " + f.to_string() + " is not homogeneous of degree " +
                      std::to_string(piece.degree()));
  }
  for (const auto& row : piece.basis()) {
    Scalar c = r.coefficient(row.leading_monomial());
    if (sgn(c) == 0) continue;
    r -= c * row;
    r = r.reduced(field);
  }
  return r.is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t d,
                 const Field& field) {
  std::uint64_t hi_a = 0, hi_b = 0;
  const std::uint64_t lo_a = min_degree(a, hi_a);
  const std::uint64_t lo_b = min_degree(b, hi_b);
  if (lo_a == UINT64_MAX || lo_b == UINT64_MAX) return lo_a == lo_b;
  if (lo_a != lo_b) return false;
  const std::uint64_t top = std::max(hi_a, hi_b);
  GradedPiece pa = span_reduce(of_degree(a, lo_a), lo_a, d, field);
  GradedPiece pb = span_reduce(of_degree(b, lo_b), lo_b, d, field);
  for (std::uint64_t deg = lo_a;; ++deg) {
    if (!(pa == pb)) return false;
    if (deg == top) return true;
    pa = next_piece(pa, of_degree(a, deg + 1));
    pb = next_piece(pb, of_degree(b, deg + 1));
  }
}

GradedPiece intersect_order_type(const GradedPiece& piece, const Partition& a) {
  if (a.size() != piece.degree()) return GradedPiece(piece.num_vars(), piece.degree(), piece.field());
  return intersect_order_types(piece, {a});
}

GradedPiece intersect_order_types(const GradedPiece& piece, const std::vector<Partition>& types) {
  const std::size_t d = piece.num_vars();
  GradedPiece out(d, piece.degree(), piece.field());
  if (piece.dim() == 0) return out;
  auto wanted = [&](const Monomial& m) {
    return std::find(types.begin(), types.end(), order_type(m)) != types.end();
  };
  // Columns of other order types come first, so rows pivoting on a wanted
  // monomial vanish on every other type.
  std::vector<Monomial> columns;
  std::vector<Monomial> tail;
  for (const auto& m : support_columns(piece.basis())) {
    (wanted(m) ? tail : columns).push_back(m);
  }
  if (tail.empty()) return out;
  columns.insert(columns.end(), tail.begin(), tail.end());
  auto rows = reduce_in_order(piece.basis(), columns, d, piece.field());
  std::vector<Polynomial> kept;
  std::set<Monomial, GrevlexDescending> tail_set(tail.begin(), tail.end());
  for (auto& row : rows) {
    bool inside = std::all_of(row.terms().begin(), row.terms().end(),
                              [&](const auto& t) { return tail_set.count(t.first) > 0; });
    if (inside) kept.push_back(std::move(row));
  }
  out.basis_ = reduce_in_order(kept, support_columns(kept), d, piece.field());
  return out;
}

}  // namespace psi
