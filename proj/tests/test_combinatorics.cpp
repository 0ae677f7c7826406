#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psi/errors.hpp"
#include "psi/partition.hpp"
#include "psi/permutation.hpp"

using namespace psi;

namespace {

Partition A(std::vector<Exponent> parts) { return Partition(std::move(parts)); }

// Brute force: every exponent vector of the degree, grouped by sorted shape.
std::map<std::vector<std::uint32_t>, std::size_t> type_counts(std::size_t d, std::uint64_t n) {
  std::map<std::vector<std::uint32_t>, std::size_t> out;
  for (auto e : oracle::exps_of_degree(d, n)) {
    std::sort(e.begin(), e.end(), std::greater<>());
    while (!e.empty() && e.back() == 0) e.pop_back();
    ++out[e];
  }
  return out;
}

}  // namespace

TEST(Partitions, Examples) {
  auto p4 = partitions_of(4, 4);
  std::vector<Partition> expected{A({4}), A({3, 1}), A({2, 2}), A({2, 1, 1}), A({1, 1, 1, 1})};
  EXPECT_EQ(p4, expected);
  auto p0 = partitions_of(0, 3);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_EQ(p0[0].length(), 0u);
  EXPECT_EQ(partitions_of(2, 4), (std::vector<Partition>{A({2}), A({1, 1})}));
  EXPECT_EQ(partitions_of(4, 2), (std::vector<Partition>{A({4}), A({3, 1}), A({2, 2})}));
}

TEST(Partitions, CountsAgreeWithBruteForce) {
  for (std::uint64_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(partitions_of(n, n).size(), partition_count(n));
    // Partitions with at most d parts are exactly the observed monomial shapes.
    for (std::size_t d = 1; d <= 5 && n <= 7; ++d) {
      EXPECT_EQ(partitions_of(n, d).size(), type_counts(d, n).size()) << n << " " << d;
    }
  }
  EXPECT_EQ(partition_count(4), 5u);
  EXPECT_EQ(partition_count(10), 42u);
}

TEST(Partition, Canonicalizes) {
  EXPECT_EQ(A({0, 1, 2, 0}), A({2, 1}));
  EXPECT_EQ(A({0, 1, 2, 0}).to_string(), "(2,1)");
  EXPECT_EQ(A({2, 1}).padded(4), (std::vector<Exponent>{2, 1, 0, 0}));
  EXPECT_THROW(A({1, 1, 1}).padded(2), DimensionMismatch);
  EXPECT_TRUE(A({2, 2}).is_constant(2));
  EXPECT_FALSE(A({2, 2}).is_constant(3));
  EXPECT_TRUE(A({}).is_constant(3));
}

TEST(OrderType, Examples) {
  EXPECT_EQ(order_type(Monomial({2, 0, 1, 0})), A({2, 1}));
  EXPECT_EQ(order_type(Monomial({0, 1, 1, 1})).padded(4), (std::vector<Exponent>{1, 1, 1, 0}));
  EXPECT_EQ(order_type(Monomial({3, 0, 0, 0})).padded(4), (std::vector<Exponent>{3, 0, 0, 0}));
}

TEST(DimRa, Examples) {
  EXPECT_EQ(dim_R_a(A({1, 1}), 4), 6u);
  EXPECT_EQ(dim_R_a(A({3, 3, 3}), 3), 1u);
  EXPECT_EQ(dim_R_a(A({}), 5), 1u);
  EXPECT_EQ(dim_R_a(A({2, 1}), 3), 6u);
  EXPECT_EQ(dim_R_a(A({1, 1, 1}), 2), 0u);
}

TEST(MonomialsOfOrderType, Examples) {
  auto ms = monomials_of_order_type(A({1, 1}), 4);
  std::set<std::vector<Exponent>> got;
  for (const auto& m : ms) got.insert({m.exponents().begin(), m.exponents().end()});
  std::set<std::vector<Exponent>> want{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                       {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), GrevlexDescending{}));
  EXPECT_EQ(monomials_of_order_type(A({1, 1}), 2), (std::vector<Monomial>{Monomial({1, 1})}));
  EXPECT_EQ(monomials_of_order_type(A({2}), 2).size(), 2u);
}

// dim_R_a against enumeration for every partition with |a| <= 6, d <= 6.
TEST(Property, DimRaMatchesEnumeration) {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const auto counts = type_counts(d, n);
      for (const auto& a : partitions_of(n, d)) {
        const std::vector<std::uint32_t> key(a.parts().begin(), a.parts().end());
        EXPECT_EQ(dim_R_a(a, d), counts.at(key)) << a.to_string() << " d=" << d;
        EXPECT_EQ(monomials_of_order_type(a, d).size(), counts.at(key));
      }
    }
  }
}

// Proof-line inequalities: dim R_a >= d >= P(n) whenever n < d.
TEST(Property, ProofLineInequalities) {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::size_t d = n + 1; d <= 7; ++d) {
      EXPECT_GE(d, partition_count(n)) << n << " " << d;
      for (const auto& a : partitions_of(n, d)) {
        EXPECT_GE(dim_R_a(a, d), d) << a.to_string() << " d=" << d;
      }
    }
  }
  // P(n) <= n^n / n!.
  for (std::uint64_t n = 1; n <= 8; ++n) {
    double bound = 1;
    for (std::uint64_t i = 1; i <= n; ++i) bound *= static_cast<double>(n) / static_cast<double>(i);
    EXPECT_LE(static_cast<double>(partition_count(n)), bound + 1e-9) << n;
  }
}

TEST(Binomial, Values) {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), oracle::binom(n, k));
  }
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_EQ(hilbert_R(2, 5), 6u);
  EXPECT_EQ(hilbert_R(5, 2), 15u);
  EXPECT_EQ(hilbert_R(3, -1), 0u);
  EXPECT_EQ(hilbert_R(3, 0), 1u);
}

TEST(OrderTypeDivides, Examples) {
  EXPECT_TRUE(order_type_divides(A({1}), A({2, 1}), 3));
  EXPECT_TRUE(order_type_divides(A({1, 1}), A({2, 1}), 3));
  EXPECT_FALSE(order_type_divides(A({1, 1}), A({3}), 3));
  EXPECT_FALSE(order_type_divides(A({2, 2}), A({3, 1}), 2));
  // Brute-force cross-check on small cases.
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint64_t i = 0; i <= 3; ++i) {
      for (std::uint64_t j = i; j <= 4; ++j) {
        for (const auto& a : partitions_of(i, d)) {
          for (const auto& b : partitions_of(j, d)) {
            const auto mb = b.leading_monomial(d);
            bool any = false;
            for (const auto& ma : monomials_of_order_type(a, d)) any = any || ma.divides(mb);
            EXPECT_EQ(order_type_divides(a, b, d), any) << a << " " << b << " " << d;
          }
        }
      }
    }
  }
}

TEST(Permutation, ParseAndFormat) {
  auto s = Permutation::parse("[2,1,3]", 3);
  EXPECT_EQ(s, Permutation::parse("(1 2)", 3));
  EXPECT_EQ(s.to_string(), "[2,1,3]");
  EXPECT_EQ(s.to_cycle_string(), "(1 2)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(Permutation::parse("()", 4), Permutation::identity(4));
  EXPECT_EQ(Permutation::parse("(1 2 3)", 3).to_string(), "[2,3,1]");
  EXPECT_THROW(Permutation::parse("[1,1,3]", 3), DomainError);
  EXPECT_THROW(Permutation::parse("(1 4)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("[1,2]", 3), DimensionMismatch);
}

TEST(Permutation, GroupLaws) {
  auto g = symmetric_group(4);
  ASSERT_EQ(g.size(), 24u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  const auto e = Permutation::identity(4);
  for (const auto& a : g) {
    EXPECT_EQ(a * a.inverse(), e);
    EXPECT_EQ(a * e, a);
    for (const auto& b : g) {
      EXPECT_EQ((a * b).is_even(), a.is_even() == b.is_even());
      EXPECT_EQ((a * b)(0), a(b(0)));
    }
  }
  EXPECT_EQ(std::count_if(g.begin(), g.end(), [](const auto& p) { return p.is_even(); }), 12);
  EXPECT_THROW(symmetric_group(9), GroupCapExceeded);
  EXPECT_EQ(symmetric_group(9, 9).size(), 362880u);
  EXPECT_EQ(factorial(8), 40320u);
}
