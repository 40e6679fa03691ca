#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lsa/linalg.hpp"

using namespace lsa;

namespace {

RatMatrix random_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  RatMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref produces the canonical reduced form of a known matrix") {
  RatMatrix m(3, 4);
  m << 1, 2, 1, 1,
       2, 4, 0, 2,
       3, 6, 1, 3;
  const auto r = rref(m);
  REQUIRE(r.rank == 2);
  REQUIRE(r.pivot_cols == std::vector<Index>{0, 2});
  RatMatrix want(3, 4);
  want << 1, 2, 0, 1,
          0, 0, 1, 0,
          0, 0, 0, 0;
  REQUIRE(r.reduced == want);
}

TEST_CASE("rref is idempotent and respects rank-nullity on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rows = 1 + trial % 6;
    const Index cols = 1 + (trial * 7) % 6;
    const RatMatrix m = random_matrix(rng, rows, cols);
    const auto r = rref(m);
    const auto again = rref(r.reduced);
    REQUIRE(again.reduced == r.reduced);
    REQUIRE(again.rank == r.rank);
    const auto kernel = nullspace(m);
    REQUIRE(kernel.dim() == cols - r.rank);
    for (Index b = 0; b < kernel.dim(); ++b) {
      const RatVector v = kernel.rows().row(b).transpose();
      REQUIRE(is_zero(m * v));
    }
  }
}

TEST_CASE("rref pivots are exact ones with zeros above and below") {
  std::mt19937 rng(99);
  const RatMatrix m = random_matrix(rng, 5, 7);
  const auto r = rref(m);
  for (Index i = 0; i < r.rank; ++i) {
    const Index c = r.pivot_cols[i];
    for (Index row = 0; row < m.rows(); ++row)
      REQUIRE(r.reduced(row, c) == (row == i ? 1 : 0));
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  RatMatrix a(3, 2);
  a << 1, 1,
       2, -1,
       1, 4;
  const RatVector x0 = (RatVector(2) << Rational(3, 7), Rational(-5, 2)).finished();
  const RatVector b = a * x0;
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  REQUIRE(a * *x == b);

  RatVector bad = b;
  bad(2) += 1;  // outside the column span
  REQUIRE_FALSE(solve(a, bad).has_value());
}

TEST_CASE("solve returns a particular solution of an underdetermined system") {
  RatMatrix a(1, 3);
  a << 2, 3, 5;
  RatVector b(1);
  b << 7;
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  REQUIRE(a * *x == b);
}

TEST_CASE("echelon bases canonicalize: equal spans compare equal") {
  RatMatrix s1(2, 3);
  s1 << 1, 1, 0,
        0, 0, 1;
  RatMatrix s2(3, 3);  // same plane, messier spanning set
  s2 << 2, 2, 2,
        3, 3, -1,
        5, 5, 1;
  const Subspace a(3, s1);
  const Subspace b(3, s2);
  REQUIRE(a == b);
  REQUIRE(a.dim() == 2);
  REQUIRE(a.contains((RatVector(3) << 7, 7, -4).finished()));
  REQUIRE_FALSE(a.contains((RatVector(3) << 1, 2, 0).finished()));
}

TEST_CASE("echelon basis reduce returns an exact residual") {
  RatMatrix rows(1, 3);
  rows << 1, 0, 2;
  const Subspace s(3, rows);
  const RatVector v = (RatVector(3) << 3, 5, 6).finished();
  const RatVector res = s.reduce(v);
  REQUIRE(res == (RatVector(3) << 0, 5, 0).finished());
  REQUIRE_FALSE(s.contains(v));
  REQUIRE(s.contains((RatVector(3) << -4, 0, -8).finished()));
}

TEST_CASE("zero and full subspaces behave as lattice extremes") {
  const auto zero = Subspace::zero(4);
  const auto full = Subspace::full(4);
  REQUIRE(zero.dim() == 0);
  REQUIRE(full.dim() == 4);
  std::mt19937 rng(7);
  const RatVector v = random_matrix(rng, 4, 1).col(0);
  REQUIRE(full.contains(v));
  REQUIRE(zero.contains(RatVector::Zero(4)));
  REQUIRE(subspace_sum(zero, full) == full);
}

TEST_CASE("subspace_sum is the join of the two spans") {
  RatMatrix r1(1, 3), r2(1, 3);
  r1 << 1, 0, 0;
  r2 << 0, 1, 0;
  const Subspace sum = subspace_sum(Subspace(3, r1), Subspace(3, r2));
  REQUIRE(sum.dim() == 2);
  REQUIRE(sum.contains((RatVector(3) << 5, -3, 0).finished()));
  REQUIRE_FALSE(sum.contains((RatVector(3) << 0, 0, 1).finished()));
}

TEST_CASE("nullspace of an invertible matrix is zero") {
  RatMatrix m(2, 2);
  m << 1, 2,
       3, 4;
  REQUIRE(nullspace(m).dim() == 0);
}

TEST_CASE("rational parsing round-trips and rejects malformed text") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational q(num(rng), den(rng));
    REQUIRE(parse_rational(q.str()) == q);
  }
  REQUIRE(parse_rational("-14/21") == Rational(-2, 3));
  REQUIRE(parse_rational("+5") == 5);
  REQUIRE(parse_rational("0") == 0);

  for (const char* bad : {"", "abc", "1/0", "1//2", "1/ 2", "2.5", "1/-2x", "/3",
                          "5/", "--2"})
    REQUIRE_THROWS_AS(parse_rational(bad), InputError);
}

TEST_CASE("rationals stay exact through long elimination chains") {
  // Hilbert-like matrices are notorious for floating-point failure; exact
  // arithmetic must invert them perfectly.
  const Index n = 6;
  RatMatrix h(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) h(i, j) = Rational(1, 1 + i + j);
  const auto r = rref(h);
  REQUIRE(r.rank == n);
  REQUIRE(r.reduced == RatMatrix::Identity(n, n));
}
