#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(Rref, IdentityAndZero) {
  F2 k = gf(2);
  auto r = rref(Mat<F2>::identity(k, 2));
  EXPECT_EQ(r.reduced, Mat<F2>::identity(k, 2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  auto z = rref(Mat<F2>(k, 3, 3));
  EXPECT_TRUE(z.reduced.is_zero());
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Rref, OnesOverF2) {
  F2 k = gf(2);
  auto r = rref(ints(k, 2, 2, {1, 1, 1, 1}));
  EXPECT_EQ(r.reduced, ints(k, 2, 2, {1, 1, 0, 0}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  F2 k = gf(2);
  EXPECT_EQ(kernel(Mat<F2>::identity(k, 3)).dim(), 0u);
  EXPECT_EQ(kernel(Mat<F2>(k, 2, 3)).dim(), 3u);
  // brute force over all four vectors of F2^2
  Mat<F2> m = ints(k, 1, 2, {1, 1});
  auto ker = kernel(m);
  std::size_t count = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto v = ints(k, 2, 1, {a, b});
      bool in_kernel = (m * v).is_zero();
      EXPECT_EQ(in_kernel, ker.contains(v));
      count += in_kernel;
    }
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(ker.basis(), ints(k, 1, 2, {1, 1}));
}

TEST(Quotient, Examples) {
  Q q;
  auto full = quotient(2, Subspace<Q>(q, 2));
  EXPECT_EQ(full.dim, 2u);
  EXPECT_EQ(full.projection, Mat<Q>::identity(q, 2));
  EXPECT_EQ(quotient(2, Subspace<Q>::full(q, 2)).dim, 0u);
  auto r = quotient(4, Subspace<Q>::column_span(ints(q, 4, 1, {1, -1, 0, 0})));
  EXPECT_EQ(r.dim, 3u);
  EXPECT_TRUE((r.projection * ints(q, 4, 1, {1, -1, 0, 0})).is_zero());
  EXPECT_EQ(r.projection * r.section, Mat<Q>::identity(q, 3));
}

TEST(Solve, Examples) {
  F2 k2 = gf(2);
  auto b = ints(k2, 2, 1, {1, 0});
  EXPECT_EQ(*solve(Mat<F2>::identity(k2, 2), b), b);
  EXPECT_FALSE(solve(Mat<F2>(k2, 2, 2), b).has_value());
  PrimeField k3 = gf(3);
  EXPECT_EQ(*solve(ints(k3, 1, 1, {2}), ints(k3, 1, 1, {1})), ints(k3, 1, 1, {2}));
}

TEST(Kron, Examples) {
  Q q;
  EXPECT_EQ(kron(Mat<Q>::identity(q, 2), Mat<Q>::identity(q, 3)), Mat<Q>::identity(q, 6));
  EXPECT_TRUE(kron(ints(q, 2, 2, {1, 2, 3, 4}), Mat<Q>(q, 1, 1)).is_zero());
  F2 k = gf(2);
  EXPECT_EQ(kron(ints(k, 1, 2, {1, 1}), ints(k, 2, 1, {1, 1})), ints(k, 2, 2, {1, 1, 1, 1}));
}

TEST(Rational, CanonicalForm) {
  Q q;
  auto x = q.parse("6/4");
  EXPECT_EQ(q.to_string(x), "3/2");
  EXPECT_EQ(q.to_string(q.parse("2/-4")), "-1/2");
}

// Property tests on seeded random matrices.

template <class F>
void check_properties(const F& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto m = random_mat(k, r, c, rng);
    auto once = rref(m).reduced;
    EXPECT_EQ(rref(once).reduced, once);
    EXPECT_EQ(rank(m) + kernel(m).dim(), c);
    auto rel = Subspace<F>::column_span(random_mat(k, c, 1 + rng() % 3, rng));
    auto q = quotient(c, rel);
    if (rel.dim() > 0) EXPECT_TRUE((q.projection * rel.inclusion()).is_zero());
    EXPECT_EQ(rank(q.projection), q.dim);
    EXPECT_EQ(q.projection * q.section, Mat<F>::identity(k, q.dim));
    auto a = random_mat(k, 2, 3, rng), cm = random_mat(k, 3, 2, rng);
    auto b = random_mat(k, 2, 2, rng), d = random_mat(k, 2, 3, rng);
    EXPECT_EQ(kron(a * cm, b * d), kron(a, b) * kron(cm, d));
    auto x = solve(m, m * random_mat(k, c, 1, rng));
    ASSERT_TRUE(x.has_value());
  }
}

TEST(ExactlaProperties, F2) { check_properties(gf(2), 11); }
TEST(ExactlaProperties, F3) { check_properties(gf(3), 12); }
TEST(ExactlaProperties, Q) { check_properties(Q{}, 13); }
