#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "holoroot/multiindex.hpp"

using namespace holoroot;

namespace {

// All alpha in N^k with |alpha| = q, by odometer over the box [0, q]^k.
std::vector<MultiIndex> brute_force_length(std::size_t k, std::uint32_t q) {
  std::vector<MultiIndex> out;
  MultiIndex alpha(k);
  while (true) {
    if (length(alpha) == q) out.push_back(alpha);
    std::size_t i = 0;
    while (i < k && alpha[i] == q) alpha[i++] = 0;
    if (i == k) return out;
    ++alpha[i];
  }
}

// Every monomial of the two minimal shapes up to the given length.
std::vector<MultiIndex> minimal_shapes(std::size_t k, std::uint32_t max_len) {
  std::vector<MultiIndex> out;
  for (std::uint32_t p = 0; p <= max_len; ++p)
    for (std::uint32_t q = 0; p + q <= max_len; ++q) {
      MultiIndex a(k);
      a[0] += p;
      a[k - 1] += q;
      out.push_back(a);
      if (p + q + 1 <= max_len)
        for (std::size_t j = 2; j + 1 <= k; ++j) {
          MultiIndex b = a;
          ++b[j - 1];
          out.push_back(b);
        }
    }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

TEST(MultiIndex, LengthAndWeight) {
  EXPECT_EQ(length(MultiIndex{0, 0, 0}), 0u);
  EXPECT_EQ(length(MultiIndex{1, 1, 0}), 2u);
  EXPECT_EQ(length(MultiIndex{2, 0, 1}), 3u);
  EXPECT_EQ(weight(MultiIndex{0, 0, 0}), 0u);
  EXPECT_EQ(weight(MultiIndex{1, 1, 0}), 3u);
  EXPECT_EQ(weight(MultiIndex{0, 0, 2}), 6u);
}

TEST(MultiIndex, Equivalence) {
  EXPECT_TRUE(equivalent(MultiIndex{1, 0, 1}, MultiIndex{0, 2, 0}));
  EXPECT_FALSE(equivalent(MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}));
  const MultiIndex a{3, 1, 4};
  EXPECT_TRUE(equivalent(a, a));
  EXPECT_THROW(equivalent(MultiIndex{1, 0}, MultiIndex{1, 0, 0}), std::invalid_argument);
}

TEST(MultiIndex, Factorial) {
  EXPECT_EQ(factorial(MultiIndex{3, 0, 2}), Rational(12));
  EXPECT_EQ(factorial(MultiIndex{0, 0}), Rational(1));
}

TEST(MultiIndex, GradedOrderSortsByDegreeThenLexDescending) {
  GradedOrder less;
  EXPECT_TRUE(less(MultiIndex{0, 1}, MultiIndex{2, 0}));
  EXPECT_TRUE(less(MultiIndex{2, 0}, MultiIndex{1, 1}));
  EXPECT_TRUE(less(MultiIndex{1, 1}, MultiIndex{0, 2}));
  EXPECT_FALSE(less(MultiIndex{1, 1}, MultiIndex{1, 1}));
}

TEST(EnumerateClass, Examples) {
  EXPECT_EQ(enumerate_class(3, {2, 4}), (std::vector<MultiIndex>{{1, 0, 1}, {0, 2, 0}}));
  EXPECT_EQ(enumerate_class(2, {1, 2}), (std::vector<MultiIndex>{{0, 1}}));
  EXPECT_TRUE(enumerate_class(2, {2, 5}).empty());
  EXPECT_EQ(enumerate_class(4, {0, 0}), (std::vector<MultiIndex>{MultiIndex(4)}));
}

TEST(EnumerateClass, MatchesBruteForceAndCountsCompositions) {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::uint32_t q = 0; q <= 8; ++q) {
      const auto all = brute_force_length(k, q);
      std::size_t total = 0;
      for (std::uint32_t r = 0; r <= k * q + 2; ++r) {
        std::vector<MultiIndex> expected;
        for (const auto& a : all)
          if (weight(a) == r) expected.push_back(a);
        std::sort(expected.rbegin(), expected.rend());
        const auto got = enumerate_class(k, {q, r});
        EXPECT_EQ(got, expected) << "k=" << k << " q=" << q << " r=" << r;
        EXPECT_EQ(!got.empty(), r >= q && r <= k * q);
        EXPECT_EQ(class_nonempty(k, {q, r}), !got.empty());
        total += got.size();
      }
      EXPECT_EQ(total, binomial(q + k - 1, k - 1));
    }
  }
}

TEST(MinimalForm, Examples) {
  EXPECT_EQ(minimal_form(3, {2, 4}), (MultiIndex{1, 0, 1}));
  EXPECT_EQ(minimal_form(3, {2, 3}), (MultiIndex{1, 1, 0}));
  EXPECT_EQ(minimal_form(2, {2, 3}), (MultiIndex{1, 1}));
  EXPECT_FALSE(minimal_form(3, {2, 7}).has_value());
  EXPECT_FALSE(minimal_form(3, {2, 1}).has_value());
  EXPECT_EQ(minimal_form(4, {0, 0}), MultiIndex(4));
}

TEST(MinimalForm, UniqueAmongAllMinimalShapes) {
  for (std::size_t k = 1; k <= 6; ++k) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::set<MultiIndex> distinct;
    for (const auto& m : minimal_shapes(k, 12)) {
      ASSERT_TRUE(is_minimal(m));
      if (!distinct.insert(m).second) continue;
      EXPECT_TRUE(seen.insert({length(m), weight(m)}).second)
          << "two minimal monomials share (q, r) for k=" << k;
      EXPECT_EQ(minimal_form(k, {length(m), weight(m)}), m);
    }
  }
}

TEST(ReduceToMinimal, Examples) {
  EXPECT_EQ(reduce_to_minimal(MultiIndex{0, 2, 0}), (MultiIndex{1, 0, 1}));
  EXPECT_EQ(reduce_to_minimal(MultiIndex{0, 1, 1}), (MultiIndex{0, 1, 1}));
  EXPECT_EQ(reduce_to_minimal(MultiIndex{1, 0, 2}), (MultiIndex{1, 0, 2}));
}

TEST(ReduceToMinimal, AgreesWithMinimalFormExhaustively) {
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::uint32_t q = 0; q <= 8; ++q)
      for (const auto& alpha : brute_force_length(k, q)) {
        const MultiIndex mu = reduce_to_minimal(alpha);
        EXPECT_TRUE(is_minimal(mu));
        EXPECT_TRUE(equivalent(mu, alpha));
        EXPECT_EQ(reduce_to_minimal(mu), mu);
        EXPECT_EQ(minimal_form(k, {q, weight(alpha)}), mu);
      }
}

TEST(IsMinimal, Shapes) {
  EXPECT_TRUE(is_minimal(MultiIndex{3, 0, 0, 2}));
  EXPECT_TRUE(is_minimal(MultiIndex{3, 0, 1, 2}));
  EXPECT_FALSE(is_minimal(MultiIndex{0, 2, 0, 0}));
  EXPECT_FALSE(is_minimal(MultiIndex{0, 1, 1, 0}));
}

TEST(Surface, ChartExamples) {
  auto r = [](long n) { return Rational(n); };
  EXPECT_EQ(sk_point<Rational>(3, r(1), r(1), Chart::first).eta,
            (std::vector<Rational>{1, -1, 1}));
  EXPECT_EQ(sk_point<Rational>(3, r(1), r(1), Chart::last).eta,
            (std::vector<Rational>{1, -1, 1}));
  EXPECT_EQ(sk_point<Rational>(2, r(2), r(3), Chart::first).eta, (std::vector<Rational>{2, -6}));
}

TEST(Surface, MinorsInPMajorOrder) {
  const SurfacePoint<Rational> off{{1, 0, 1}};
  EXPECT_EQ(sk_minors(off), (std::vector<Rational>{0, 1, -1, 0}));
  EXPECT_FALSE(on_surface(off));
  EXPECT_TRUE(on_surface(SurfacePoint<Rational>{{1, 1, 1}}));
  EXPECT_TRUE(on_surface(SurfacePoint<Rational>{{1, -1, 1}}));
}

TEST(Surface, ChartImagesLieOnTheConeExactly) {
  proptest::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(2, 6));
    const Rational z0 = gen.rational(20, 9);
    const Rational z1 = gen.rational(20, 9);
    for (Chart chart : {Chart::first, Chart::last}) {
      const auto p = sk_point<Rational>(k, z0, z1, chart);
      for (const auto& m : sk_minors(p)) EXPECT_EQ(m, 0);
    }
  }
}

TEST(Surface, FloatingToleranceIsRelative) {
  using C = std::complex<double>;
  const auto big = sk_point<C>(4, C(1e6, 2e5), C(0.3, -0.7), Chart::first);
  EXPECT_TRUE(on_surface(big));
  const auto tiny = sk_point<C>(4, C(1e-9, 0), C(0.5, 0), Chart::last);
  EXPECT_TRUE(on_surface(tiny));
  EXPECT_FALSE(on_surface(SurfacePoint<C>{{C(1e-9), C(0), C(1e-9)}}));
  EXPECT_TRUE(on_surface(SurfacePoint<C>{{C(0), C(0), C(0)}}));
}
