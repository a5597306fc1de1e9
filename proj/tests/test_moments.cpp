#include <gtest/gtest.h>

#include <random>

#include "autorecon/error.hpp"
#include "autorecon/moments.hpp"
#include "support.hpp"

using namespace autorecon;

namespace {

RatFn example_one() {
  auto g = make_group({7});
  RatFn f(g);
  for (std::int64_t p : {3, 5, 6}) f(g.element({p})) = 1;
  return f;
}

GroupElement z7(std::int64_t a) { return make_group({7}).element({a}); }

}  // namespace

TEST(Autocorr, ExampleOneLowOrders) {
  const auto f = example_one();
  EXPECT_EQ(autocorr(f, {}), 3);
  EXPECT_EQ(autocorr(f, {z7(0)}), 3);
  for (std::int64_t x = 1; x < 7; ++x) EXPECT_EQ(autocorr(f, {z7(x)}), 1);
  RatFn zero(make_group({7}));
  EXPECT_EQ(autocorr(zero, {z7(1), z7(4)}), 0);
}

TEST(Autocorr, PermutationInvariance) {
  std::mt19937_64 rng(1);
  auto g = make_group({2, 4});
  const auto f = autorecon::testing::random_integer_fn(g, rng);
  for (int t = 0; t < 30; ++t) {
    const auto a = autorecon::testing::random_element(g, rng), b = autorecon::testing::random_element(g, rng),
               c = autorecon::testing::random_element(g, rng);
    const auto v = autocorr(f, {a, b, c});
    EXPECT_EQ(autocorr(f, {c, a, b}), v);
    EXPECT_EQ(autocorr(f, {b, c, a}), v);
  }
}

TEST(ZeroSumSeq, OrderCountsNonzeroEntries) {
  auto g = make_group({7});
  EXPECT_EQ(ZeroSumSeq(g, {z7(1), z7(6)}).order(), 2u);
  EXPECT_EQ(ZeroSumSeq(g, {z7(1), z7(0), z7(6), z7(0)}).order(), 2u);
  EXPECT_EQ(ZeroSumSeq(g, {z7(0), z7(0)}).order(), 1u);
  EXPECT_THROW(ZeroSumSeq(g, {z7(1), z7(1)}), Error);
}

TEST(TransformedMoment, ExampleOneValues) {
  const auto f = example_one();
  const auto fhat = dft(f);
  auto g = f.group();
  auto ctx = fhat.context();
  for (std::int64_t x = 1; x < 7; ++x)
    EXPECT_EQ(transformed_moment(fhat, ZeroSumSeq(g, {z7(x), z7(7 - x)})), CycNum(ctx, Rational(2)));
  // M3hat(1,1) = fhat(1)^2 fhat(-2) = a^2 * conj(sigma_2 a) where a = xi + xi^2 + xi^4
  const auto a = root_of_unity(ctx, 1) + root_of_unity(ctx, 2) + root_of_unity(ctx, 4);
  EXPECT_EQ(transformed_moment(fhat, ZeroSumSeq(g, {z7(1), z7(1), z7(5)})), a * a * a.automorphism(5));
  EXPECT_EQ(transformed_moment(fhat, ZeroSumSeq(g, {z7(0), z7(0)})), CycNum(ctx, Rational(1)));
}

TEST(MomentTable, TablePathMatchesProductPath) {
  std::mt19937_64 rng(2);
  const std::vector<std::vector<std::int64_t>> shapes{{5}, {6}, {2, 3}, {2, 4}};
  for (const auto& dims : shapes) {
    const GroupSpec g(dims);
    const auto f = autorecon::testing::random_integer_fn(g, rng);
    const auto table = MomentTable::from_function(f, 4);
    const auto fhat = dft(f);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + t % 3;
      std::vector<GroupElement> xs;
      GroupElement sum = g.zero();
      for (std::size_t j = 0; j + 1 < n; ++j) {
        xs.push_back(autorecon::testing::random_element(g, rng));
        sum = g.add(sum, xs.back());
      }
      xs.push_back(g.neg(sum));
      const ZeroSumSeq zs(g, xs);
      EXPECT_EQ(table.transformed(zs), transformed_moment(fhat, zs));
    }
  }
}

TEST(MomentTable, OrderBeyondTableIsRejected) {
  const auto f = example_one();
  const auto table = MomentTable::from_function(f, 3);
  try {
    table.transformed(ZeroSumSeq(f.group(), {z7(1), z7(1), z7(1), z7(4)}));
    FAIL() << "expected order_exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::order_exceeded);
  }
  EXPECT_THROW(MomentTable::from_function(f, 6, 100), Error);
}

TEST(MomentTable, SymmetricLookup) {
  const auto f = example_one();
  const auto table = MomentTable::from_function(f, 3);
  EXPECT_EQ(table.value({z7(1), z7(3)}), table.value({z7(3), z7(1)}));
  EXPECT_EQ(table.value({z7(1), z7(3)}), autocorr(f, {z7(1), z7(3)}));
}

TEST(MomentOracle, CapAndLog) {
  const auto f = example_one();
  auto o = MomentOracle::from_function(f, 3);
  auto g = f.group();
  o.query({z7(1), z7(6)});
  EXPECT_EQ(o.log(), 2u);
  o.query({z7(1), z7(2), z7(4)});
  EXPECT_EQ(o.log(), 3u);
  EXPECT_THROW(o.query({z7(1), z7(1), z7(1), z7(4)}), Error);
  EXPECT_EQ(o.log(), 3u);
  EXPECT_EQ(o.first_moment(), 3);
  EXPECT_EQ(o.log(), 3u);

  auto big = MomentOracle::from_function(f, 6);
  big.query({z7(2), z7(5)});
  big.query({z7(1), z7(1), z7(1), z7(4)});
  big.query({z7(3), z7(4)});
  EXPECT_EQ(big.log(), 4u);
}

TEST(MomentOracle, TableAndSpectrumSourcesAgree) {
  const auto f = example_one();
  auto a = MomentOracle::from_function(f, 3);
  auto b = MomentOracle::from_table(MomentTable::from_function(f, 3), 3);
  EXPECT_EQ(a.first_moment(), b.first_moment());
  for (std::int64_t x = 0; x < 7; ++x)
    for (std::int64_t y = 0; y < 7; ++y) {
      const std::vector<GroupElement> seq{z7(x), z7(y), z7(14 - x - y)};
      EXPECT_EQ(a.query(seq), b.query(seq));
    }
}

TEST(Prop1, DirectMomentsMatchTransformFormula) {
  std::mt19937_64 rng(3);
  EXPECT_TRUE(prop1_identity_check(autorecon::testing::random_integer_fn(make_group({6}), rng), 2, 20));
  EXPECT_TRUE(prop1_identity_check(autorecon::testing::random_integer_fn(make_group({2, 4}), rng), 3, 20));
  auto g = make_group({3, 3});
  RatFn delta(g);
  delta(g.zero()) = 1;
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(prop1_identity_check(delta, n, 10));
}

TEST(Prop1, AgreementEquivalence) {
  // translates share every autocorrelation table
  std::mt19937_64 rng(4);
  auto g = make_group({6});
  for (int t = 0; t < 5; ++t) {
    const auto f = autorecon::testing::random_integer_fn(g, rng);
    const auto h = translate(f, g.element({2}));
    const auto tf = MomentTable::from_function(f, 4), th = MomentTable::from_function(h, 4);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(tf.entries(n), th.entries(n));
  }
}

TEST(MomentsGalois, UnitsActOnSequences) {
  std::mt19937_64 rng(5);
  auto g = make_group({3, 9});
  const auto fhat = dft(autorecon::testing::random_integer_fn(g, rng));
  for (int t = 0; t < 20; ++t) {
    const auto a = autorecon::testing::random_element(g, rng), b = autorecon::testing::random_element(g, rng);
    const auto c = g.neg(g.add(a, b));
    const auto m = transformed_moment(fhat, ZeroSumSeq(g, {a, b, c}));
    for (std::int64_t u : {2, 4, 5, 7, 8}) {
      const auto scaled = ZeroSumSeq(g, {g.scale(u, a), g.scale(u, b), g.scale(u, c)});
      EXPECT_EQ(transformed_moment(fhat, scaled), m.automorphism(u));
    }
  }
}
