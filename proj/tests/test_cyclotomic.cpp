#include <gtest/gtest.h>

#include <random>

#include "autorecon/cyclotomic.hpp"
#include "autorecon/error.hpp"

using namespace autorecon;

namespace {

CycNum xi_sum(const ContextPtr& ctx, std::initializer_list<std::int64_t> exps) {
  CycNum z(ctx);
  for (auto e : exps) z += root_of_unity(ctx, e);
  return z;
}

CycNum random_cyc(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  std::vector<Rational> c(ctx->degree());
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return CycNum::from_coeffs(ctx, c);
}

double distance(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

}  // namespace

TEST(CyclotomicPoly, SmallConductors) {
  EXPECT_EQ(cyclotomic_poly(6), (IntVector{1, -1, 1}));
  EXPECT_EQ(cyclotomic_poly(7), (IntVector{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (IntVector{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(1), (IntVector{-1, 1}));
  for (std::int64_t n = 1; n <= 60; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(cyclotomic_poly(n).size()) - 1, euler_phi(n));
}

TEST(CyclotomicPoly, DividesXnMinusOne) {
  // x^N - 1 reduces to zero: xi^N = 1 in the reduction table
  for (std::int64_t n : {5, 9, 12, 15, 30, 36}) {
    auto ctx = CyclotomicContext::get(n);
    IntVector lifted(static_cast<std::size_t>(n) + 1);
    lifted[0] = -1;
    lifted[static_cast<std::size_t>(n)] = 1;
    EXPECT_TRUE(CycNum::from_lifted(ctx, lifted, 1).is_zero());
  }
}

TEST(CycNum, ExampleOneGaussPeriods) {
  auto ctx = CyclotomicContext::get(7);
  const auto a = xi_sum(ctx, {1, 2, 4});
  const auto b = xi_sum(ctx, {3, 5, 6});
  EXPECT_EQ(a * b, CycNum(ctx, Rational(2)));
  EXPECT_EQ(a.inv(), b * Rational(1, 2));
}

TEST(CycNum, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(1);
  for (std::int64_t n : {1, 2, 5, 6, 7, 12, 15, 30}) {
    auto ctx = CyclotomicContext::get(n);
    const CycNum one(ctx, Rational(1));
    for (int t = 0; t < 20; ++t) {
      const auto a = random_cyc(ctx, rng), b = random_cyc(ctx, rng), c = random_cyc(ctx, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      if (!a.is_zero()) EXPECT_EQ(a * a.inv(), one);
      EXPECT_EQ(a - a, CycNum(ctx));
    }
  }
  EXPECT_THROW(CycNum(CyclotomicContext::get(5)).inv(), Error);
}

TEST(CycNum, ContextMismatchIsRejected) {
  const CycNum a(CyclotomicContext::get(5), Rational(1));
  const CycNum b(CyclotomicContext::get(7), Rational(1));
  EXPECT_THROW(a + b, Error);
}

TEST(CycNum, CanonicalRoundTrip) {
  std::mt19937_64 rng(2);
  auto ctx = CyclotomicContext::get(12);
  for (int t = 0; t < 30; ++t) {
    const auto z = random_cyc(ctx, rng);
    EXPECT_EQ(CycNum::from_coeffs(ctx, z.coeffs()), z);
    // z + 1 - xi^4 on the length-N lift, then corrected back to z
    std::vector<Rational> lifted(12);
    const auto c = z.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) lifted[i] = c[i];
    lifted[0] += 1;
    lifted[4] -= 1;
    auto w = CycNum::from_coeffs(ctx, lifted) - CycNum(ctx, Rational(1)) + root_of_unity(ctx, 4);
    EXPECT_EQ(w, z);
  }
}

TEST(RootOfUnity, Basics) {
  auto c6 = CyclotomicContext::get(6);
  EXPECT_EQ(root_of_unity(c6, 0), CycNum(c6, Rational(1)));
  EXPECT_EQ(root_of_unity(c6, 3), CycNum(c6, Rational(-1)));
  EXPECT_EQ(root_of_unity(c6, 2).numerators(), (IntVector{-1, 1}));
  EXPECT_EQ(root_of_unity(c6, -1), root_of_unity(c6, 5));
}

TEST(Automorphism, SpecExamplesAndComposition) {
  std::mt19937_64 rng(3);
  auto ctx = CyclotomicContext::get(15);
  for (int t = 0; t < 10; ++t) {
    const auto z = random_cyc(ctx, rng), w = random_cyc(ctx, rng);
    EXPECT_EQ(z.automorphism(1), z);
    EXPECT_EQ(z.automorphism(0), CycNum(ctx, Rational(1)));
    for (std::int64_t a : {2, 4, 7, 8, 11, 13, 14})
      for (std::int64_t b : {2, 7, 14}) {
        EXPECT_EQ(z.automorphism(b).automorphism(a), z.automorphism(a * b % 15));
      }
    EXPECT_EQ((z * w).automorphism(7), z.automorphism(7) * w.automorphism(7));
    const auto zc = z.conj().numeric_embedding(128);
    const auto zz = z.numeric_embedding(128);
    EXPECT_LT(abs(zc.re - zz.re).to_double(), 1e-30);
    EXPECT_LT(abs(zc.im + zz.im).to_double(), 1e-30);
  }
  EXPECT_THROW(CycNum(ctx, Rational(1)).automorphism(3), Error);
  try {
    CycNum(ctx, Rational(1)).automorphism(5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_unit);
  }
}

TEST(AsRootOfUnity, DetectsExactlyTheRoots) {
  auto c6 = CyclotomicContext::get(6);
  EXPECT_EQ(as_root_of_unity(CycNum(c6, Rational(1))), 0);
  EXPECT_EQ(as_root_of_unity(CycNum(c6, Rational(-1))), 3);
  auto c7 = CyclotomicContext::get(7);
  EXPECT_FALSE(as_root_of_unity(xi_sum(c7, {1, 2})).has_value());
  for (std::int64_t n : {4, 9, 30})
    for (std::int64_t t = -n; t < 2 * n; ++t)
      EXPECT_EQ(as_root_of_unity(root_of_unity(CyclotomicContext::get(n), t)), ((t % n) + n) % n);
}

TEST(NumericEmbedding, KnownValues) {
  auto c4 = CyclotomicContext::get(4);
  auto c6 = CyclotomicContext::get(6);
  auto one = CycNum(c4, Rational(1)).numeric_embedding(64);
  EXPECT_NEAR(one.re.to_double(), 1.0, 1e-18);
  EXPECT_NEAR(one.im.to_double(), 0.0, 1e-18);
  auto i = root_of_unity(c4, 1).numeric_embedding(64);
  EXPECT_NEAR(i.re.to_double(), 0.0, 1e-18);
  EXPECT_NEAR(i.im.to_double(), 1.0, 1e-18);
  auto x6 = root_of_unity(c6, 1).numeric_embedding(200);
  const Real half(Rational(1, 2), 200);
  const Real s3 = sqrt(Real(Integer(3), 200)) * half;
  EXPECT_LT(abs(x6.re - half).exponent2(), -195);
  EXPECT_LT(abs(x6.im - s3).exponent2(), -195);
}

TEST(NumericEmbedding, RingHomomorphismWithinTolerance) {
  std::mt19937_64 rng(4);
  for (std::int64_t n : {7, 12, 30}) {
    auto ctx = CyclotomicContext::get(n);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_cyc(ctx, rng), b = random_cyc(ctx, rng);
      const auto ea = a.numeric_embedding(128), eb = b.numeric_embedding(128);
      EXPECT_LT(distance((a * b).numeric_embedding(128), ea * eb), 1e-30);
      EXPECT_LT(distance((a + b).numeric_embedding(128), ea + eb), 1e-30);
    }
  }
}

TEST(CycNum, RationalEmbeddingMatchesRationalArithmetic) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  auto ctx = CyclotomicContext::get(9);
  for (int t = 0; t < 100; ++t) {
    Rational p(num(rng), den(rng)), q(num(rng), den(rng) + 1);
    p.canonicalize();
    q.canonicalize();
    const CycNum a(ctx, p), b(ctx, q);
    EXPECT_EQ((a * b).rational_value(), p * q);
    EXPECT_EQ((a - b).rational_value(), p - q);
    if (q != 0) EXPECT_EQ((a / b).rational_value(), p / q);
  }
}

TEST(CycNum, PowerMatchesRepeatedProduct) {
  auto ctx = CyclotomicContext::get(12);
  const auto z = xi_sum(ctx, {1, 5}) + CycNum(ctx, Rational(2));
  CycNum acc(ctx, Rational(1));
  for (int k = 0; k < 13; ++k) {
    EXPECT_EQ(z.pow(k), acc);
    acc *= z;
  }
  EXPECT_EQ(z.pow(-3) * z.pow(3), CycNum(ctx, Rational(1)));
}
