#include <gtest/gtest.h>

#include <map>

#include "autorecon/error.hpp"
#include "autorecon/families.hpp"
#include "autorecon/recon.hpp"

using namespace autorecon;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

// first order at which the brute-force moment tables differ, up to k
std::optional<std::size_t> first_table_difference(const RatFn& f, const RatFn& g, std::size_t k) {
  const auto tf = MomentTable::from_function(f, k), tg = MomentTable::from_function(g, k);
  for (std::size_t n = 1; n <= k; ++n)
    if (tf.entries(n) != tg.entries(n)) return n;
  return std::nullopt;
}

}  // namespace

TEST(FamilyZ6, ValueTable) {
  EXPECT_EQ(family_z6(7, 0).values(), ints({14, 7, -7, -14, -7, 7}));
  EXPECT_EQ(family_z6(1, 4).values(), ints({2, -11, -13, -2, 11, 13}));
  EXPECT_EQ(family_z6(0, 0).values(), ints({0, 0, 0, 0, 0, 0}));
}

TEST(FamilyZ6, TransformIsSixTimesAPlusMinusRootMinusThreeB) {
  auto ctx = CyclotomicContext::get(6);
  const auto s = root_of_unity(ctx, 1) * Rational(2) - CycNum(ctx, Rational(1));  // sqrt(-3)
  EXPECT_EQ(s * s, CycNum(ctx, Rational(-3)));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const auto fhat = dft(family_z6(a, b));
      const auto& g = fhat.group();
      const CycNum ca(ctx, Rational(a)), cb(ctx, Rational(b));
      const auto plus = (ca + s * cb) * Rational(6), minus = (ca - s * cb) * Rational(6);
      // one of +-1 carries a + sqrt(-3) b, the other its conjugate
      const bool match = (fhat(g.element({1})) == plus && fhat(g.element({5})) == minus) ||
                         (fhat(g.element({1})) == minus && fhat(g.element({5})) == plus);
      EXPECT_TRUE(match) << a << " " << b;
      for (std::int64_t x : {0, 2, 3, 4}) EXPECT_TRUE(fhat(g.element({x})).is_zero());
    }
}

TEST(FamilyZ6, ConicPairAgreesThroughFive) {
  const auto f = family_z6(7, 0), g = family_z6(1, 4);
  const auto agreement = agreement_order(f, g, 8);
  EXPECT_EQ(agreement.agree_through, 5u);
  EXPECT_EQ(agreement.differs_at, 6u);
  EXPECT_EQ(first_table_difference(f, g, 6), 6u);
  EXPECT_FALSE(verify_translation(f, g).has_value());
}

TEST(FamilyZ6, MomentsThroughFiveDependOnlyOnTheRadius) {
  std::map<int, RatFn> first;
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b) {
      const int d2 = a * a + 3 * b * b;
      const auto f = family_z6(a, b);
      auto [it, fresh] = first.emplace(d2, f);
      if (fresh) continue;
      EXPECT_EQ(agreement_order(it->second, f, 5).agree_through, 5u) << a << " " << b;
    }
}

TEST(FamilyThreeR, SupportAndRationality) {
  const auto [f, g] = family_threer(1);
  const auto supp = support(dft(f));
  const auto& grp = f.group();
  EXPECT_EQ(supp, (std::vector<GroupElement>{grp.element({1}), grp.element({3}), grp.element({5})}));
  EXPECT_TRUE(rationality_check(dft(f)));
  EXPECT_TRUE(rationality_check(dft(g)));
  EXPECT_FALSE(verify_translation(f, g).has_value());
}

TEST(FamilyThreeR, AgreesThroughThreeR) {
  for (std::size_t r : {1, 2}) {
    const auto [f, g] = family_threer(r);
    const auto agreement = agreement_order(f, g, 3 * r + 3);
    EXPECT_EQ(agreement.agree_through, 3 * r) << r;
    EXPECT_EQ(agreement.differs_at, 3 * r + 1) << r;
    EXPECT_FALSE(verify_translation(f, g).has_value());
    EXPECT_TRUE(rationality_check(dft(f)));
    EXPECT_TRUE(rationality_check(dft(g)));
  }
  const auto [f1, g1] = family_threer(1);
  EXPECT_EQ(first_table_difference(f1, g1, 5), agreement_order(f1, g1, 5).differs_at);
}

TEST(FamilySharp, OrbitsOnZ30) {
  const auto [f, g] = family_sharp(3, 5, 1);
  const auto& grp = f.group();
  std::vector<GroupElement> expected;
  for (std::int64_t x : {3, 5, 9, 21, 25, 27}) expected.push_back(grp.element({x}));
  EXPECT_EQ(support(dft(f)), expected);
  EXPECT_EQ(support(dft(g)), expected);
  EXPECT_TRUE(rationality_check(dft(f)));
  EXPECT_TRUE(rationality_check(dft(g)));
  const auto ghat = dft(g);
  EXPECT_EQ(ghat(grp.element({25})), CycNum(ghat.context(), Rational(-1)));
  EXPECT_EQ(ghat(grp.element({21})), CycNum(ghat.context(), Rational(1)));
}

TEST(FamilySharp, AgreesThroughThreeRPlusTwo) {
  const auto [f, g] = family_sharp(3, 5, 1);
  const auto agreement = agreement_order(f, g, 8);
  EXPECT_EQ(agreement.agree_through, 5u);
  EXPECT_EQ(agreement.differs_at, 6u);
  EXPECT_EQ(agreement.witness.size(), 6u);
  EXPECT_FALSE(verify_translation(f, g).has_value());
}

TEST(FamilySharp, RejectsBadPrimes) {
  EXPECT_THROW(family_sharp(3, 3, 1), Error);
  EXPECT_THROW(family_sharp(2, 5, 1), Error);
  EXPECT_THROW(family_sharp(9, 5, 1), Error);
}

TEST(FamilyDelta, MomentsVanishBelowTheExponent) {
  const auto [f, g] = family_delta(GroupSpec({5}));
  const auto agreement = agreement_order(f, g, 6);
  EXPECT_EQ(agreement.agree_through, 4u);
  EXPECT_EQ(agreement.differs_at, 5u);
  EXPECT_FALSE(rationality_check(f));
}

TEST(FamilyDivisor, AgreesThroughTheBound) {
  const GroupSpec g({6, 6});
  const auto [f, h] = family_divisor(g, 3);
  EXPECT_EQ(h(g.element({2, 2})), root_of_unity(h.context(), 2));
  const auto agreement = agreement_order(f, h, 8);
  EXPECT_GE(agreement.agree_through, 4u);
  EXPECT_TRUE(agreement.differs_at.has_value());
  // the boundary d = a_1 is still a valid pair
  const auto [f6, h6] = family_divisor(g, 6);
  EXPECT_GE(agreement_order(f6, h6, 4).agree_through, 2u);
}

TEST(FamilyDivisor, RejectsBadDivisors) {
  EXPECT_THROW(family_divisor(GroupSpec({6, 6}), 4), Error);
  EXPECT_THROW(family_divisor(GroupSpec({6, 6}), 1), Error);
  EXPECT_THROW(family_divisor(GroupSpec({6}), 6), Error);
}

TEST(AgreementOrder, IdenticalAndBudget) {
  const auto f = family_z6(3, 2);
  const auto same = agreement_order(f, f, 6);
  EXPECT_EQ(same.agree_through, 6u);
  EXPECT_FALSE(same.differs_at.has_value());
  const auto [a, b] = family_threer(2);
  try {
    agreement_order(a, b, 8, 50);
    FAIL() << "expected budget_exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
  }
}

TEST(WorkedExamples, Shapes) {
  const auto z7 = worked_example_z7();
  EXPECT_EQ(z7.values(), ints({0, 0, 0, 1, 0, 1, 1}));
  const auto crab = worked_example_crab();
  EXPECT_EQ(crab.group().dims(), (std::vector<std::int64_t>{13, 13}));
  Rational total = 0;
  for (const auto& v : crab.values()) total += v;
  EXPECT_EQ(total, 35);
  EXPECT_EQ(crab(crab.group().element({6, 5})), 2);
}
