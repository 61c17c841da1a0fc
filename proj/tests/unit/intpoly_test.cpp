#include "fibfield/intpoly.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace fibfield {
namespace {

IntPoly random_poly(std::size_t max_len, long bound, bool nonzero_constant = false) {
  auto& g = oracle::rng();
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<mpz_class> c(len(g));
  for (auto& v : c) v = coef(g);
  // Occasionally a large coefficient to leave machine-word range.
  if (coef(g) > 0) c[0] *= mpz_class("123456789012345678901234567890");
  if (nonzero_constant && c[0] == 0) c[0] = 7;
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

TEST(IntPoly, AddExamples) {
  EXPECT_EQ(add(IntPoly{1, 0, 1}, IntPoly{0, 2, 0, 1}), (IntPoly{1, 2, 1, 1}));
  const IntPoly p{3, 0, -4, 5};
  EXPECT_EQ(add(p, IntPoly{}), p);
  const IntPoly cancel = add(IntPoly{0, 1}, IntPoly{0, -1});
  EXPECT_TRUE(cancel.is_zero());
  EXPECT_TRUE(cancel.coeffs().empty());
}

TEST(IntPoly, CanonicalForm) {
  const IntPoly p(std::vector<mpz_class>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_THROW(IntPoly{}.degree(), std::domain_error);
  EXPECT_EQ(IntPoly::monomial(5, 3).coeff(3), 5);
  EXPECT_EQ(IntPoly::monomial(5, 3).coeff(10), 0);
}

TEST(IntPoly, MulByXPlusExamples) {
  // f_4 from f_3, f_2.
  EXPECT_EQ(mul_by_x_plus(IntPoly{1, 0, 1}, IntPoly{0, 1}), (IntPoly{0, 2, 0, 1}));
  EXPECT_EQ(mul_by_x_plus(IntPoly{}, IntPoly{1}), (IntPoly{1}));
  // f_5 = x^4 + 3x^2 + 1.
  EXPECT_EQ(mul_by_x_plus(IntPoly{0, 2, 0, 1}, IntPoly{1, 0, 1}), (IntPoly{1, 0, 3, 0, 1}));
}

TEST(IntPoly, ReciprocalExamples) {
  EXPECT_EQ(reciprocal(IntPoly{1, 0, 1}), (IntPoly{1, 0, 1}));
  EXPECT_EQ(reciprocal(IntPoly{0, 2, 0, 1}), (IntPoly{1, 0, 2}));
  EXPECT_EQ(reciprocal(IntPoly{1, 0, 3, 0, 1}), (IntPoly{1, 0, 3, 0, 1}));
  try {
    reciprocal(IntPoly{});
    FAIL() << "expected throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "reciprocal of zero undefined");
  }
}

TEST(IntPoly, SelfReciprocalExamples) {
  EXPECT_TRUE(is_self_reciprocal(IntPoly{1, 0, 1}));
  EXPECT_FALSE(is_self_reciprocal(IntPoly{0, 2, 0, 1}));
  // f_9 = x^8 + 7x^6 + 15x^4 + 10x^2 + 1; mod 3 this is x^8 + x^6 + x^2 + 1.
  const IntPoly f9{1, 0, 10, 0, 15, 0, 7, 0, 1};
  EXPECT_FALSE(is_self_reciprocal(f9));
  EXPECT_TRUE(is_self_reciprocal(f9, mpz_class(3)));
  EXPECT_THROW(is_self_reciprocal(IntPoly{}), std::invalid_argument);
  EXPECT_THROW(is_self_reciprocal(f9, mpz_class(1)), std::invalid_argument);
}

TEST(IntPoly, SelfReciprocalRecomputesDegreeAfterReduction) {
  // 3x^3 + x^2 + 2x + 1 mod 3 -> x^2 + 2x + 1: palindrome only after the drop.
  EXPECT_TRUE(is_self_reciprocal(IntPoly{1, 2, 1, 3}, mpz_class(3)));
  EXPECT_FALSE(is_self_reciprocal(IntPoly{1, 2, 1, 3}));
}

TEST(IntPoly, ReduceModExamples) {
  EXPECT_EQ(reduce_mod(IntPoly{1, 0, 3, 0, 1}, 3), (IntPoly{1, 0, 0, 0, 1}));
  EXPECT_EQ(reduce_mod(IntPoly{0, 2, 0, 1}, 2), (IntPoly{0, 0, 0, 1}));
  EXPECT_EQ(reduce_mod(IntPoly{1, 0, 6, 0, 5, 0, 1}, 3), (IntPoly{1, 0, 0, 0, 2, 0, 1}));
  EXPECT_EQ(reduce_mod(IntPoly{-1, -5}, 3), (IntPoly{2, 1}));
  EXPECT_THROW(reduce_mod(IntPoly{1}, 1), std::invalid_argument);
}

TEST(IntPoly, RenderExamples) {
  EXPECT_EQ(to_string(IntPoly{1, 0, 3, 0, 1}), "x^4 + 3x^2 + 1");
  EXPECT_EQ(to_string(IntPoly{0, -2, 0, -1}), "-x^3 - 2x");
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(to_string(IntPoly{-7}), "-7");
  EXPECT_EQ(to_string(IntPoly{0, 1}), "x");
  EXPECT_EQ(parse_int_poly("3*x^2 + x^2 - 4"), (IntPoly{-4, 0, 4}));
  EXPECT_THROW(parse_int_poly(""), std::invalid_argument);
  EXPECT_THROW(parse_int_poly("x^"), std::invalid_argument);
  EXPECT_THROW(parse_int_poly("2 3"), std::invalid_argument);
}

TEST(IntPolyProperty, RenderParseRoundTrip) {
  for (int i = 0; i < 300; ++i) {
    const IntPoly p = random_poly(12, 20);
    EXPECT_EQ(parse_int_poly(to_string(p)), p) << to_string(p);
  }
}

TEST(IntPolyProperty, ReciprocalInvolution) {
  for (int i = 0; i < 300; ++i) {
    const IntPoly p = random_poly(10, 5, /*nonzero_constant=*/true);
    EXPECT_EQ(reciprocal(reciprocal(p)), p);
    EXPECT_EQ(is_self_reciprocal(p), reciprocal(p) == p);
  }
}

TEST(IntPolyProperty, AddCommutativeAssociative) {
  for (int i = 0; i < 300; ++i) {
    const IntPoly a = random_poly(8, 50), b = random_poly(8, 50), c = random_poly(8, 50);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(IntPolyProperty, ReduceModIdempotent) {
  auto& g = oracle::rng();
  std::uniform_int_distribution<long> mod(2, 40);
  for (int i = 0; i < 300; ++i) {
    const IntPoly p = random_poly(10, 100);
    const mpz_class m = mod(g);
    EXPECT_EQ(reduce_mod(reduce_mod(p, m), m), reduce_mod(p, m));
  }
}

TEST(IntPolyProperty, EvaluationIsRingHomomorphism) {
  for (int i = 0; i < 100; ++i) {
    const IntPoly a = random_poly(6, 9), b = random_poly(6, 9);
    for (long x : {-3L, 0L, 2L, 11L}) {
      EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
      EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
    }
  }
}

}  // namespace
}  // namespace fibfield
