#include "fibfield/ffield.hpp"
#include "fibfield/numtheory.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace fibfield {
namespace {

using Coeffs = std::vector<std::uint32_t>;

TEST(MakeField, ModulusSelection) {
  EXPECT_EQ(make_field(3, 1)->modulus(), (Coeffs{0, 1}));
  EXPECT_EQ(make_field(3, 2)->modulus(), (Coeffs{1, 0, 1}));
  EXPECT_EQ(make_field(2, 3)->modulus(), (Coeffs{1, 1, 0, 1}));
  EXPECT_EQ(make_field(2, 2)->modulus(), (Coeffs{1, 1, 1}));
  EXPECT_EQ(make_field(3, 3)->modulus(), (Coeffs{1, 2, 0, 1}));
  EXPECT_EQ(make_field(7, 2)->modulus(), (Coeffs{1, 0, 1}));
  EXPECT_EQ(make_field(5, 2)->modulus(), (Coeffs{2, 0, 1}));
  EXPECT_EQ(make_field(3, 2)->to_string(), "GF(3^2) mod x^2 + 1");
  EXPECT_EQ(make_field(2, 3)->to_string(), "GF(2^3) mod x^3 + x + 1");
}

TEST(MakeField, Errors) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(3, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 21), std::invalid_argument);
  EXPECT_NO_THROW(make_field(2, 20));
  EXPECT_THROW(make_field(3, 5, 100), std::invalid_argument);
  EXPECT_THROW(make_field(2, 40, 1ull << 62), std::invalid_argument);
}

TEST(Irreducible, AgreesWithRootCountForSmallDegrees) {
  // Degrees 2 and 3: irreducible iff no root in F_p.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t deg : {2u, 3u}) {
      const std::uint64_t count = checked_pow(p, deg);
      for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs m(deg + 1, 0);
        m[deg] = 1;
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < deg; ++i) {
          m[i] = c % p;
          c /= p;
        }
        bool has_root = false;
        for (std::uint64_t x = 0; x < p; ++x) {
          std::uint64_t acc = 0;
          for (std::size_t k = m.size(); k-- > 0;) acc = (acc * x + m[k]) % p;
          has_root = has_root || acc == 0;
        }
        EXPECT_EQ(is_irreducible(m, p), !has_root);
      }
    }
  }
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2 has no root but factors.
  EXPECT_FALSE(is_irreducible(Coeffs{1, 0, 1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible(Coeffs{1, 1, 0, 0, 1}, 2));
}

TEST(FieldOps, Examples) {
  const auto f9 = make_field(3, 2);
  const FqElem t = f9->generator();
  EXPECT_EQ(t * t, f9->from_int(2));
  const auto f7 = make_field(7, 1);
  EXPECT_EQ(f7->from_int(2).inv(), f7->from_int(4));
  const auto f8 = make_field(2, 3);
  for (const FqElem& g : f8->enumerate()) {
    if (!g.is_zero()) {
      EXPECT_TRUE(g.pow(7).is_one());
    }
  }
  EXPECT_THROW(f7->zero().inv(), std::domain_error);
  EXPECT_THROW(f7->one() + f9->one(), std::invalid_argument);
  EXPECT_EQ(to_string(f9->generator()), "(0,1)");
}

TEST(FieldOps, ContextsCompareByValue) {
  const auto a = make_field(5, 2);
  const auto b = make_field(5, 2);
  EXPECT_EQ(a->one() + b->one(), a->from_int(2));
}

TEST(Enumerate, Examples) {
  const auto f2 = make_field(2, 1);
  const auto e2 = f2->enumerate();
  ASSERT_EQ(e2.size(), 2u);
  EXPECT_TRUE(e2[0].is_zero());
  EXPECT_TRUE(e2[1].is_one());
  const auto f4 = make_field(2, 2);
  std::set<std::uint32_t> codes;
  for (const auto& a : f4->enumerate()) codes.insert(a.code());
  EXPECT_EQ(codes.size(), 4u);
  const auto f9 = make_field(3, 2);
  FqElem sum = f9->zero();
  for (const auto& a : f9->enumerate()) sum += a;
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(f9->enumerate().size(), 9u);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

TEST_P(FieldAxioms, RandomTriples) {
  const auto [p, e] = GetParam();
  const auto f = make_field(p, e);
  std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
  auto& g = oracle::rng();
  for (int i = 0; i < 500; ++i) {
    const FqElem a = f->element(pick(g)), b = f->element(pick(g)), c = f->element(pick(g));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inv()).is_one());
    }
    // Frobenius.
    EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
    // Table multiplication against coefficient-vector multiplication.
    EXPECT_EQ(f->mul(a.code(), b.code()), f->mul_polynomial(a.code(), b.code()));
  }
}

TEST_P(FieldAxioms, SquareRoots) {
  const auto [p, e] = GetParam();
  const auto f = make_field(p, e);
  if (f->q() > 4096) {
    // Too large to enumerate: every sampled square must have a root.
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int i = 0; i < 200; ++i) {
      const FqElem a = f->element(pick(oracle::rng()));
      const auto r = f->sqrt(a * a);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, a * a);
    }
    return;
  }
  std::set<std::uint32_t> squares;
  for (const auto& a : f->enumerate()) squares.insert((a * a).code());
  for (const auto& a : f->enumerate()) {
    const auto r = f->sqrt(a);
    EXPECT_EQ(r.has_value(), squares.count(a.code()) == 1) << to_string(a);
    if (r) {
      EXPECT_EQ(*r * *r, a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{2u, 4u}, std::pair{3u, 1u},
                                           std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u},
                                           std::pair{7u, 2u}, std::pair{13u, 1u}, std::pair{2u, 8u},
                                           std::pair{2u, 17u}, std::pair{5u, 7u}));

TEST(EmbedQuadratic, PrimeField) {
  const auto f3 = make_field(3, 1);
  const auto ext = embed_quadratic(f3);
  EXPECT_EQ(ext.big->q(), 9u);
  EXPECT_TRUE(ext.embed(f3->one()).is_one());
  EXPECT_EQ(ext.embed(f3->from_int(2)), ext.big->from_int(2));
}

TEST(EmbedQuadratic, IsRingHomomorphism) {
  for (auto [p, e] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{2u, 3u}}) {
    const auto small = make_field(p, e);
    const auto ext = embed_quadratic(small);
    std::uniform_int_distribution<std::uint32_t> pick(0, small->q() - 1);
    for (int i = 0; i < 100; ++i) {
      const FqElem a = small->element(pick(oracle::rng())), b = small->element(pick(oracle::rng()));
      EXPECT_EQ(ext.embed(a + b), ext.embed(a) + ext.embed(b));
      EXPECT_EQ(ext.embed(a * b), ext.embed(a) * ext.embed(b));
    }
    std::set<std::uint32_t> image(ext.image.begin(), ext.image.end());
    EXPECT_EQ(image.size(), small->q());
  }
}

TEST(EmbedQuadratic, F4GeneratorImageSatisfiesMinimalPolynomial) {
  const auto f4 = make_field(2, 2);  // t^2 + t + 1
  const auto ext = embed_quadratic(f4);
  EXPECT_EQ(ext.big->q(), 16u);
  const FqElem g = ext.generator_image;
  EXPECT_TRUE((g * g + g + ext.big->one()).is_zero());
  EXPECT_FALSE(g.is_one());
}

TEST(SolveU, Examples) {
  const auto f3 = make_field(3, 1);
  const auto ext3 = embed_quadratic(f3);
  auto [u1, u2] = solve_u(f3->zero(), ext3);
  std::set<std::uint32_t> roots{u1.code(), u2.code()};
  EXPECT_EQ(roots, (std::set<std::uint32_t>{1, 2}));

  // x = 1 in F_7: 5 is not a square mod 7, so both roots lie outside F_7.
  const auto f7 = make_field(7, 1);
  const auto ext7 = embed_quadratic(f7);
  const FqElem X = ext7.embed(f7->one());
  std::vector<FqElem> brute;
  for (const auto& u : ext7.big->enumerate()) {
    if ((u * u - X * u - ext7.big->one()).is_zero()) brute.push_back(u);
  }
  ASSERT_EQ(brute.size(), 2u);
  auto [r1, r2] = solve_u(f7->one(), ext7);
  EXPECT_EQ(std::set<std::uint32_t>({r1.code(), r2.code()}),
            std::set<std::uint32_t>({brute[0].code(), brute[1].code()}));
  EXPECT_FALSE(r1.pow(7) == r1);
}

TEST(SolveU, VietaForEveryElement) {
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 1u},
                      std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{13u, 1u}}) {
    const auto small = make_field(p, e);
    const auto ext = embed_quadratic(small);
    for (const auto& x : small->enumerate()) {
      auto [u1, u2] = solve_u(x, ext);
      const FqElem X = ext.embed(x);
      EXPECT_TRUE((u1 * u1 - X * u1 - ext.big->one()).is_zero());
      EXPECT_TRUE((u2 * u2 - X * u2 - ext.big->one()).is_zero());
      EXPECT_EQ(u1 * u2, -ext.big->one());
      EXPECT_EQ(u1 + u2, X);
    }
  }
}

}  // namespace
}  // namespace fibfield
