#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rtau/errors.hpp"
#include "rtau/polyq.hpp"

using namespace rtau;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long height) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-height, height);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (Integer& a : c) a = coeff(rng);
  return IntPoly(std::move(c));
}

RTauElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 12);
  IntPoly num = random_poly(rng, 4, 20);
  return RTauElem(num, den(rng));
}

IntPoly from_oracle(const oracle::Coeffs& c) {
  std::vector<Integer> v;
  for (std::int64_t a : c) v.emplace_back(static_cast<long>(a));
  return IntPoly(std::move(v));
}

}  // namespace

TEST(Canonicalize, RemovesCommonFactor) {
  RTauElem f(IntPoly{2, 2}, 4);
  EXPECT_EQ(f.num(), (IntPoly{1, 1}));
  EXPECT_EQ(f.den(), 2);
}

TEST(Canonicalize, AlreadyCanonical) {
  RTauElem f(IntPoly::x(), 1);
  EXPECT_EQ(f.num(), IntPoly::x());
  EXPECT_EQ(f.den(), 1);
}

TEST(Canonicalize, NegativeDenominator) {
  RTauElem f(IntPoly{2, 0, -1}, -2);
  EXPECT_EQ(f.num(), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(f.den(), 2);
}

TEST(Canonicalize, ZeroDenominatorThrows) {
  try {
    RTauElem(IntPoly{1}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_denominator);
  }
}

TEST(Canonicalize, ZeroIsZeroOverOne) {
  RTauElem f(IntPoly{}, 7);
  EXPECT_TRUE(f.num().is_zero());
  EXPECT_EQ(f.den(), 1);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(RTauElem(IntPoly{3}), RTauElem(IntPoly::x(), 2)), OrderResult::less);
  EXPECT_EQ(compare(RTauElem(IntPoly::x()), RTauElem(IntPoly::x())), OrderResult::equal);
  EXPECT_EQ(compare(RTauElem(IntPoly{0, 0, 1}, 2), RTauElem(IntPoly::x())), OrderResult::greater);
}

TEST(ContentPrimitive, Examples) {
  auto a = content_primitive(IntPoly{2, 4, 6});
  EXPECT_EQ(a.content, 2);
  EXPECT_EQ(a.primitive, (IntPoly{1, 2, 3}));
  auto b = content_primitive(IntPoly{-1, 1});
  EXPECT_EQ(b.content, 1);
  EXPECT_EQ(b.primitive, (IntPoly{-1, 1}));
  auto c = content_primitive(IntPoly{0, -4});
  EXPECT_EQ(c.content, 4);
  EXPECT_EQ(c.primitive, (IntPoly{0, -1}));
}

TEST(EvalMod, Examples) {
  EXPECT_EQ(eval_mod(IntPoly{3, 0, 1}, 1, 4), 0);
  EXPECT_EQ(eval_mod(IntPoly{1}, 123, 17), 1);
  EXPECT_EQ(eval_mod(IntPoly::x(), 2, 7), 2);
  EXPECT_EQ(eval_mod(IntPoly{-5, 1}, 1, 7), 3);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(irreducible_over_Z(IntPoly{1, 0, 1}));
  EXPECT_FALSE(irreducible_over_Z(IntPoly{-1, 0, 1}));
  EXPECT_TRUE(irreducible_over_Z(IntPoly{-2, 0, 0, 1}));
  EXPECT_FALSE(irreducible_over_Z(IntPoly{2, 2}));        // content 2
  EXPECT_TRUE(irreducible_over_Z(IntPoly{1, 0, 0, 0, 1}));  // reducible mod every prime
  EXPECT_FALSE(irreducible_over_Z(IntPoly{4, 0, 0, 0, 1}));  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(irreducible_over_Z(IntPoly{1, 0, 1} * IntPoly{3, 1, 0, 1}));
}

TEST(Irreducible, ConstantThrows) {
  try {
    irreducible_over_Z(IntPoly{5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::constant_input);
  }
}

TEST(Irreducible, DegreeCapOnlyForCompleteRoute) {
  // x^16 + 1 is reducible modulo every prime, so only recombination decides it
  IntPoly g = IntPoly::monomial(1, 16) + IntPoly{1};
  try {
    irreducible_over_Z(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degree_too_large);
  }
  IrreducibilityOptions wide;
  wide.max_degree = 16;
  EXPECT_TRUE(irreducible_over_Z(g, wide));
  // Eisenstein certificates are accepted at any degree
  EXPECT_TRUE(irreducible_over_Z(IntPoly::monomial(1, 30) + IntPoly{6, 3}));
}

TEST(Eisenstein, Examples) {
  EXPECT_TRUE(eisenstein_at(IntPoly{-2, 0, 1}, 2));
  EXPECT_FALSE(eisenstein_at(IntPoly{-4, 0, 1}, 2));
  EXPECT_TRUE(eisenstein_at(IntPoly{4123, 77, 1}, 7));
}

TEST(EnumerateI, FirstElements) {
  EXPECT_EQ(enumerate_I(0), (IntPoly{-1, 1}));
  EXPECT_EQ(enumerate_I(1), (IntPoly{0, 1}));
  EXPECT_EQ(enumerate_I(2), (IntPoly{1, 1}));
}

TEST(EnumerateI, FrozenPrefix) {
  // (degree + height, degree, lex on a_0..a_d)
  const std::vector<IntPoly> expected = {{-1, 1},  {0, 1},    {1, 1},   {-2, 1},    {-1, 2},   {1, 2},
                                         {2, 1},   {-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 0, 1}, {1, 1, 1}};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(enumerate_I(i), expected[i]) << i;
}

TEST(EnumerateI, DistinctIrreducibleAndCoversSmallBox) {
  std::set<std::vector<Integer>> seen;
  for (std::size_t i = 0; i < 200; ++i) {
    IntPoly f = enumerate_I(i);
    EXPECT_TRUE(in_I(f)) << format(f);
    EXPECT_TRUE(seen.insert({f.coeffs().begin(), f.coeffs().end()}).second) << format(f);
  }
  std::size_t members = 0;
  for (long a0 = -3; a0 <= 3; ++a0) {
    for (long a1 = -3; a1 <= 3; ++a1) {
      for (long a2 = 0; a2 <= 3; ++a2) {
        IntPoly g(std::vector<Integer>{a0, a1, a2});
        if (g.is_constant() || !in_I(g)) continue;
        ++members;
        EXPECT_TRUE(seen.count({g.coeffs().begin(), g.coeffs().end()})) << format(g);
      }
    }
  }
  EXPECT_GT(members, 50u);
}

TEST(Format, CanonicalText) {
  EXPECT_EQ(format(IntPoly{2, -1, 3}), "3x^2 - x + 2");
  EXPECT_EQ(format(IntPoly{0, -1}), "-x");
  EXPECT_EQ(format(IntPoly{}), "0");
  EXPECT_EQ(format(RTauElem(IntPoly{-2, 0, 0, 1}, 2)), "(x^3 - 2)/2");
}

TEST(PolyqProperty, CanonicalizeScaleInvariant) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> scale(-9, 9);
  for (int i = 0; i < 500; ++i) {
    RTauElem f = random_elem(rng);
    long a = scale(rng);
    if (a == 0) continue;
    RTauElem g(Integer(a) * f.num(), Integer(a) * f.den());
    EXPECT_EQ(g, f);
    EXPECT_EQ(compare(g, f), OrderResult::equal);
    EXPECT_EQ(RTauElem(f.num(), f.den()), f);
  }
}

TEST(PolyqProperty, OrderCompatibleWithAddition) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    RTauElem f = random_elem(rng), g = random_elem(rng), h = random_elem(rng);
    OrderResult fg = compare(f, g);
    EXPECT_EQ(compare(f + h, g + h), fg);
    // antisymmetry and totality
    OrderResult gf = compare(g, f);
    if (fg == OrderResult::less) EXPECT_EQ(gf, OrderResult::greater);
    if (fg == OrderResult::equal) EXPECT_EQ(gf, OrderResult::equal);
  }
}

TEST(PolyqProperty, OrderTransitive) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    RTauElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    if (compare(a, b) == OrderResult::less && compare(b, c) == OrderResult::less) {
      EXPECT_EQ(compare(a, c), OrderResult::less);
    }
  }
}

TEST(PolyqProperty, NoConstantBetweenConsecutiveIntegers) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> n(-50, 50), num(-300, 300), den(1, 12);
  for (int i = 0; i < 500; ++i) {
    const long base = n(rng);
    RTauElem h(IntPoly{num(rng)}, den(rng));
    if (h.den() != 1) continue;  // integer constants of the ring
    bool above = compare(RTauElem(IntPoly{base}), h) == OrderResult::less;
    bool below = compare(h, RTauElem(IntPoly{base + 1})) == OrderResult::less;
    EXPECT_FALSE(above && below);
  }
  // a positive-degree element sits above every constant
  EXPECT_EQ(compare(RTauElem(IntPoly{1000000}), RTauElem(IntPoly::x(), 1000)), OrderResult::less);
}

TEST(PolyqProperty, RingIdentities) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    IntPoly a = random_poly(rng, 5, 50), b = random_poly(rng, 5, 50), c = random_poly(rng, 5, 50);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, IntPoly{});
    if (!b.is_zero()) {
      auto q = exact_quotient(a * b, b);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, a);
    }
    Integer r = static_cast<long>(i % 17) - 8;
    EXPECT_EQ(evaluate(a * b, r), evaluate(a, r) * evaluate(b, r));
  }
}

TEST(PolyqProperty, EisensteinImpliesIrreducible) {
  std::mt19937_64 rng(16);
  const std::vector<long> primes = {2, 3, 5, 7};
  std::uniform_int_distribution<long> small(-6, 6);
  std::uniform_int_distribution<int> deg(1, 9);
  int certified = 0;
  for (int i = 0; i < 400; ++i) {
    const long p = primes[static_cast<std::size_t>(i) % primes.size()];
    const int d = deg(rng);
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = p * small(rng);
    c[0] = p * (p * small(rng) + 1 + (i % (p - 1 > 0 ? p - 1 : 1)));
    c[static_cast<std::size_t>(d)] = 1 + std::abs(small(rng)) * (p + 1);
    IntPoly g(std::move(c));
    if (!eisenstein_at(g, p)) continue;
    ++certified;
    EXPECT_TRUE(irreducible_over_Z(content_primitive(g).primitive)) << format(g);
  }
  EXPECT_GT(certified, 100);
}

TEST(PolyqProperty, IrreducibleMatchesFactorSearchSample) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 2000; ++i) {
    oracle::Coeffs c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& a : c) a = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    EXPECT_EQ(irreducible_over_Z(from_oracle(c)), oracle::irreducible(c)) << format(from_oracle(c));
  }
}

TEST(PolyqProperty, RecombinationAgreesOnProducts) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 60; ++i) {
    IntPoly a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6);
    if (a.is_constant() || b.is_constant()) continue;
    IntPoly g = content_primitive(a * b).primitive;
    EXPECT_FALSE(irreducible_over_Z(g)) << format(g);
    EXPECT_FALSE(irreducible_by_recombination(g)) << format(g);
  }
}
