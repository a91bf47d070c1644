#include <gtest/gtest.h>

#include <set>

#include "ddg/error.hpp"
#include "ddg/field.hpp"
#include "support.hpp"

using namespace ddg;

namespace {

bool has_root(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Field, PrimeOrder) {
  const Field f = Field::make(5);
  EXPECT_EQ(f.p(), 5u);
  EXPECT_EQ(f.n(), 1u);
}

TEST(Field, NineIsQuadraticOverThree) {
  const Field f = Field::make(9);
  EXPECT_EQ(f.p(), 3u);
  EXPECT_EQ(f.n(), 2u);
  ASSERT_EQ(f.modulus().size(), 3u);
  EXPECT_EQ(f.modulus().back(), 1u);
  // a quadratic without roots is irreducible
  EXPECT_FALSE(has_root(3, f.modulus()));
}

TEST(Field, CubicModuliHaveNoRoots) {
  for (std::uint32_t q : {8u, 27u, 125u}) {
    const Field f = Field::make(q);
    ASSERT_EQ(f.n(), 3u);
    EXPECT_FALSE(has_root(f.p(), f.modulus())) << q;
  }
}

TEST(Field, NotPrimePower) {
  for (std::uint32_t q : {0u, 1u, 6u, 12u, 100u}) {
    expect_error(ErrorCode::kNotPrimePower, [&] { Field::make(q); });
  }
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_TRUE(is_prime_power(2048));
}

TEST(Field, SmallProducts) {
  const Field f5 = Field::make(5);
  EXPECT_EQ(f5.mul(f5.element(2), f5.element(3)).index, 1u);
  EXPECT_EQ(f5.inv(f5.element(2)).index, 3u);

  const Field f4(2, {1, 1, 1});  // x^2 + x + 1
  const FieldElement x = f4.element(2);
  EXPECT_EQ(f4.mul(x, x).index, 3u);  // x + 1
}

TEST(Field, AdditiveIdentityAndInverseOfOne) {
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 9u, 16u, 49u}) {
    const Field f = Field::make(q);
    for (const FieldElement a : f.elements()) EXPECT_EQ(f.add(a, f.zero()), a);
    EXPECT_EQ(f.inv(f.one()), f.one());
  }
}

TEST(Field, InverseOfZeroThrows) {
  const Field f = Field::make(7);
  expect_error(ErrorCode::kDivisionByZero, [&] { f.inv(f.zero()); });
}

TEST(Field, ElementLists) {
  EXPECT_EQ(Field::make(2).elements(), (std::vector<FieldElement>{{0}, {1}}));
  EXPECT_EQ(Field::make(9).elements().size(), 9u);
  const auto e13 = Field::make(13).elements();
  EXPECT_EQ(std::set<FieldElement>(e13.begin(), e13.end()).size(), 13u);
}

TEST(Field, MatchesPolynomialArithmetic) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    const Field f = Field::make(q);
    const test::SlowField slow{f.p(), f.modulus()};
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(f.element(a), f.element(b)).index, slow.add(a, b)) << q;
        ASSERT_EQ(f.mul(f.element(a), f.element(b)).index, slow.mul(a, b)) << q;
      }
    }
  }
}

TEST(Field, PrimitiveElementGeneratesAll) {
  for (std::uint32_t q : {2u, 4u, 5u, 8u, 9u, 11u, 13u, 16u, 27u}) {
    const Field f = Field::make(q);
    std::set<std::uint32_t> seen;
    FieldElement x = f.one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      seen.insert(x.index);
      x = f.mul(x, f.primitive());
    }
    EXPECT_EQ(seen.size(), q - 1) << q;
    EXPECT_EQ(x, f.one());
  }
}

TEST(Field, ExplicitReducibleModulusRejected) {
  expect_error(ErrorCode::kInvalidArgument, [] { Field(2, {1, 0, 1}); });  // (x+1)^2
  EXPECT_FALSE(is_irreducible(2, std::vector<std::uint32_t>{0, 1, 1}));
  EXPECT_TRUE(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(Field, SameOrderSameField) {
  EXPECT_TRUE(Field::make(16) == Field::make(16));
  EXPECT_EQ(Field::make(16).modulus_string(), Field::make(16).modulus_string());
}
