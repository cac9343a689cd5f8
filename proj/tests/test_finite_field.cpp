#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fqzeta/finite_field.hpp"

using namespace fqzeta;

namespace {

// Brute-force root test; enough for degree 2 and 3.
bool has_root_mod_p(const std::vector<int>& f, int p) {
  for (int x = 0; x < p; ++x) {
    long v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(FiniteField, PrimeFieldModulusIsX) {
  auto f = make_field(2, 1);
  EXPECT_EQ(f->q(), 2);
  EXPECT_TRUE(f->is_prime_field());
  EXPECT_EQ(f->modulus(), (std::vector<int>{0, 1}));
}

TEST(FiniteField, GF4UsesTheOnlyIrreducibleQuadratic) {
  // All four monic quadratics over F_2: exactly one has no root.
  int irreducible = 0;
  std::vector<int> found;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1)
      if (!has_root_mod_p({c0, c1, 1}, 2)) {
        ++irreducible;
        found = {c0, c1, 1};
      }
  ASSERT_EQ(irreducible, 1);
  EXPECT_EQ(make_field(2, 2)->modulus(), found);
  EXPECT_EQ(found, (std::vector<int>{1, 1, 1}));
}

TEST(FiniteField, GF9ModulusIsFirstRootlessQuadratic) {
  // Scan in the documented order: lower coefficients as a base-3 number,
  // linear coefficient most significant.
  std::vector<int> first;
  for (int c1 = 0; c1 < 3 && first.empty(); ++c1)
    for (int c0 = 0; c0 < 3 && first.empty(); ++c0)
      if (!has_root_mod_p({c0, c1, 1}, 3)) first = {c0, c1, 1};
  EXPECT_EQ(make_field(3, 2)->modulus(), first);
}

TEST(FiniteField, Deterministic) {
  EXPECT_EQ(make_field(2, 3)->modulus(), make_field(2, 3)->modulus());
  EXPECT_EQ(make_field(5, 2)->modulus(), make_field(5, 2)->modulus());
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(make_field(4, 1), Error);
  try {
    make_field(9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPrimeP);
  }
  try {
    make_field(2, 7);  // 128 > default 64
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedSize);
  }
  EXPECT_NO_THROW(make_field(2, 7, FieldLimits{128, 31}));
  auto f = make_field(3, 1);
  try {
    f->inv(Field::zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  EXPECT_THROW(make_field_q(6), Error);
  EXPECT_THROW(make_field_q(1), Error);
}

TEST(FiniteField, SmallExamples) {
  auto f5 = make_field(5, 1);
  EXPECT_EQ(f5->inv(f5->from_int(2)), f5->from_int(3));

  auto f9 = make_field(3, 2);
  for (auto x : f9->elements()) EXPECT_EQ(f9->add(x, f9->neg(x)), Field::zero());

  auto f4 = make_field(2, 2);
  for (auto x : f4->elements())
    if (x != Field::zero()) EXPECT_EQ(f4->mul(x, f4->inv(x)), Field::one());
}

TEST(FiniteField, Enumeration) {
  EXPECT_EQ(make_field(2, 1)->elements(), (std::vector<FieldElem>{FieldElem{0}, FieldElem{1}}));
  for (auto [p, s] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 1}, {7, 1}, {2, 4}}) {
    auto f = make_field(p, s);
    auto els = f->elements();
    ASSERT_EQ(static_cast<int>(els.size()), f->q());
    EXPECT_EQ(els.front(), Field::zero());
    std::set<std::vector<int>> coords;
    std::vector<int> prev;
    for (auto x : els) {
      auto c = f->coords(x);
      std::vector<int> rev(c.rbegin(), c.rend());
      if (!prev.empty()) EXPECT_LT(prev, rev);
      prev = rev;
      coords.insert(c);
      EXPECT_EQ(f->from_coords(c), x);
    }
    EXPECT_EQ(static_cast<int>(coords.size()), f->q());
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, Exhaustive) {
  auto [p, s] = GetParam();
  auto f = make_field(p, s);
  const auto els = f->elements();
  for (auto x : els) {
    EXPECT_EQ(f->add(x, Field::zero()), x);
    EXPECT_EQ(f->mul(x, Field::one()), x);
    EXPECT_EQ(f->sub(x, x), Field::zero());
    if (x != Field::zero()) {
      EXPECT_EQ(f->mul(x, f->inv(x)), Field::one());
      EXPECT_EQ(f->div(x, x), Field::one());
    }
    for (auto y : els) {
      EXPECT_EQ(f->add(x, y), f->add(y, x));
      EXPECT_EQ(f->mul(x, y), f->mul(y, x));
      EXPECT_EQ(f->pow(f->add(x, y), p), f->add(f->pow(x, p), f->pow(y, p)));
      for (auto z : els) {
        ASSERT_EQ(f->add(f->add(x, y), z), f->add(x, f->add(y, z)));
        ASSERT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
        ASSERT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
      }
    }
  }
}

TEST_P(FieldAxioms, CharacterSum) {
  auto [p, s] = GetParam();
  auto f = make_field(p, s);
  const int q = f->q();
  for (int l = 0; l <= 3 * (q - 1); ++l) {
    FieldElem sum = Field::zero();
    for (auto x : f->elements())
      if (x != Field::zero()) sum = f->add(sum, f->pow(x, static_cast<std::uint64_t>(l)));
    const FieldElem expected = (l % (q - 1) == 0) ? f->neg(Field::one()) : Field::zero();
    EXPECT_EQ(sum, expected) << "q=" << q << " l=" << l;
  }
}

TEST_P(FieldAxioms, PrimeSubfield) {
  auto [p, s] = GetParam();
  auto f = make_field(p, s);
  int count = 0;
  for (auto x : f->elements()) {
    const bool fixed = f->pow(x, static_cast<std::uint64_t>(p)) == x;
    EXPECT_EQ(fixed, f->in_prime_field(x));
    count += fixed;
  }
  EXPECT_EQ(count, p);
  for (int n = -12; n <= 12; ++n) EXPECT_TRUE(f->in_prime_field(f->from_int(n)));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1},
                                           std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{2, 4},
                                           std::pair{13, 1}));

TEST(FiniteField, GF9CharacterSumToTwenty) {
  auto f = make_field_q(9);
  for (int l = 0; l <= 20; ++l) {
    FieldElem sum = Field::zero();
    for (auto x : f->elements())
      if (x != Field::zero()) sum = f->add(sum, f->pow(x, static_cast<std::uint64_t>(l)));
    EXPECT_EQ(sum, l % 8 == 0 ? f->neg(Field::one()) : Field::zero());
  }
}

TEST(FiniteField, Names) {
  EXPECT_EQ(make_field_q(9)->name(), "GF(3^2)");
  EXPECT_EQ(make_field_q(7)->name(), "GF(7)");
  EXPECT_EQ(prime_power_split(64), (std::pair<int, int>{2, 6}));
}
