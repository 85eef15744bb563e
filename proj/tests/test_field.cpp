#include <gtest/gtest.h>

#include "g2cm/field.hpp"
#include "support/oracles.hpp"

using namespace g2cm;

TEST(PrimeField, ConstructionValidatesModulus) {
  EXPECT_EQ(PrimeField(13).p(), 13U);
  try {
    PrimeField bad(4);
    FAIL() << "4 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositeModulus);
  }
  try {
    PrimeField bad(2);
    FAIL() << "2 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvenCharacteristic);
  }
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(561), Error);  // Carmichael
  EXPECT_NO_THROW(PrimeField(2147483647));
  EXPECT_NO_THROW(PrimeField(18446744073709551557ULL));
}

TEST(PrimeField, ArithmeticExamples) {
  const PrimeField F(13);
  EXPECT_EQ(F.add(7, 8), 2U);
  EXPECT_EQ(F.div(1, 5), static_cast<Residue>(oracle::inverse(5, 13)));
  EXPECT_EQ(F.div(1, 5), 8U);
  EXPECT_EQ(F.pow(2, 12), 1U);
  EXPECT_EQ(F.sub(3, 5), 11U);
  EXPECT_EQ(F.reduce(-1), 12U);
  EXPECT_EQ(F.lift(12), -1);
  try {
    (void)F.div(3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(PrimeField, LegendreAndSqrtExamples) {
  EXPECT_EQ(PrimeField(13).legendre(4), 1);
  EXPECT_EQ(PrimeField(5).legendre(2), -1);
  EXPECT_FALSE(oracle::is_square_by_search(2, 5));
  EXPECT_EQ(PrimeField(97).legendre(0), 0);

  EXPECT_EQ(PrimeField(13).sqrt_all(4), (std::vector<Residue>{2, 11}));
  EXPECT_TRUE(PrimeField(5).sqrt_all(2).empty());
  EXPECT_EQ(PrimeField(13).sqrt_all(0), (std::vector<Residue>{0}));
}

TEST(PrimeField, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (u64 p : {3ULL, 13ULL, 97ULL, 65537ULL, 2147483647ULL, 18446744073709551557ULL}) {
    const PrimeField F(p);
    for (int i = 0; i < 2000; ++i) {
      const Residue a = uniform_below(rng, p), b = uniform_below(rng, p), c = uniform_below(rng, p);
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.sub(F.add(a, b), b), a);
      if (a != 0) {
        EXPECT_EQ(F.mul(a, F.div(1, a)), 1U);
      }
      if (a != 0 && b != 0) {
        EXPECT_EQ(F.legendre(F.mul(a, b)), F.legendre(a) * F.legendre(b));
      }
      for (Residue r : F.sqrt_all(a)) EXPECT_EQ(F.mul(r, r), a);
    }
  }
}

TEST(PrimeField, ResidueCountsByExhaustion) {
  for (u64 p = 3; p <= 97; ++p) {
    if (!oracle::is_prime_naive(p)) continue;
    const PrimeField F(p);
    u64 residues = 0;
    for (Residue a = 1; a < p; ++a) {
      const bool square = oracle::is_square_by_search(static_cast<oracle::i64>(a), static_cast<oracle::i64>(p));
      EXPECT_EQ(F.legendre(a) == 1, square) << "p=" << p << " a=" << a;
      EXPECT_EQ(F.sqrt_all(a).size(), square ? 2U : 0U);
      residues += square;
    }
    EXPECT_EQ(residues, (p - 1) / 2);
  }
}

TEST(QuadraticExtension, NonResidueChoice) {
  EXPECT_EQ(QuadraticExtension(PrimeField(13)).non_residue(), 2U);
  EXPECT_EQ(QuadraticExtension(PrimeField(7)).non_residue(), 3U);
  const QuadraticExtension E(PrimeField(13));
  EXPECT_EQ(E.mul(E.t(), E.t()), (QuadraticExtension::Elem{2, 0}));
}

TEST(QuadraticExtension, ArithmeticAndSquareRoots) {
  Rng rng(5);
  for (u64 p : {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 97ULL, 1000003ULL}) {
    const QuadraticExtension E{PrimeField(p)};
    for (int i = 0; i < 500; ++i) {
      const QuadraticExtension::Elem a{uniform_below(rng, p), uniform_below(rng, p)};
      const QuadraticExtension::Elem b{uniform_below(rng, p), uniform_below(rng, p)};
      EXPECT_EQ(E.pow(a, p), E.conj(a));  // Frobenius
      if (!(a == QuadraticExtension::Elem{})) {
        EXPECT_EQ(E.mul(a, E.inv(a)), (QuadraticExtension::Elem{1, 0}));
      }
      EXPECT_EQ(E.mul(E.add(a, b), b), E.add(E.mul(a, b), E.mul(b, b)));
      const auto sq = E.mul(a, a);
      const auto r = E.sqrt(sq);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(E.mul(*r, *r), sq);
      // Base-field elements are always squares in F_{p^2}.
      EXPECT_TRUE(E.sqrt(E.from_base(a.lo)).has_value());
      if (E.legendre(a) == -1) {
        EXPECT_FALSE(E.sqrt(a).has_value());
      }
    }
  }
}
