#include <gtest/gtest.h>

#include <random>

#include "fuscat/cyc.hpp"

using namespace fuscat;

namespace {

Cyc random_cyc(std::mt19937_64& rng) {
    static const long conductors[] = {1, 3, 4, 5, 8, 12, 16, 24};
    long n = conductors[rng() % 8];
    std::vector<Rational> c(n);
    for (auto& v : c) v = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    return Cyc::from_coeffs(n, c);
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

}  // namespace

TEST(Cyc, CanonicalForms) {
    EXPECT_EQ(root_of_unity(4, 2), Cyc(-1));
    EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), Cyc(-1));
    EXPECT_EQ(root_of_unity(6, 1).conductor(), 3);
    EXPECT_EQ(root_of_unity(8, 1) + root_of_unity(8, 7), sqrt2());
    EXPECT_EQ(sqrt2().conductor(), 8);
    EXPECT_EQ(sqrt_rational(-3).conductor(), 3);
    EXPECT_EQ(sqrt_rational(-1), root_of_unity(4, 1));
    EXPECT_EQ(sqrt_rational(2), sqrt2());
    EXPECT_EQ(sqrt_rational(Rational(1, 4)), Cyc(Rational(1, 2)));
    // quadratic Gauss sum for p = 5
    Cyc g;
    for (int k = 0; k < 5; ++k) g += root_of_unity(5, k * k);
    EXPECT_EQ(g, sqrt_rational(5));
    EXPECT_EQ(g.conductor(), 5);
    // (1 + i) / sqrt2 = zeta8
    EXPECT_EQ((Cyc(1) + root_of_unity(4, 1)) / sqrt2(), root_of_unity(8, 1));
}

TEST(Cyc, FieldAxiomsAgainstFloatingPoint) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE(near((a * b).approx(), a.approx() * b.approx()));
        EXPECT_TRUE(near((a + b).approx(), a.approx() + b.approx()));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Cyc(1));
            EXPECT_TRUE(near((b / a).approx(), b.approx() / a.approx()));
        }
        EXPECT_TRUE(near(a.conj().approx(), std::conj(a.approx())));
    }
}

TEST(Cyc, DivisionByZero) { EXPECT_THROW(Cyc(1) / Cyc(0), division_by_zero); }

TEST(Cyc, DisplayRoundTrip) {
    EXPECT_EQ(root_of_unity(16, 5).str(), "z16^5");
    EXPECT_EQ(Cyc(Rational(-1, 2)).str(), "-1/2");
    EXPECT_EQ((sqrt2() / Cyc(2)).str(), "sqrt2/2");
    EXPECT_EQ(root_of_unity(4, 1).str(), "i");
    EXPECT_EQ(root_of_unity(8, 3).str(), "z8^3");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Cyc a = random_cyc(rng);
        EXPECT_EQ(parse_cyc(a.str()), a) << a.str();
    }
    EXPECT_ANY_THROW(parse_cyc("z16^"));
    EXPECT_ANY_THROW(parse_cyc("banana"));
}

TEST(Cyc, RootsOfUnity) {
    auto r = as_root_of_unity(-root_of_unity(16, 5));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->order, 16);
    EXPECT_EQ(r->exponent, 13);
    EXPECT_FALSE(as_root_of_unity(Cyc(2)));
    EXPECT_FALSE(as_root_of_unity(sqrt2() / Cyc(2)));
    EXPECT_EQ(principal_sqrt_root_of_unity(root_of_unity(4, 1)), root_of_unity(8, 1));
    EXPECT_EQ(principal_sqrt_root_of_unity(Cyc(-1)), root_of_unity(4, 1));
    EXPECT_EQ(pow(root_of_unity(16, 3), 16), Cyc(1));
    EXPECT_EQ(pow(Cyc(2), -2), Cyc(Rational(1, 4)));
}

TEST(Cyc, GaloisAndClassification) {
    EXPECT_EQ(sqrt2().galois(3), -sqrt2());
    EXPECT_EQ(root_of_unity(16, 1).galois(5), root_of_unity(16, 5));
    auto v = classify_value(sqrt2());
    EXPECT_TRUE(v.is_real);
    EXPECT_FALSE(v.is_rational);
    EXPECT_FALSE(v.root_order);
    auto m = classify_value(Cyc(-1));
    ASSERT_TRUE(m.root_order);
    EXPECT_EQ(*m.root_order, 2);
    auto q = as_quadratic_sqrt2(Cyc(3) + Cyc(2) * sqrt2());
    ASSERT_TRUE(q);
    EXPECT_EQ(q->first, 3);
    EXPECT_EQ(q->second, 2);
    EXPECT_FALSE(as_quadratic_sqrt2(root_of_unity(4, 1)));
}

TEST(Cyc, NumberTheoryHelpers) {
    EXPECT_EQ(euler_phi(16), 8);
    EXPECT_EQ(euler_phi(24), 8);
    EXPECT_EQ(prime_factors(360), (std::vector<long>{2, 3, 5}));
    EXPECT_THROW(root_of_unity(0), std::invalid_argument);
}
