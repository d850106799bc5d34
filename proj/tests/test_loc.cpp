#include <gtest/gtest.h>

#include "mirrorforge/loc.hpp"

using namespace mirrorforge;

namespace {

QLambda L(long a, long b) { return QLambda(std::vector<Rational>{Rational(a), Rational(b)}); }

// Hand-expanded terms used as oracles.
// heart a = 1: 1/(2z/5 − 1); diamond b = 1: −(1/5)(1 + Λ)/Π_{k=0}^{4}(kz + 5)
QLambda heart1_at(const Rational& z) { return QLambda((Rational(2, 5) * z - 1).inverse()); }
QLambda diamond1_at(const Rational& z) {
    Rational den(1);
    for (int k = 0; k < 5; ++k) den *= Rational(k) * z + 5;
    return L(1, 1) * (Rational(-1, 5) / den);
}

}  // namespace

TEST(ZRational, LinearFactorsAndResidue) {
    ZRational r;
    r.div_linear(Rational(2), Rational(-1));  // 1/(2z − 1)
    EXPECT_EQ(r.residue(Rational(1, 2)), QLambda(Rational(1, 2)));
    EXPECT_TRUE(r.residue(Rational(3)).is_zero());
    EXPECT_EQ(r.eval(Rational(1)), QLambda(1));
    EXPECT_THROW(r.eval(Rational(1, 2)), domain_error);
    r.mul_linear(Rational(2), Rational(-1));
    EXPECT_TRUE(r.poles().empty());
    EXPECT_EQ(r.eval(Rational(7)), QLambda(1));
}

TEST(ZRational, CancelsCommonRoots) {
    ZRational r;
    r.div_linear(Rational(1), Rational(-2));  // 1/(z − 2)
    r.mul_poly(ZPoly(std::vector<QLambda>{QLambda(-4), QLambda(0), QLambda(1)}));  // z² − 4
    EXPECT_TRUE(r.poles().empty());
    EXPECT_EQ(r.eval(Rational(5)), QLambda(7));
}

TEST(ZRational, DoublePoleResidueThrows) {
    ZRational r;
    r.div_linear(Rational(1), Rational(-1));
    r.div_linear(Rational(1), Rational(-1));
    EXPECT_THROW(r.residue(Rational(1)), domain_error);
}

TEST(ZRational, LaurentMatchesGeometricSeries) {
    ZRational r;
    r.mul_zpow(-2);                              // z^{−2}
    r.div_linear(Rational(1), Rational(-1));     // /(z − 1)
    auto c = r.laurent(2);
    for (int e = -2; e <= 2; ++e) EXPECT_EQ(c[e], QLambda(-1)) << e;
    EXPECT_FALSE(c.count(-3));
}

TEST(Loc, HeartAndDiamondLowTerms) {
    for (auto z : {Rational(1), Rational(-3, 7), Rational(11, 2)}) {
        EXPECT_EQ(heart_term(1, Theory::twisted).eval(z), heart1_at(z));
        EXPECT_EQ(diamond_term(1, Theory::twisted).eval(z), diamond1_at(z));
    }
    EXPECT_EQ(heart_term(0, Theory::twisted).eval(Rational(2)), QLambda(Rational(2) / (Rational(2, 5) - 1)));
    EXPECT_EQ(diamond_term(0, Theory::twisted).eval(Rational(3)), QLambda(Rational(-3, 5)));
    // A = 1: the k = 0 factor is Λ
    EXPECT_TRUE(heart_term(4, Theory::fjrw).is_zero());
    EXPECT_FALSE(heart_term(4, Theory::twisted).is_zero());
}

TEST(Loc, RecursionCoefficientValues) {
    EXPECT_EQ(recursion_coeff(Rational(1, 5), Theory::twisted), QLambda(Rational(1, 5)));
    EXPECT_EQ(recursion_coeff(Rational(2, 5), Theory::twisted), QLambda(Rational(1, 25)));
    EXPECT_EQ(recursion_coeff(Rational(1), Theory::twisted), QLambda(Rational(-1, 600)));
    EXPECT_EQ(recursion_coeff(Rational(1), Theory::fjrw), QLambda(Rational(-1, 600)));
    EXPECT_THROW(recursion_coeff(Rational(1, 3), Theory::twisted), invalid_argument);
}

TEST(Loc, FirstHeartResidueByHand) {
    // Res_{z=5/2} 1/(2z/5 − 1) = 5/2 and diamond_0 = −z/5 there
    QLambda lhs = heart_term(1, Theory::twisted).residue(Rational(5, 2));
    EXPECT_EQ(lhs, QLambda(Rational(5, 2)));
    QLambda rhs = heart_pairing_inverse(2, Theory::twisted) * recursion_coeff(Rational(2, 5), Theory::twisted) *
                  diamond_term(0, Theory::twisted).eval(Rational(5, 2));
    EXPECT_EQ(rhs, QLambda(Rational(-1, 250)));
    EXPECT_EQ(rhs * Rational(-625), lhs);
}

TEST(Loc, ResidueConstants) {
    auto tw = residue_check(3, Theory::twisted);
    EXPECT_TRUE(tw.report.pass());
    EXPECT_EQ(tw.heart_fit.str(), QLambda(-625).str());
    EXPECT_EQ(tw.diamond_fit.str(), L(1, 1).str());
    auto fj = residue_check(3, Theory::fjrw);
    EXPECT_TRUE(fj.report.pass());
    EXPECT_EQ(fj.heart_fit.str(), QLambda(-625).str());
    EXPECT_EQ(fj.diamond_fit.str(), QLambda(1).str());
}

TEST(Loc, AlphaHomogeneity) {
    // Rescaling α → 2α multiplies the diamond constant α⁵ + Λ accordingly; the heart constant is fixed.
    auto r = residue_check(1, Theory::twisted, Rational(2));
    EXPECT_TRUE(r.report.pass());
    EXPECT_EQ(r.heart_fit.str(), QLambda(-625).str());
    EXPECT_EQ(r.diamond_fit.str(), L(32, 1).str());
}

TEST(Loc, EdgeContributions) {
    for (long fd = 1; fd <= 10; ++fd) {
        Rational d(fd, 5);
        EXPECT_EQ(edge_contribution(1, d, Theory::twisted).value, recursion_coeff(d, Theory::twisted) * Rational(25)) << fd;
        EXPECT_EQ(edge_contribution(2, d, Theory::twisted).q_power, d);
    }
    EXPECT_EQ(edge_contribution(2, Rational(1), Theory::twisted).value, QLambda(Rational(-5, 24)));
    EXPECT_EQ(edge_contribution(3, Rational(1), Theory::twisted).value, QLambda(Rational(-32, 1875)));
    EXPECT_THROW(edge_contribution(3, Rational(2, 5), Theory::twisted), invalid_argument);
    EXPECT_THROW(edge_contribution(4, Rational(1), Theory::twisted), invalid_argument);
}

TEST(Loc, OmegaUnit) {
    EXPECT_EQ((OmegaMonomial{Rational(3), -5}).to_rational(), Rational(-3));
    EXPECT_EQ((OmegaMonomial{Rational(3), 10}).to_rational(), Rational(3));
    EXPECT_THROW((OmegaMonomial{Rational(1), 2}).to_rational(), domain_error);
}

TEST(Loc, Tails) {
    TailData t = tail_series(16);
    EXPECT_EQ(t.phi1[2], Rational(-1));
    // 1 − I_0(t) at t⁵ with t⁵ = −q⁵: +1/375000 on q⁶ after the −α, Q^{−1/5} factors
    EXPECT_EQ(t.phi0_z[6], Rational(-1, 375000));
    Report r = tail_extraction(21);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.details["phi0_sign_relative_to_display"], "-1");
}
