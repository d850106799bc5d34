#include <gtest/gtest.h>

#include "mirrorforge/ifun.hpp"

using namespace mirrorforge;

namespace {

// Independent oracle: t^{5d+k} coefficient ((k+1)/5 ⋯ ((k−4)/5+d))⁵/(k+5d)!, straight from the product.
Rational closed_form(int k, int d) {
    Rational p(1);
    for (int i = 0; i < d; ++i) p *= Rational(k + 1, 5) + Rational(i);
    return p.pow(5) / Rational::factorial(k + 5 * d);
}

}  // namespace

TEST(IFunction, FrozenCoefficients) {
    auto tab = build_ifunction(10, 12);
    EXPECT_EQ(tab[0][5], QLambda(Rational(1, 375000)));
    EXPECT_EQ(tab[1][6], QLambda(Rational(2, 140625)));
    EXPECT_TRUE(tab[0][1].is_zero());
    EXPECT_EQ(tab[0][0], QLambda(1));
}

TEST(IFunction, ClosedFormForLowComponents) {
    auto tab = build_ifunction(4, 40);
    for (int k = 0; k <= 4; ++k)
        for (int d = 0; k + 5 * d <= 40; ++d) EXPECT_EQ(tab[k][k + 5 * d], QLambda(closed_form(k, d))) << k << " " << d;
}

TEST(IFunction, HigherComponentsCarryLambda) {
    auto tab = build_ifunction(10, 20);
    // I_5 = Λ Σ_d t^{5d}/(5d)! e_{d−1}(k⁵): its t⁵ coefficient is Λ/5!.
    EXPECT_EQ(tab[5][5], QLambda::monomial(Rational(1, 120), 1));
    auto fj = build_ifunction(10, 20, Theory::fjrw);
    EXPECT_TRUE(fj[5].is_zero());
    EXPECT_EQ(fj[0], tab[0]);
}

TEST(IFunction, MirrorMapAndL) {
    RSeries tau = mirror_map(12);
    EXPECT_EQ(tau[1], Rational(1));
    EXPECT_EQ(tau[6], Rational(13, 1125000));
    EXPECT_EQ(tau[2], Rational(0));
    // order-6 division oracle
    RSeries i0 = i_component(0, 6), i1 = i_component(1, 6);
    EXPECT_EQ(tau.truncate(6), i1 * i0.inverse());
    RSeries l = l_series(20);
    EXPECT_EQ(l[0], Rational(1));
    EXPECT_EQ(l[5], Rational(1, 15625));
    EXPECT_EQ(l[3], Rational(0));
    RSeries base = RSeries::one(20) - RSeries::monomial(Rational(1, 3125), 5, 20);
    EXPECT_EQ(l, pow(base, Rational(-1, 5)));
}

TEST(Birkhoff, TableBasics) {
    auto b = ipq_table(5, 10, 20);
    auto tab = build_ifunction(10, 20);
    EXPECT_EQ(b(0, 0), tab[0]);
    EXPECT_EQ(b(0, 7), tab[7]);
    EXPECT_EQ(b.rational(1, 1)[5], Rational(13, 187500));
    for (int p = 0; p <= 4; ++p) EXPECT_EQ(b(p, p)[0], QLambda(1));
    EXPECT_EQ(b(5, 5)[0], QLambda::monomial(Rational(1), 1));
    // I_{1,1} = dτ/dt
    EXPECT_EQ(b.rational(1, 1), derivative(mirror_map(20)));
}

TEST(Birkhoff, MOperatorExamples) {
    auto tab = build_ifunction(10, 15);
    ZGraded f = i_over_z(tab);
    EXPECT_EQ(f.at(1), tab[1]);
    ZGraded m1 = birkhoff_M(f);
    EXPECT_EQ(at_lambda_zero(m1.at(1)), derivative(mirror_map(15)));
    ZGraded m2 = birkhoff_M(m1);
    auto b = ipq_table(tab, 2, 10);
    EXPECT_EQ(m2.at(2), b(2, 2));
    ZGraded bad;
    bad.comp.push_back(QSeries(5));
    EXPECT_THROW(birkhoff_M(bad), domain_error);
}

TEST(Birkhoff, SOperator) {
    auto b = ipq_table(build_ifunction(10, 15), 5, 10);
    auto s0 = s_operator(b, 0);
    EXPECT_EQ(s0[0], QSeries::one(15));
    auto s1 = s_operator(b, 1);
    EXPECT_EQ(s1[1], b(1, 2) * b(1, 1).inverse());
    auto s5 = s_operator(b, 5);
    EXPECT_EQ(s5[0], QSeries::one(10));
}

TEST(Suites, PicardFuchs) {
    for (int amax : {0, 20, 40}) EXPECT_TRUE(picard_fuchs_check(amax).pass()) << picard_fuchs_check(amax).to_json().dump();
}

TEST(Suites, Ipp) {
    auto r = verify_ipp(30);
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
}

TEST(Suites, ZagierZinger) {
    auto r = verify_zz_identity(30);
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
}

TEST(Suites, ClubSpade) {
    auto r = verify_club_spade(12);
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
}

TEST(Suites, Yukawa) {
    auto y = yukawa(30);
    EXPECT_TRUE(y.report.pass()) << y.report.to_json().dump(2);
    EXPECT_EQ(y.y[0], Rational(1));
}

TEST(Suites, SUnitarity) {
    auto r = verify_s_unitarity(15);
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
}
