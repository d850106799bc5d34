#include <gtest/gtest.h>

#include <random>

#include "mirrorforge/series.hpp"

using namespace mirrorforge;

namespace {

RSeries S(int n, std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RSeries(n, v);
}

RSeries random_series(std::mt19937& rng, int n, bool zero_const = false, bool unit_const = false) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    RSeries s(n);
    for (int k = 0; k <= n; ++k) s[k] = Rational(num(rng), den(rng));
    if (zero_const) s[0] = Rational(0);
    if (unit_const) s[0] = Rational(1);
    return s;
}

}  // namespace

TEST(Series, ArithmeticExamples) {
    EXPECT_EQ(S(3, {1, 1}) * S(3, {1, -1}), S(3, {1, 0, -1}));
    EXPECT_EQ(S(3, {1}) / S(3, {1, -1}), S(3, {1, 1, 1, 1}));
    EXPECT_EQ(S(1, {0, 1}) * S(1, {0, 1}), S(1, {0, 0}));
    EXPECT_THROW(S(3, {0, 1}).inverse(), not_a_unit);
}

TEST(Series, CalculusExamples) {
    RSeries lg = log(S(3, {1, 1}));
    EXPECT_EQ(lg[1], Rational(1));
    EXPECT_EQ(lg[2], Rational(-1, 2));
    EXPECT_EQ(lg[3], Rational(1, 3));
    RSeries r = nth_root(S(2, {1, 5}), 5);
    EXPECT_EQ(r, S(2, {1, 1, -2}));
    EXPECT_EQ(ipow(r, 5), S(2, {1, 5}));
    EXPECT_EQ(derivative(S(5, {0, 0, 0, 1})), S(4, {0, 0, 3}));
    EXPECT_THROW(log(S(3, {2, 1})), domain_error);
    EXPECT_THROW(exp(S(3, {1, 1})), domain_error);
}

TEST(Series, CoefficientAccess) {
    EXPECT_EQ(S(3, {1, 0, 3}).coefficient(2), Rational(3));
    EXPECT_EQ(S(3, {0, 1}).coefficient(0), Rational(0));
    EXPECT_EQ(RSeries(6).coefficient(5), Rational(0));
    EXPECT_THROW(S(3, {1}).coefficient(4), out_of_order);
}

TEST(Series, ComposeExamples) {
    RSeries geo = S(4, {1, 1, 1, 1, 1});
    RSeries t2 = S(4, {0, 0, 1});
    EXPECT_EQ(compose(geo, t2), S(4, {1, 0, 1, 0, 1}));
    RSeries inner = S(4, {0, 3, -1, 2});
    EXPECT_EQ(compose(RSeries::variable(4), inner), inner);
    RSeries l1 = log(S(4, {1, 1}));
    RSeries e1 = exp(RSeries::variable(4)) - RSeries::one(4);
    EXPECT_EQ(compose(l1, e1), RSeries::variable(4));
    EXPECT_THROW(compose(geo, S(4, {1, 1})), domain_error);
}

TEST(Series, ReversionExamples) {
    EXPECT_EQ(reversion(RSeries::variable(5)), RSeries::variable(5));
    EXPECT_EQ(reversion(S(3, {0, 1, 1})), S(3, {0, 1, -1, 2}));
    RSeries half(2);
    half[1] = Rational(1, 2);
    EXPECT_EQ(reversion(S(2, {0, 2})), half);
    EXPECT_THROW(reversion(S(3, {0, 0, 1})), domain_error);
}

TEST(Series, RoundTripsUpTo40) {
    std::mt19937 rng(99);
    for (int n : {1, 5, 12, 25, 40}) {
        RSeries a = random_series(rng, n, true);
        EXPECT_EQ(log(exp(a)), a);
        RSeries u = random_series(rng, n, false, true);
        EXPECT_EQ(exp(log(u)), u);
        for (long k : {2L, 5L}) EXPECT_EQ(ipow(nth_root(u, k), static_cast<unsigned long>(k)), u);
        RSeries c = random_series(rng, n, true);
        c[1] = Rational(3, 2);
        RSeries g = reversion(c);
        EXPECT_EQ(compose(c, g), RSeries::variable(n));
        EXPECT_EQ(compose(g, c), RSeries::variable(n));
        EXPECT_EQ(derivative(antiderivative(a)), a);
    }
}

TEST(Series, RingLawsAndTruncationCoherence) {
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        RSeries a = random_series(rng, 20), b = random_series(rng, 20), c = random_series(rng, 20);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        for (int m : {0, 3, 11}) {
            EXPECT_EQ((a * b).truncate(m), a.truncate(m) * b.truncate(m));
            RSeries u = random_series(rng, 20, false, true);
            EXPECT_EQ(log(u).truncate(m), log(u.truncate(m)));
            EXPECT_EQ((a / u).truncate(m), a.truncate(m) / u.truncate(m));
        }
    }
}

TEST(Series, MillerPowerCrossCheck) {
    // (1 + x)^e by the power recurrence n a0 b_n = Σ_{k=1}^n (e k − n + k) a_k b_{n−k}.
    std::mt19937 rng(5);
    RSeries a = random_series(rng, 15, false, true);
    Rational e(-3, 7);
    RSeries b(15);
    b[0] = Rational(1);
    for (int n = 1; n <= 15; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) acc += (e * Rational(k) - Rational(n - k)) * a[k] * b[n - k];
        b[n] = acc / Rational(n);
    }
    EXPECT_EQ(pow(a, e), b);
}

TEST(Series, OverQLambda) {
    using S2 = TruncatedSeries<QLambda>;
    S2 a(4);
    a[0] = QLambda(1);
    a[1] = QLambda::x();
    S2 inv = a.inverse();
    EXPECT_EQ((a * inv)[0], QLambda(1));
    EXPECT_TRUE((a * inv)[3].is_zero());
    EXPECT_EQ(inv[2], QLambda::x() * QLambda::x());
}
