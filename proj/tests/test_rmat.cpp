#include <gtest/gtest.h>

#include "mirrorforge/rmat.hpp"

using namespace mirrorforge;

namespace {

const CanonicalFrame& frame14() {
    static CanonicalFrame fr = build_frame(14);
    return fr;
}

}  // namespace

TEST(R1, OffDiagonalBasics) {
    const auto& fr = frame14();
    EXPECT_THROW(r1_offdiag(fr, 2, 2), domain_error);
    EXPECT_THROW(r1_offdiag(fr, 1, 6), domain_error);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (a == b) continue;
            LSeries x = r1_offdiag(fr, a, b);
            EXPECT_TRUE(x[0].is_zero());
            EXPECT_EQ(x, r1_offdiag(fr, b, a));
        }
}

TEST(R1, OffDiagonalLeadingTerm) {
    // d log c_j at t⁴ recomputed from the Birkhoff entries cut at t⁵; λ-parts of c_j are constant.
    const auto& fr = frame14();
    RSeries i0 = fr.I0.truncate(5), i11 = fr.I11.truncate(5), l = fr.L.truncate(5);
    std::array<RSeries, 4> c{i0 / l, i0 * i11 / (l * l), i0 * i11 * fr.I22.truncate(5) / (l * l * l),
                             i0 * i11 * fr.I22.truncate(5) * fr.I33.truncate(5) / (l * l * l * l)};
    for (int g = 1; g < 5; ++g) {
        Cyc want;
        for (int j = 0; j < 4; ++j) want = want + zeta_half_power(g * (2 * j - 3)) * dlog(c[j])[4];
        EXPECT_EQ(dC(fr, g)[4], LambdaLaurent(want)) << g;
        for (int k = 0; k < 4; ++k) EXPECT_TRUE(dC(fr, g)[k].is_zero());
    }
}

TEST(R1, LambdaScaling) {
    const auto& fr = frame14();
    LSeries x = r1_offdiag(fr, 0, 2);
    LSeries y = x.map([](const LambdaLaurent& v) { return v.rescale_lambda(Rational(2)); });
    EXPECT_EQ(y * Rational(2), x);
}

TEST(R1, DiagonalDefaults) {
    const auto& fr = frame14();
    EXPECT_NO_THROW(check_c_constraint(default_c()));
    EXPECT_NO_THROW(check_c_constraint(perturbed_c()));
    CConstants bad{};
    bad[2] = LambdaLaurent::lambda_pow(-1);
    EXPECT_THROW(r1_diag(fr, 0, bad), invalid_normalization);
    LSeries r0 = r1_diag(fr, 0);
    EXPECT_TRUE(r0[0].is_zero());
    for (int a = 1; a < 5; ++a) EXPECT_EQ(r1_diag(fr, a).scaled(LambdaLaurent(xi(a))), r0);
}

TEST(R1, PotentialFirstCoefficient) {
    // P = (5/4)log L − 4 log I_0 − log I_{1,1} at t⁵: L₅ = 1/15625, (I_0)₅ = 1/375000, (I_{1,1})₅ = 13/187500
    RSeries p = r1_potential(frame14());
    Rational want = Rational(5, 4) * Rational(1, 15625) - Rational(4, 375000) - Rational(13, 187500);
    EXPECT_EQ(p[5], want);
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(p[k].is_zero());
}

TEST(R1, FlatnessSuite) {
    Report r = verify_flatness(25);
    for (auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << (c.failure ? c.failure->lhs + " vs " + c.failure->rhs : "");
}

TEST(R1, DiagonalSuite) {
    Report r = verify_diag_consistency(25);
    for (auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << (c.failure ? c.failure->lhs + " vs " + c.failure->rhs : "");
}
