#include <gtest/gtest.h>

#include "mirrorforge/cohft.hpp"

using namespace mirrorforge;

TEST(Graphs, Counts) {
    EXPECT_EQ(enumerate_stable_graphs(0, 3).size(), 1u);
    EXPECT_EQ(enumerate_stable_graphs(0, 4).size(), 4u);
    EXPECT_EQ(enumerate_stable_graphs(1, 1).size(), 2u);
    EXPECT_EQ(enumerate_stable_graphs(1, 2).size(), 5u);
    EXPECT_THROW(enumerate_stable_graphs(2, 1), unimplemented_range);
    EXPECT_THROW(enumerate_stable_graphs(0, 2), unimplemented_range);
}

TEST(Graphs, AutomorphismsAndStability) {
    for (auto& G : enumerate_stable_graphs(1, 1)) {
        if (G.vertices() == 1 && G.genus[0] == 0) EXPECT_EQ(G.aut, 2);
        if (G.genus[0] == 1) EXPECT_EQ(G.aut, 1);
    }
    for (auto& G : enumerate_stable_graphs(1, 2)) {
        int b1 = static_cast<int>(G.edges.size()) - G.vertices() + 1;
        int gs = 0;
        for (int x : G.genus) gs += x;
        EXPECT_EQ(gs + b1, 1);
        for (int v = 0; v < G.vertices(); ++v) EXPECT_GT(2 * G.genus[v] - 2 + G.valence(v), 0);
        // two genus-0 vertices joined by a double edge: swapping the edges
        if (G.vertices() == 2 && G.edges.size() == 2) EXPECT_EQ(G.aut, 2);
    }
    // Σ 1/|Aut| over (0,4): every graph is rigid
    for (auto& G : enumerate_stable_graphs(0, 4)) EXPECT_EQ(G.aut, 1);
}

TEST(Psi, Values) {
    EXPECT_EQ(psi_integral(1, {1}), Rational(1, 24));
    EXPECT_EQ(psi_integral(0, {1, 0, 0, 0}), Rational(1));
    EXPECT_EQ(psi_integral(0, {2, 0, 0, 0, 0}), Rational(1));
    EXPECT_EQ(psi_integral(0, {1, 1, 0, 0, 0}), Rational(2));
    EXPECT_EQ(psi_integral(0, {0, 0, 0}), Rational(1));
    EXPECT_EQ(psi_integral(0, {1, 0, 0}), Rational(0));
    EXPECT_EQ(psi_integral(1, {0, 2}), Rational(1, 24));
    EXPECT_EQ(psi_integral(1, {1, 1}), Rational(1, 24));
    EXPECT_EQ(psi_integral(1, {2, 0, 1}), Rational(1, 12));
    EXPECT_EQ(psi_integral(1, {0}), Rational(0));
}

TEST(Psi, GenusZeroStringOracle) {
    // string equation cross-check of the closed form for n = 6
    std::vector<std::vector<int>> cases{{3, 0, 0, 0, 0, 0}, {2, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}};
    for (auto a : cases) {
        Rational rhs(0);
        std::vector<int> rest(a.begin(), a.end() - 1);
        for (size_t j = 0; j < rest.size(); ++j)
            if (rest[j] > 0) {
                auto b = rest;
                --b[j];
                rhs += psi_integral(0, b);
            }
        EXPECT_EQ(psi_integral(0, a), rhs);
    }
}

namespace {

const CanonicalFrame& frame10() {
    static CanonicalFrame fr = build_frame(10);
    return fr;
}

}  // namespace

TEST(Engine, TqftValues) {
    const auto& fr = frame10();
    CohFTInput id = identity_cohft(fr);
    for (int a = 0; a < 5; ++a) {
        LVector e = idempotent_frame(id, a);
        LSeries v = rt_omega_integral(id, 0, {e, e, e}, {0, 0, 0});
        EXPECT_EQ(v, fr.delta[a].truncate(id.order).inverse());
        LSeries w = rt_omega_integral(id, 0, {e, idempotent_frame(id, (a + 1) % 5), e}, {0, 0, 0});
        EXPECT_TRUE(w.is_zero());
    }
    LSeries tq = rt_omega_integral(id, 1, {phi0_frame(id.sqrt_delta_inv)}, {1});
    EXPECT_EQ(tq, LSeries::constant(LambdaLaurent(Rational(5, 24)), id.order));
    // identity R: four-point integral without ψ has nothing of degree one
    LVector e0 = idempotent_frame(id, 0);
    EXPECT_TRUE(rt_omega_integral(id, 0, {e0, e0, e0, e0}, {0, 0, 0, 0}).is_zero());
    EXPECT_EQ(rt_omega_integral(id, 0, {e0, e0, e0, e0}, {1, 0, 0, 0}), fr.delta[0].truncate(id.order).inverse());
}

TEST(Engine, DimensionOneCorrelatorsWithR) {
    const auto& fr = frame10();
    RMatrixData rd = build_r1(fr);
    CohFTInput in = make_cohft_input(fr, rd);
    // ∫Ω_{0,3} is R-free
    LVector e1 = idempotent_frame(in, 1);
    EXPECT_EQ(rt_omega_integral(in, 0, {e1, e1, e1}, {0, 0, 0}), fr.delta[1].truncate(in.order).inverse());
    // graph-by-graph: (1,1) loop graph gives R_bb/2
    auto parts = rt_omega_graphs(in, 1, {idempotent_frame(in, 2)}, {0});
    ASSERT_EQ(parts.size(), 2u);
    for (auto& p : parts)
        if (p.graph.genus[0] == 0) EXPECT_EQ(p.value, rd.R1[2][2] * Rational(1, 2));
    EXPECT_THROW(rt_omega_integral(in, 1, {e1, e1}, {0, 0}), unimplemented_range);
}

TEST(Appendix, Suite) {
    Report r = verify_appendix(20);
    for (auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << (c.failure ? c.failure->lhs + " vs " + c.failure->rhs : "");
}

TEST(Appendix, SuitePerturbedC) {
    Report r = verify_appendix(10, perturbed_c());
    for (auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name;
}
