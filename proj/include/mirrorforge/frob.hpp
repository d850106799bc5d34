#pragma once

#include <array>
#include <string>

#include "ifun.hpp"

namespace mirrorforge {

using LSeries = TruncatedSeries<LambdaLaurent>;
using LVector = std::array<LSeries, 5>;
using LMatrix = std::array<std::array<LSeries, 5>, 5>;
using PairingMatrix = std::array<std::array<LambdaLaurent, 5>, 5>;

inline LSeries lift_l(const RSeries& s) { return lift<LambdaLaurent>(s); }

inline LVector zero_vector(int n) {
    LVector v;
    for (auto& x : v) x = LSeries(n);
    return v;
}
inline LMatrix zero_matrix(int n) {
    LMatrix m;
    for (auto& row : m)
        for (auto& x : row) x = LSeries(n);
    return m;
}
inline LVector truncate(const LVector& v, int n) {
    LVector r;
    for (size_t i = 0; i < 5; ++i) r[i] = v[i].truncate(n);
    return r;
}

inline PairingMatrix build_pairing() {
    PairingMatrix eta;
    for (int i = 0; i <= 3; ++i) eta[static_cast<size_t>(i)][static_cast<size_t>(3 - i)] = LambdaLaurent(5);
    eta[4][4] = LambdaLaurent::monomial(10, Cyc(5));
    return eta;
}

inline LSeries pair(const PairingMatrix& eta, const LVector& x, const LVector& y) {
    int n = std::min(x[0].order(), y[0].order());
    LSeries acc(n);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            if (eta[i][j].is_zero() || x[i].is_zero() || y[j].is_zero()) continue;
            acc += (x[i].truncate(n) * y[j].truncate(n)).scaled(eta[i][j]);
        }
    return acc;
}

struct QuantumProductTable {
    int order = 0;
    RSeries f, g;
    // c[i][j] = coordinates of φ_i • φ_j in the φ-basis
    std::array<std::array<LVector, 5>, 5> c;

    // Multiplication operator of φ_i: column j holds φ_i • φ_j.
    LMatrix mult(int i) const {
        LMatrix m = zero_matrix(order);
        for (size_t j = 0; j < 5; ++j)
            for (size_t k = 0; k < 5; ++k) m[k][j] = c[static_cast<size_t>(i)][j][k];
        return m;
    }

    LVector product(const LVector& x, const LVector& y) const {
        int n = std::min(x[0].order(), y[0].order());
        LVector r = zero_vector(n);
        for (size_t i = 0; i < 5; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < 5; ++j) {
                if (y[j].is_zero()) continue;
                LSeries xy = x[i].truncate(n) * y[j].truncate(n);
                for (size_t k = 0; k < 5; ++k) {
                    const LSeries& s = c[i][j][k];
                    if (s.is_zero()) continue;
                    r[k] += xy * s.truncate(n);
                }
            }
        }
        return r;
    }
};

inline LVector basis_vector(int i, int n) {
    LVector v = zero_vector(n);
    v[static_cast<size_t>(i)] = LSeries::one(n);
    return v;
}

// The product table with f = I_{2,2}/I_{1,1}, g = I_{4,4}/I_{1,1}, built at order n.
inline QuantumProductTable build_product(const BirkhoffTable& b, int n) {
    QuantumProductTable q;
    q.order = n;
    RSeries i11 = b.rational(1, 1).truncate(n);
    q.f = b.rational(2, 2).truncate(n) / i11;
    q.g = b.rational(4, 4).truncate(n) / i11;
    LSeries f = lift_l(q.f), g = lift_l(q.g);
    LSeries finv = f.inverse();
    LSeries lam5 = LSeries::constant(LambdaLaurent::lambda_pow(5), n);
    auto set = [&](int i, int j, int k, const LSeries& v) {
        LVector e = zero_vector(n);
        e[static_cast<size_t>(k)] = v;
        q.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        q.c[static_cast<size_t>(j)][static_cast<size_t>(i)] = e;
    };
    LSeries one = LSeries::one(n);
    for (int j = 0; j < 5; ++j) set(0, j, j, one);
    set(1, 1, 2, f);
    set(1, 2, 3, one);
    set(1, 3, 4, g);
    set(1, 4, 0, lam5 * g);
    set(2, 2, 4, g * finv);
    set(2, 3, 0, lam5 * g * g * finv);
    set(2, 4, 1, lam5 * g * finv);
    set(3, 3, 1, lam5 * g * g * finv);
    set(3, 4, 2, lam5 * g);
    set(4, 4, 3, lam5);
    return q;
}

struct CanonicalFrame {
    int order = 0;
    QuantumProductTable product;
    PairingMatrix eta;
    RSeries L, I0, I11, I22, I33, I44, u;
    RSeries froot, groot;            // f^{1/5}, g^{1/5}
    std::array<LSeries, 5> normal;   // φ̃_i = normal[i]·φ_i
    std::array<LVector, 5> e;        // idempotents in φ-coordinates
    std::array<LSeries, 5> delta, sqrt_delta;
    std::array<LSeries, 6> c;        // c_{-1}, c_0, …, c_4 at index j+1
    LMatrix psi, psi_inv;            // Ψ from the frame, Ψ⁻¹ from the closed form

    const LSeries& cj(int j) const { return c[static_cast<size_t>(j + 1)]; }
};

inline LSeries lambda_monomial_series(int halfexp, int n, const Cyc& coef = Cyc(1)) {
    return LSeries::constant(LambdaLaurent::monomial(halfexp, coef), n);
}

// Square root of a series whose constant term is a monomial, in-group root for ξ.
inline LSeries sqrt_unit_series(const LSeries& s) {
    LambdaLaurent m = monomial_sqrt(s[0]);
    LSeries normed = s.scaled(s[0].inverse());
    return nth_root(normed, 2).scaled(m);
}

inline CanonicalFrame build_frame(const BirkhoffTable& b, int n) {
    CanonicalFrame fr;
    fr.order = n;
    fr.product = build_product(b, n);
    fr.eta = build_pairing();
    fr.L = l_series(n);
    fr.I0 = b.rational(0, 0).truncate(n);
    fr.I11 = b.rational(1, 1).truncate(n);
    fr.I22 = b.rational(2, 2).truncate(n);
    fr.I33 = b.rational(3, 3).truncate(n);
    fr.I44 = b.rational(4, 4).truncate(n);
    fr.u = antiderivative(fr.L.truncate(n - 1));
    fr.froot = nth_root(fr.product.f, 5);
    fr.groot = nth_root(fr.product.g, 5);
    RSeries F = fr.froot, G = fr.groot, Fi = F.inverse(), Gi = G.inverse();

    fr.normal[0] = LSeries::one(n);
    fr.normal[1] = lift_l(ipow(Gi, 2) * Fi).scaled(LambdaLaurent::lambda_pow(-1));
    fr.normal[2] = lift_l(ipow(Gi, 4) * ipow(F, 3)).scaled(LambdaLaurent::lambda_pow(-2));
    fr.normal[3] = lift_l(ipow(Gi, 6) * ipow(F, 2)).scaled(LambdaLaurent::lambda_pow(-3));
    fr.normal[4] = lift_l(ipow(Gi, 3) * F).scaled(LambdaLaurent::lambda_pow(-4));

    for (int a = 0; a < 5; ++a) {
        LVector v = zero_vector(n);
        for (int i = 0; i < 5; ++i)
            v[static_cast<size_t>(i)] = fr.normal[static_cast<size_t>(i)].scaled(LambdaLaurent(xi(-i * a) * Rational(1, 5)));
        fr.e[static_cast<size_t>(a)] = v;
        fr.delta[static_cast<size_t>(a)] = pair(fr.eta, v, v).inverse();
        fr.sqrt_delta[static_cast<size_t>(a)] = sqrt_unit_series(fr.delta[static_cast<size_t>(a)]);
    }

    RSeries Li = fr.L.inverse();
    fr.c[0] = lambda_monomial_series(5, n);
    fr.c[1] = lift_l(fr.I0 * Li).scaled(LambdaLaurent::monomial(3));
    fr.c[2] = lift_l(fr.I0 * fr.I11 * ipow(Li, 2)).scaled(LambdaLaurent::monomial(1));
    fr.c[3] = lift_l(fr.I0 * fr.I11 * fr.I22 * ipow(Li, 3)).scaled(LambdaLaurent::monomial(-1));
    fr.c[4] = lift_l(fr.I0 * fr.I11 * fr.I22 * fr.I33 * ipow(Li, 4)).scaled(LambdaLaurent::monomial(-3));
    fr.c[5] = lambda_monomial_series(-5, n);

    fr.psi = zero_matrix(n);
    fr.psi_inv = zero_matrix(n);
    for (int a = 0; a < 5; ++a)
        for (int j = 0; j < 5; ++j) {
            LSeries acc(n);
            for (int i = 0; i < 5; ++i) {
                const LambdaLaurent& h = fr.eta[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (h.is_zero()) continue;
                acc += fr.e[static_cast<size_t>(a)][static_cast<size_t>(i)].scaled(h);
            }
            fr.psi[static_cast<size_t>(a)][static_cast<size_t>(j)] = acc * fr.sqrt_delta[static_cast<size_t>(a)];
            fr.psi_inv[static_cast<size_t>(j)][static_cast<size_t>(a)] =
                fr.cj(j).scaled(LambdaLaurent(zeta_half_power(static_cast<long>(a) * (3 - 2 * j)) * Rational(1, 5)));
        }
    return fr;
}

// Frame at order n from the twisted I-function; the table is built four orders higher.
inline CanonicalFrame build_frame(int n) { return build_frame(ipq_table(4, 4, n + 4), n); }

// Ψ_{αj} by the closed form ξ^{α(j−3/2)} c_{3−j}.
inline LSeries psi_closed(const CanonicalFrame& fr, int a, int j) {
    return fr.cj(3 - j).scaled(LambdaLaurent(zeta_half_power(static_cast<long>(a) * (2 * j - 3))));
}

// dC^γ as the dt-coefficient: Σ_j ξ^{γ(j−3/2)} d log c_j.
inline LSeries dC(const CanonicalFrame& fr, int gamma) {
    LSeries acc(fr.order - 1);
    for (int j = 0; j <= 4; ++j) {
        LSeries dl = dlog(fr.cj(j));
        if (j == 4 && !dl.is_zero()) throw domain_error("d log c_4 must vanish");
        acc += dl.scaled(LambdaLaurent(zeta_half_power(static_cast<long>(gamma) * (2 * j - 3))));
    }
    return acc;
}

inline LMatrix mat_mul(const LMatrix& a, const LMatrix& b) {
    int n = std::min(a[0][0].order(), b[0][0].order());
    LMatrix r = zero_matrix(n);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            for (size_t k = 0; k < 5; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                r[i][j] += a[i][k].truncate(n) * b[k][j].truncate(n);
            }
    return r;
}

// ---- verification ----

inline Report verify_frobenius(int n) {
    return timed_suite("frobenius", [&](Report& rep) {
        CanonicalFrame fr = build_frame(n);
        const auto& qp = fr.product;
        rep.add("f(0) = g(0) = 1", qp.f[0].is_one() && qp.g[0].is_one());
        rep.add(compare_series("g = I00/I11", qp.g, fr.I0 / fr.I11, n));

        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j) {
                for (size_t k = 0; k < 5; ++k)
                    if (!(qp.c[i][j][k] == qp.c[j][i][k])) {
                        rep.add("commutativity", false, std::to_string(i), std::to_string(j));
                        ok = false;
                    }
                for (int k = 0; k < 5 && ok; ++k) {
                    LVector lhs = qp.product(qp.c[i][j], basis_vector(k, n));
                    LVector rhs = qp.product(basis_vector(i, n), qp.c[j][k]);
                    for (size_t m = 0; m < 5 && ok; ++m) {
                        auto cr = compare_series("associativity (" + std::to_string(i) + std::to_string(j) + std::to_string(k) + ")",
                                                 lhs[m], rhs[m], n);
                        if (!cr.pass) {
                            rep.add(cr);
                            ok = false;
                        }
                    }
                }
            }
        if (ok) rep.add("commutativity and associativity (125 triples)", true);

        // φ̃_i • φ̃_j = φ̃_{i+j mod 5}
        ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j) {
                LVector x = zero_vector(n), y = zero_vector(n);
                x[i] = fr.normal[i];
                y[j] = fr.normal[j];
                LVector p = qp.product(x, y);
                LVector want = zero_vector(n);
                want[(i + j) % 5] = fr.normal[(i + j) % 5];
                for (size_t m = 0; m < 5 && ok; ++m) {
                    auto cr = compare_series("normalized basis", p[m], want[m], n);
                    if (!cr.pass) {
                        rep.add(cr);
                        ok = false;
                    }
                }
            }
        if (ok) rep.add("normalized basis multiplies cyclically", true);

        ok = true;
        LVector sum = zero_vector(n);
        for (int a = 0; a < 5 && ok; ++a) {
            for (size_t m = 0; m < 5; ++m) sum[m] += fr.e[a][m];
            for (int b2 = 0; b2 < 5 && ok; ++b2) {
                LVector p = qp.product(fr.e[a], fr.e[b2]);
                for (size_t m = 0; m < 5 && ok; ++m) {
                    LSeries want = a == b2 ? fr.e[a][m] : LSeries(n);
                    auto cr = compare_series("e_a e_b = delta e_a", p[m], want, n);
                    if (!cr.pass) {
                        rep.add(cr);
                        ok = false;
                    }
                }
                LSeries ip = pair(fr.eta, fr.e[a], fr.e[b2]);
                LSeries want = a == b2 ? fr.delta[a].inverse() : LSeries(n);
                auto cr = compare_series("eta(e_a, e_b)", ip, want, n);
                if (!cr.pass) {
                    rep.add(cr);
                    ok = false;
                }
            }
        }
        if (ok) rep.add("idempotency and orthogonality", true);
        ok = true;
        for (size_t m = 0; m < 5 && ok; ++m) {
            auto cr = compare_series("sum e_a = phi_0", sum[m], basis_vector(0, n)[m], n);
            if (!cr.pass) {
                rep.add(cr);
                ok = false;
            }
        }
        if (ok) rep.add("sum e_a = phi_0", true);

        // Δ_α = (ξ^α λ)³ I_0²/L² and semisimplicity witness
        ok = true;
        RSeries dl = ipow(fr.I0, 2) / ipow(fr.L, 2);
        for (int a = 0; a < 5 && ok; ++a) {
            LSeries want = lift_l(dl).scaled(LambdaLaurent::monomial(6, xi(3 * a)));
            auto cr = compare_series("Delta closed form", fr.delta[a], want, n);
            if (!cr.pass) {
                rep.add(cr);
                ok = false;
            }
            for (int b2 = 0; b2 < a; ++b2)
                if (fr.delta[a][0] == fr.delta[b2][0]) {
                    rep.add("Delta distinct", false);
                    ok = false;
                }
        }
        if (ok) rep.add("Delta closed form, invertible and distinct", true);

        // Σ_α e_α ξ^α λ L = φ_1 I_{1,1}
        ok = true;
        LVector acc = zero_vector(n);
        for (int a = 0; a < 5; ++a)
            for (size_t m = 0; m < 5; ++m) acc[m] += (fr.e[a][m] * lift_l(fr.L)).scaled(LambdaLaurent::monomial(2, xi(a)));
        for (size_t m = 0; m < 5 && ok; ++m) {
            LSeries want = m == 1 ? lift_l(fr.I11) : LSeries(n);
            auto cr = compare_series("du^a recovers phi_1 dtau", acc[m], want, n);
            if (!cr.pass) {
                rep.add(cr);
                ok = false;
            }
        }
        if (ok) rep.add("du^a = xi^a lambda du recovers phi_1 dtau", true);

        // c_j c_{3−j} = 1, c_{−1} c_4 = 1; Ψ closed form; Ψ Ψ⁻¹ = 1; orthonormality
        ok = true;
        for (int j = -1; j <= 4 && ok; ++j) {
            auto cr = compare_series("c_j c_{3-j} = 1", fr.cj(j) * fr.cj(3 - j), LSeries::one(n), n);
            if (!cr.pass) {
                rep.add(cr);
                ok = false;
            }
        }
        if (ok) rep.add("c_j c_{3-j} = 1", true);
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int j = 0; j < 5 && ok; ++j) {
                auto cr = compare_series("Psi closed form", fr.psi[a][j], psi_closed(fr, a, j), n);
                if (!cr.pass) {
                    rep.add(cr);
                    ok = false;
                }
            }
        if (ok) rep.add("Psi matches closed form", true);
        LMatrix id = mat_mul(fr.psi, fr.psi_inv);
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b2 = 0; b2 < 5 && ok; ++b2) {
                auto cr = compare_series("Psi Psi^-1", id[a][b2], a == b2 ? LSeries::one(n) : LSeries(n), n);
                if (!cr.pass) {
                    rep.add(cr);
                    ok = false;
                }
            }
        if (ok) rep.add("Psi Psi^-1 = 1", true);
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b2 = 0; b2 < 5 && ok; ++b2) {
                LVector ta = fr.e[a], tb = fr.e[b2];
                for (size_t m = 0; m < 5; ++m) {
                    ta[m] = ta[m] * fr.sqrt_delta[a];
                    tb[m] = tb[m] * fr.sqrt_delta[b2];
                }
                auto cr = compare_series("eta(te_a, te_b)", pair(fr.eta, ta, tb), a == b2 ? LSeries::one(n) : LSeries(n), n);
                if (!cr.pass) {
                    rep.add(cr);
                    ok = false;
                }
            }
        if (ok) rep.add("normalized idempotents orthonormal", true);

        // dC periodicity and antisymmetry
        ok = true;
        for (int gm = 0; gm < 5 && ok; ++gm) {
            LSeries a1 = dC(fr, gm), a2 = dC(fr, gm + 5), a3 = dC(fr, -gm);
            auto c1 = compare_series("dC^{g+5} = dC^g", a1, a2, n - 1);
            auto c2 = compare_series("dC^{-g} = -dC^g", a3, -a1, n - 1);
            if (!c1.pass || !c2.pass) {
                rep.add(c1.pass ? c2 : c1);
                ok = false;
            }
        }
        if (ok) rep.add("dC periodic and odd", true);
        rep.add(expect_zero_series("dC^0 = 0", dC(fr, 0), n - 1));
    });
}

}  // namespace mirrorforge
