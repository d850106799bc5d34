#pragma once

#include <array>

#include "frob.hpp"

namespace mirrorforge {

using CConstants = std::array<LambdaLaurent, 5>;

struct RMatrixData {
    LMatrix R1;  // entries of order frame.order − 1, each ∝ λ⁻¹
    CConstants C;
};

inline CConstants default_c() { return CConstants{}; }

// (c, −cξ⁻¹, 0, 0, 0)·λ⁻¹
inline CConstants perturbed_c(const Rational& c = Rational(1)) {
    CConstants C{};
    C[0] = LambdaLaurent::monomial(-2, Cyc(c));
    C[1] = LambdaLaurent::monomial(-2, xi(-1) * (-c));
    return C;
}

inline void check_c_constraint(const CConstants& C) {
    LambdaLaurent s;
    for (int a = 0; a < 5; ++a) s += C[static_cast<size_t>(a)] * LambdaLaurent(xi(a));
    if (!s.is_zero()) throw invalid_normalization("sum xi^a C_a = " + s.str() + ", must vanish");
}

// dC^{α−β}/(5(ξ^α − ξ^β) λ du), as a series in t.
inline LSeries r1_offdiag(const CanonicalFrame& fr, int a, int b) {
    if (((a - b) % 5 + 5) % 5 == 0) throw domain_error("r1_offdiag needs alpha != beta");
    Cyc k = (xi(a) - xi(b)).inverse() * Rational(1, 5);
    LSeries d = dC(fr, a - b);
    return (d / lift_l(fr.L.truncate(d.order()))).scaled(LambdaLaurent::monomial(-2, k));
}

// P = (5/4) log L − 4 log I_0 − log I_{1,1}
inline RSeries r1_potential(const CanonicalFrame& fr) {
    return log(fr.L) * Rational(5, 4) - log(fr.I0) * Rational(4) - log(fr.I11);
}

inline LSeries r1_diag(const CanonicalFrame& fr, int a, const CConstants& C = default_c()) {
    check_c_constraint(C);
    RSeries dP = derivative(r1_potential(fr));
    RSeries dPdu = dP / fr.L.truncate(dP.order());
    LSeries r = lift_l(dPdu).scaled(LambdaLaurent::monomial(-2, xi(-a) * Rational(1, 5)));
    r += LSeries::constant(C[static_cast<size_t>(((a % 5) + 5) % 5)], r.order());
    return r;
}

inline RMatrixData build_r1(const CanonicalFrame& fr, const CConstants& C = default_c()) {
    RMatrixData d;
    d.C = C;
    d.R1 = zero_matrix(fr.order - 1);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            d.R1[static_cast<size_t>(a)][static_cast<size_t>(b)] = a == b ? r1_diag(fr, a, C) : r1_offdiag(fr, a, b);
    return d;
}

inline LMatrix mat_derivative(const LMatrix& m) {
    LMatrix r;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) r[i][j] = derivative(m[i][j]);
    return r;
}

// du^α as a dt-coefficient: ξ^α λ L.
inline LSeries du_alpha(const CanonicalFrame& fr, int a, int n) {
    return lift_l(fr.L.truncate(n)).scaled(LambdaLaurent::monomial(2, xi(a)));
}

// Working order for the R-matrix suites.
inline int rmat_frame_order(int n) { return n + 2; }

inline Report verify_flatness(int n) {
    return timed_suite("rmatrix-flatness", [&](Report& rep) {
        CanonicalFrame fr = build_frame(rmat_frame_order(n));
        RMatrixData rd = build_r1(fr);
        LMatrix lhs = mat_mul(fr.psi, mat_derivative(fr.psi_inv));
        bool ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = 0; b < 5 && ok; ++b) {
                LSeries want = dC(fr, a - b) * Rational(1, 5);
                auto c = compare_series("(Psi dPsi^-1)_ab = dC^(a-b)/5", lhs[a][b], want, n);
                if (!c.pass) {
                    rep.add(c);
                    ok = false;
                }
            }
        if (ok) rep.add("(Psi dPsi^-1)_ab = dC^(a-b)/5", true);
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = 0; b < 5 && ok; ++b) {
                if (a == b) continue;
                int m = rd.R1[a][b].order();
                LSeries x = (du_alpha(fr, a, m) - du_alpha(fr, b, m)) * rd.R1[a][b];
                auto c = compare_series("(du^a - du^b) R_ab = (Psi dPsi^-1)_ab", x, lhs[a][b].truncate(m), n);
                if (!c.pass) {
                    rep.add(c);
                    ok = false;
                }
            }
        if (ok) rep.add("(du^a - du^b) R_ab reproduces Psi dPsi^-1", true);
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = 0; b < 5 && ok; ++b) {
                auto c = compare_series("R1 symmetric", rd.R1[a][b], rd.R1[b][a], n);
                if (!c.pass) {
                    rep.add(c);
                    ok = false;
                }
            }
        if (ok) rep.add("R1 symmetric", true);
    });
}

inline Report verify_diag_consistency(int n) {
    return timed_suite("rmatrix-diagonal", [&](Report& rep) {
        CanonicalFrame fr = build_frame(rmat_frame_order(n));
        RMatrixData rd = build_r1(fr);
        int m = fr.order - 1;
        LSeries l = lift_l(fr.L.truncate(m));
        LSeries c2 = dlog(fr.cj(2)) / l, c3 = dlog(fr.cj(3)) / l;
        bool ok = true;
        for (int a = 0; a < 5 && ok; ++a) {
            LSeries via_off(m);
            for (int b = 0; b < 5; ++b) {
                if (b == a) continue;
                via_off += (du_alpha(fr, b, m) - du_alpha(fr, a, m)) * rd.R1[a][b] * rd.R1[b][a];
            }
            LSeries via_closed = derivative(rd.R1[a][a]);
            LSeries via_c = ((c2 * c2 + c3 * c3) * l).scaled(LambdaLaurent::monomial(-2, xi(-a) * Rational(1, 5)));
            auto c1 = compare_series("dR_aa: off-diagonal sum = d(closed form)", via_off, via_closed, n);
            auto c2c = compare_series("dR_aa: d log c_2, d log c_3 reduction", via_off, via_c, n);
            if (!c1.pass || !c2c.pass) {
                rep.add(c1.pass ? c2c : c1);
                ok = false;
            }
        }
        if (ok) rep.add("(dR1)_aa three ways", true);

        // every entry is λ⁻¹ times a Q(ξ)-series
        ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = 0; b < 5 && ok; ++b)
                for (int k = 0; k <= rd.R1[a][b].order() && ok; ++k)
                    for (auto& [h, cf] : rd.R1[a][b][k].terms())
                        if (h != -2) {
                            rep.add("lambda exponent -1", false, std::to_string(h) + "/2", "-1", k);
                            ok = false;
                            break;
                        }
        if (ok) rep.add("lambda exponent -1 throughout", true);

        // Σ_α ξ^α λ R_αα is ξ- and λ-free
        LSeries tr(m);
        for (int a = 0; a < 5; ++a) tr += rd.R1[a][a].scaled(LambdaLaurent::monomial(2, xi(a)));
        try {
            for (int k = 0; k <= n; ++k) (void)rationality_project(tr[k]);
            rep.add("sum xi^a lambda R_aa rational", true);
        } catch (const cancellation_failure& e) {
            rep.add("sum xi^a lambda R_aa rational", false, e.what(), "rational");
        }

        // perturbing C leaves Σ_α R_αα du^α unchanged
        RMatrixData rp = build_r1(fr, perturbed_c());
        LSeries s0(m), s1(m);
        for (int a = 0; a < 5; ++a) {
            s0 += rd.R1[a][a] * du_alpha(fr, a, m);
            s1 += rp.R1[a][a] * du_alpha(fr, a, m);
        }
        rep.add(compare_series("sum R_aa du^a independent of C", s0, s1, n));
    });
}

}  // namespace mirrorforge
