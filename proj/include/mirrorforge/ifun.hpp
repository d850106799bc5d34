#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "series.hpp"

namespace mirrorforge {

enum class Theory { twisted, fjrw };

inline std::string theory_name(Theory t) { return t == Theory::twisted ? "twisted" : "fjrw"; }

using QSeries = TruncatedSeries<QLambda>;

inline RSeries at_lambda_zero(const QSeries& s) {
    return s.map([](const QLambda& p) { return p.coeff(0); });
}
inline QSeries to_qlambda(const RSeries& s) {
    return s.map([](const Rational& x) { return QLambda(x); });
}

// Q_a(u) = Π (u + k⁵) over 0 < k < (a+1)/5 with k ≡ (a+1)/5 mod 1; the φ_a coefficient of I^λ
// is t^a z^{1−a}/a! · z^{5·deg} Q_a(Λ/z⁵).
inline QLambda phi_polynomial(long a) {
    Rational start(a % 5 + 1, 5);
    long nfac = a / 5;
    QLambda q(1);
    for (long i = 0; i < nfac; ++i) {
        Rational k = start + Rational(i);
        q *= QLambda(std::vector<Rational>{k.pow(5), Rational(1)});
    }
    return q;
}

struct IFunctionTable {
    int kmax = 10;
    int order = 0;
    Theory theory = Theory::twisted;
    std::vector<QSeries> I;  // I_k(t), k = 0..kmax, coefficients in Q[Λ]

    const QSeries& operator[](int k) const { return I.at(static_cast<size_t>(k)); }
};

// I_{5m+r}(t) = Λ^m Σ_{d≥m} t^{5d+r}/(5d+r)! · [u^m] Q_{5d+r}(u).
inline IFunctionTable build_ifunction(int kmax, int n, Theory theory = Theory::twisted) {
    IFunctionTable tab;
    tab.kmax = kmax;
    tab.order = n;
    tab.theory = theory;
    for (int k = 0; k <= kmax; ++k) {
        QSeries s(n);
        int m = k / 5, r = k % 5;
        if (theory == Theory::fjrw && m > 0) {
            tab.I.push_back(s);
            continue;
        }
        for (long a = r + 5L * m; a <= n; a += 5) {
            Rational c = phi_polynomial(a).coeff(static_cast<size_t>(m)) * Rational::factorial(a).inverse();
            s[static_cast<int>(a)] = QLambda::monomial(c, static_cast<size_t>(m));
        }
        tab.I.push_back(s);
    }
    return tab;
}

// The Λ-free components I_0..I_4 as rational series.
inline RSeries i_component(int k, int n) {
    if (k < 0 || k > 4) throw invalid_argument("i_component: k must be in 0..4");
    return at_lambda_zero(build_ifunction(4, n)[k]);
}

inline RSeries mirror_map(int n) { return i_component(1, n) / i_component(0, n); }

// (1 − t⁵/3125)^{−1/5} by the binomial series.
inline RSeries l_series(int n) {
    RSeries l(n);
    Rational c(1);
    for (int j = 0; 5 * j <= n; ++j) {
        l[5 * j] = c;
        // binom(−1/5, j+1)(−1/3125)^{j+1} from binom(−1/5, j)(−1/3125)^j
        c *= (Rational(-1, 5) - Rational(j)) / Rational(j + 1) * Rational(-1, 3125);
    }
    return l;
}

// Σ_k G_k z^{−(k−shift)} φ_k for k ≥ shift: the graded form of M^shift(I/z).
struct ZGraded {
    int shift = 0;
    std::vector<QSeries> comp;  // comp[i] multiplies z^{−i} φ_{shift+i}

    const QSeries& at(int k) const { return comp.at(static_cast<size_t>(k - shift)); }
};

inline ZGraded i_over_z(const IFunctionTable& tab) {
    ZGraded g;
    g.comp = tab.I;
    return g;
}

// M F = z d/dt (F / F(t,∞)); the leading component must be a unit.
inline ZGraded birkhoff_M(const ZGraded& f) {
    if (f.comp.empty()) throw domain_error("birkhoff_M of empty object");
    const QSeries& lead = f.comp[0];
    if (!lead[0].is_constant() || lead[0].is_zero())
        throw domain_error("birkhoff_M: leading part has non-unit constant term " + lead[0].str());
    QSeries inv = lead.inverse();
    ZGraded r;
    r.shift = f.shift + 1;
    for (size_t i = 1; i < f.comp.size(); ++i) r.comp.push_back(derivative(f.comp[i] * inv));
    return r;
}

struct BirkhoffTable {
    int pmax = 0, qmax = 0;
    std::vector<std::vector<QSeries>> entries;  // entries[p][q − p]

    const QSeries& operator()(int p, int q) const {
        if (p < 0 || p > pmax || q < p || q > qmax) throw out_of_order("I_{p,q} index out of table");
        return entries[static_cast<size_t>(p)][static_cast<size_t>(q - p)];
    }
    RSeries rational(int p, int q) const { return at_lambda_zero((*this)(p, q)); }
};

// I_{0,q} = I_q, I_{p,q} = d/dt(I_{p−1,q}/I_{p−1,p−1}); I_{p,q} is known through t^{N−p}.
inline BirkhoffTable ipq_table(const IFunctionTable& tab, int pmax, int qmax) {
    if (pmax > tab.kmax || qmax > tab.kmax) throw out_of_order("ipq_table exceeds kmax");
    BirkhoffTable b;
    b.pmax = pmax;
    b.qmax = qmax;
    ZGraded g = i_over_z(tab);
    g.comp.resize(static_cast<size_t>(qmax + 1));
    for (int p = 0; p <= pmax; ++p) {
        b.entries.push_back(g.comp);
        if (p < pmax) g = birkhoff_M(g);
    }
    return b;
}

inline BirkhoffTable ipq_table(int pmax, int qmax, int n, Theory theory = Theory::twisted) {
    return ipq_table(build_ifunction(std::max(qmax, 10), n, theory), pmax, qmax);
}

// Pairing on φ-slots reduced mod 5, with η(φ_4, φ_4) = 5Λ.
inline QLambda pairing_qlambda(int a, int b) {
    a %= 5;
    b %= 5;
    if (a == 4 && b == 4) return QLambda::monomial(Rational(5), 1);
    if (a <= 3 && b <= 3 && a + b == 3) return QLambda(5);
    return QLambda();
}

// S*(φ_k) = M^k(I/z)/I_{k,k}: component q is the coefficient of z^{−q} φ_{k+q}.
inline std::vector<QSeries> s_operator(const BirkhoffTable& b, int k) {
    if (k < 0 || k > 5 || k > b.pmax) throw invalid_argument("s_operator: k out of range");
    std::vector<QSeries> out;
    const QSeries& lead = b(k, k);
    // I_{5,5} has constant term Λ; divide through the Λ-free factor I_{0,0} instead.
    QSeries inv = k == 5 ? b(0, 0).inverse() : lead.inverse();
    for (int q = k; q <= b.qmax; ++q) {
        QSeries c = b(k, q) * inv;
        if (k == 5) {
            // divide by Λ exactly
            c = c.map([](const QLambda& p) {
                if (!p.coeff(0).is_zero()) throw domain_error("s_operator(5): component not divisible by Λ");
                return p.shift_down(1);
            });
        }
        out.push_back(c);
    }
    return out;
}

// ---- verification suites ----

// Working order giving every identity below room for derivatives and the Birkhoff shifts.
inline int working_order(int n) { return n + 6; }

inline Report picard_fuchs_check(int amax) {
    return timed_suite("pf", [&](Report& rep) {
        for (Theory th : {Theory::twisted, Theory::fjrw}) {
            bool ok = true;
            for (long a = 0; a <= amax && ok; ++a) {
                // c_a(u) as the φ_a coefficient with u := Λ/z⁵.
                auto coeff = [&](long b) -> QLambda {
                    Rational inv = Rational::factorial(b).inverse();
                    if (th == Theory::twisted) return phi_polynomial(b) * inv;
                    // FJRW: Π_{0≤k<(b+1)/5} k⁵, the k = 0 factor present when b ≡ 4 mod 5
                    if (b % 5 == 4) return QLambda();
                    return QLambda(phi_polynomial(b).coeff(0) * inv);
                };
                QLambda ca = coeff(a), ca5 = coeff(a + 5);
                Rational w = Rational(a + 1, 5).pow(5);
                QLambda lhs = (th == Theory::twisted ? QLambda(std::vector<Rational>{w, Rational(1)}) : QLambda(w)) * ca;
                QLambda rhs = ca5 * (Rational::factorial(a + 5) / Rational::factorial(a));
                if (!(lhs == rhs)) {
                    rep.add("annihilation " + theory_name(th), false, lhs.str("u"), rhs.str("u"), static_cast<int>(a));
                    ok = false;
                }
            }
            if (ok) rep.add("annihilation " + theory_name(th), true);
        }
        // Three-term consistency against the series table itself.
        IFunctionTable tab = build_ifunction(10, amax + 5);
        bool ok = true;
        for (int a = 0; a + 5 <= amax + 5 && ok; ++a) {
            int k = a % 5;
            Rational lhs = tab[k][a].coeff(0) * Rational(a + 1, 5).pow(5);
            Rational rhs = tab[k][a + 5].coeff(0) * Rational::factorial(a + 5) / Rational::factorial(a);
            if (!(lhs == rhs)) {
                rep.add("table ratio", false, lhs.str(), rhs.str(), a);
                ok = false;
            }
        }
        if (ok) rep.add("table ratio", true);
        rep.details["amax"] = amax;
    });
}

inline Report verify_ipp(int n) {
    return timed_suite("ipp", [&](Report& rep) {
        int w = working_order(n);
        for (Theory th : {Theory::twisted, Theory::fjrw}) {
            BirkhoffTable b = ipq_table(5, 10, w, th);
            QSeries prod = QSeries::one(n);
            for (int p = 0; p <= 4; ++p) prod = prod * b(p, p).truncate(n);
            QSeries l5 = to_qlambda(ipow(l_series(n), 5));
            rep.add(compare_series("product " + theory_name(th), prod, l5, n));
            if (th == Theory::twisted) {
                int n2 = std::min(n, w - 5);
                QSeries lam = QSeries::constant(QLambda::monomial(Rational(1), 1), n2);
                rep.add(compare_series("Lambda shift twisted", b(5, 5).truncate(n2), lam * b(0, 0).truncate(n2), n2));
            }
            for (int p = 0; p <= 4; ++p)
                rep.add(compare_series("symmetry p=" + std::to_string(p) + " " + theory_name(th), b(p, p).truncate(n),
                                       b(4 - p, 4 - p).truncate(n), n));
        }
    });
}

// d/du = L⁻¹ d/dt on a rational series.
inline RSeries d_du(const RSeries& f, const RSeries& l) { return derivative(f) / l.truncate(f.order() - 1); }

inline Report verify_zz_identity(int n) {
    return timed_suite("zz", [&](Report& rep) {
        int w = n + 4;
        for (Theory th : {Theory::twisted, Theory::fjrw}) {
            BirkhoffTable b = ipq_table(1, 1, w, th);
            RSeries i0 = b.rational(0, 0), i11 = b.rational(1, 1).truncate(w - 1);
            RSeries l = l_series(w);
            int m = w - 1;
            RSeries c2 = ipow(l.truncate(m), 2) / (i0.truncate(m) * i11);
            RSeries c3 = l.truncate(m) / i0.truncate(m);
            RSeries g2 = dlog(c2) / l.truncate(m - 1), g3 = dlog(c3) / l.truncate(m - 1);
            RSeries lhs = g2 * g2 + g3 * g3;
            RSeries pot = log(l.truncate(m)) * Rational(5, 4) - log(i0.truncate(m)) * Rational(4) - log(i11);
            RSeries rhs = d_du(d_du(pot, l), l);
            rep.add(compare_series("main identity " + theory_name(th), lhs.truncate(n), rhs.truncate(n), n));
        }
    });
}

inline Report verify_club_spade(int dmax) {
    return timed_suite("clubspade", [&](Report& rep) {
        int w = 5 * (dmax + 1) + 4;
        RSeries i0 = i_component(0, w), i1 = i_component(1, w);
        auto d = [](const RSeries& s, int k) {
            RSeries r = s;
            for (int i = 0; i < k; ++i) r = derivative(r);
            return r;
        };
        int m = w - 3;
        auto T = [&](const RSeries& s) { return s.truncate(m); };
        // t·♣ and t·♠ as ordinary power series.
        RSeries tclub = (T(d(i1, 3)) * T(i0) - T(i1) * T(d(i0, 3)) - T(d(i1, 2)) * T(d(i0, 1)) + T(d(i1, 1)) * T(d(i0, 2))).shift(2);
        RSeries tspade = (T(d(i1, 2)) * T(i0) - T(i1) * T(d(i0, 2))).shift(1) + (T(d(i1, 1)) * T(i0) - T(i1) * T(d(i0, 1)));

        auto c0 = [&](long d1) { return i0[static_cast<int>(5 * d1)]; };
        auto c1 = [&](long d2) { return i1[static_cast<int>(5 * d2 + 1)]; };
        RSeries club_sum(m), spade_sum(m), club_raw(m);
        for (long d1 = 0; 5 * d1 <= m; ++d1)
            for (long d2 = 0; 5 * (d1 + d2) <= m; ++d2) {
                Rational C = c0(d1) * c1(d2);
                int e = static_cast<int>(5 * (d1 + d2));
                Rational x1(d1), x2(d2);
                club_sum[e] -= C * Rational(5) * (Rational(5) * x1 - Rational(5) * x2 - Rational(1)) *
                               (Rational(5) * x1 * x1 + Rational(5) * x2 * x2 - Rational(3) * x1 - x2);
                spade_sum[e] -= C * (Rational(5) * x1 - Rational(5) * x2 - Rational(1)) * (Rational(5) * x1 + Rational(5) * x2 + Rational(1));
                Rational a = Rational(5) * x1, bb = Rational(5) * x2;
                club_raw[e] += C * ((bb + 1) * bb * (bb - 1) - a * (a - 1) * (a - 2) - (bb + 1) * bb * a + (bb + 1) * a * (a - 1));
            }
        int top = 5 * dmax;
        rep.add(compare_series("club double sum", tclub, club_sum, top));
        rep.add(compare_series("club unsimplified", club_raw, club_sum, top));
        rep.add(compare_series("spade double sum", tspade, spade_sum, top));
        // (5⁵ − t⁵)·♣ = 5t⁵·♠, compared through total degree dmax.
        RSeries t5 = RSeries::monomial(Rational(1), 5, m);
        RSeries lhs = (RSeries::constant(Rational(3125), m) - t5) * club_sum;
        RSeries rhs = (t5 * spade_sum) * Rational(5);
        rep.add(compare_series("(5^5 - t^5) club = 5 t^5 spade", lhs, rhs, top));

        bool okA = true;
        for (long d1 = 0; d1 <= dmax && okA; ++d1)
            for (long d2 = 0; d1 + d2 <= dmax && okA; ++d2) {
                Rational x1(d1), x2(d2);
                auto A = [](Rational a1, Rational a2) {
                    return Rational(1, 5) * (a1 - Rational(4, 5)).pow(4) / (Rational(5) * a1 + Rational(5) * a2 - Rational(2));
                };
                auto B = [](Rational a1, Rational a2) {
                    return Rational(-1, 5) * (a2 - Rational(3, 5)).pow(4) / (Rational(5) * a1 + Rational(5) * a2 - Rational(2));
                };
                Rational a = Rational(5) * x1, bb = Rational(5) * x2;
                Rational r1 = a * (a - 1) * (a - 2) * (a - 3) / (x1 - Rational(4, 5)).pow(4) * A(x1, x2) +
                              (bb + 1) * bb * (bb - 1) * (bb - 2) / (x2 - Rational(3, 5)).pow(4) * B(x1, x2);
                Rational q1 = (a - bb - 1) * (Rational(5) * x1 * x1 + Rational(5) * x2 * x2 - Rational(3) * x1 - x2);
                Rational r2 = A(x1 + 1, x2) + B(x1, x2 + 1);
                Rational q2 = Rational(1, 625) * (a - bb - 1) *
                              (Rational(5) * x1 * x1 + Rational(5) * x2 * x2 + Rational(2) * x1 + Rational(4) * x2 + Rational(1));
                if (!(r1 == q1)) {
                    rep.add("A/B first relation", false, r1.str(), q1.str(), static_cast<int>(d1 + d2));
                    okA = false;
                } else if (!(r2 == q2)) {
                    rep.add("A/B second relation", false, r2.str(), q2.str(), static_cast<int>(d1 + d2));
                    okA = false;
                }
            }
        if (okA) rep.add("A/B relations", true);
        rep.details["dmax"] = dmax;
    });
}

struct YukawaResult {
    RSeries y;
    Report report;
};

inline YukawaResult yukawa(int n) {
    YukawaResult out;
    out.report = timed_suite("yukawa", [&](Report& rep) {
        int w = working_order(n);
        BirkhoffTable b = ipq_table(2, 2, w);
        RSeries y = (b.rational(2, 2) / b.rational(1, 1).truncate(w - 2)).truncate(n);
        out.y = y;
        RSeries i0 = b.rational(0, 0).truncate(n), l = l_series(n);
        // dt/dτ from the reversed mirror map.
        RSeries tau = mirror_map(n + 1);
        RSeries t_of_tau = reversion(tau.renamed("tau"));
        RSeries dt_dtau = compose(derivative(t_of_tau), tau.truncate(n)).renamed("t");
        rep.add(compare_series("dt/dtau = 1/I11", dt_dtau, b.rational(1, 1).truncate(n).inverse(), n));
        RSeries rhs = ipow(l, 5) / (i0 * i0) * ipow(dt_dtau, 3);
        rep.add(compare_series("Y = L^5/I0^2 (dt/dtau)^3", y, rhs, n));
        QSeries yl = b(2, 2).truncate(std::min(n, 4)) / b(1, 1).truncate(std::min(n, 4));
        rep.add(compare_series("Lambda-free below t^5", at_lambda_zero(yl), y.truncate(std::min(n, 4)), std::min(n, 4)));
    });
    return out;
}

// η(S*(φ_i)(z), S*(φ_j)(−z)) = η(φ_i, φ_j): every z^{−m} coefficient, m ≥ 1, vanishes.
inline Report verify_s_unitarity(int n, int kmax = 10) {
    return timed_suite("s-unitarity", [&](Report& rep) {
        int w = n + 5;
        BirkhoffTable b = ipq_table(build_ifunction(kmax, w), 4, kmax);
        std::vector<std::vector<QSeries>> S;
        for (int k = 0; k <= 4; ++k) {
            auto s = s_operator(b, k);
            for (auto& c : s) c = c.truncate(n);
            S.push_back(s);
        }
        int mmax = kmax - 4;
        bool ok = true;
        for (int i = 0; i <= 4 && ok; ++i)
            for (int j = 0; j <= 4 && ok; ++j) {
                QSeries c0 = S[i][0] * S[j][0];
                if (!(c0 == QSeries::one(n))) {
                    rep.add("leading", false, c0.str(), "1", 0);
                    ok = false;
                }
                for (int m = 1; m <= mmax && ok; ++m) {
                    QSeries acc(n);
                    for (int q1 = 0; q1 <= m; ++q1) {
                        int q2 = m - q1;
                        QSeries term = S[i][q1] * S[j][q2];
                        QLambda e = pairing_qlambda(i + q1, j + q2);
                        if (e.is_zero()) continue;
                        term = term.scaled(e);
                        if (q2 % 2) acc -= term;
                        else acc += term;
                    }
                    auto c = expect_zero_series("z^-" + std::to_string(m) + " (" + std::to_string(i) + "," + std::to_string(j) + ")", acc, n);
                    if (!c.pass) {
                        rep.add(c);
                        ok = false;
                    }
                }
            }
        if (ok) rep.add("all z^-m coefficients vanish", true);
    });
}

}  // namespace mirrorforge
