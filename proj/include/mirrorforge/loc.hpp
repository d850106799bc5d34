#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ifun.hpp"

namespace mirrorforge {

using ZPoly = Poly<QLambda>;  // polynomial in z over Q[Λ]

// scale · num(z) / (z^zpow · Π (z − r)^{m_r}); zpow may be negative.
class ZRational {
public:
    ZRational() = default;
    ZRational(const QLambda& c) : num_(ZPoly(c)) {}  // NOLINT

    static ZRational from_poly(const ZPoly& p) {
        ZRational r;
        r.num_ = p;
        return r;
    }

    const ZPoly& numerator() const { return num_; }
    const Rational& scale() const { return scale_; }
    int zpow() const { return zpow_; }
    const std::map<Rational, int>& roots() const { return roots_; }
    bool is_zero() const { return num_.is_zero(); }

    // multiply by (k z + c)^{±1}
    void mul_linear(const Rational& k, const Rational& c) {
        if (k.is_zero()) {
            scale_ *= c;
            return;
        }
        scale_ *= k;
        add_root(-c / k, -1);
    }
    void div_linear(const Rational& k, const Rational& c) {
        if (k.is_zero()) {
            scale_ /= c;
            return;
        }
        scale_ /= k;
        add_root(-c / k, 1);
    }
    void mul_poly(const ZPoly& p) {
        num_ = num_ * p;
        reduce();
    }
    void mul_zpow(int k) { zpow_ -= k; }
    void mul_scalar(const Rational& r) { scale_ *= r; }
    void mul_qlambda(const QLambda& c) { num_ = num_ * ZPoly(c); }

    // Value at a point that is not a pole.
    QLambda eval(const Rational& z) const {
        if (is_zero()) return QLambda();
        if (roots_.count(z) || (z.is_zero() && zpow_ > 0)) throw domain_error("ZRational::eval at a pole");
        Rational den = z.pow(zpow_);
        for (auto& [r, m] : roots_) den *= (z - r).pow(m);
        return num_.eval(QLambda(z)) * (scale_ / den);
    }

    // Residue at a simple pole r ≠ 0; zero at regular points.
    QLambda residue(const Rational& r) const {
        if (r.is_zero()) throw invalid_argument("ZRational::residue at 0 is not a simple-pole residue");
        auto it = roots_.find(r);
        if (it == roots_.end() || is_zero()) return QLambda();
        if (it->second != 1) throw domain_error("ZRational::residue at a pole of order " + std::to_string(it->second));
        Rational den = r.pow(zpow_);
        for (auto& [s, m] : roots_)
            if (s != r) den *= (r - s).pow(m);
        return num_.eval(QLambda(r)) * (scale_ / den);
    }

    // Laurent coefficients at z = 0 for exponents ≤ kmax.
    std::map<int, QLambda> laurent(int kmax) const {
        std::map<int, QLambda> out;
        if (is_zero()) return out;
        int need = kmax + zpow_;  // power-series degree needed before the shift
        if (need < 0) return out;
        std::vector<QLambda> s(static_cast<size_t>(need + 1));
        for (int i = 0; i <= need; ++i) s[static_cast<size_t>(i)] = num_.coeff(static_cast<size_t>(i)) * scale_;
        for (auto& [r, m] : roots_) {
            // 1/(z − r) = −Σ z^n / r^{n+1}
            std::vector<Rational> g(static_cast<size_t>(need + 1));
            for (int n = 0; n <= need; ++n) g[static_cast<size_t>(n)] = -r.pow(-(n + 1));
            for (int rep = 0; rep < m; ++rep) {
                std::vector<QLambda> t(static_cast<size_t>(need + 1));
                for (int i = 0; i <= need; ++i) {
                    if (s[static_cast<size_t>(i)].is_zero()) continue;
                    for (int j = 0; i + j <= need; ++j) t[static_cast<size_t>(i + j)] += s[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
                }
                s = t;
            }
        }
        for (int i = 0; i <= need; ++i)
            if (!s[static_cast<size_t>(i)].is_zero()) out[i - zpow_] = s[static_cast<size_t>(i)];
        return out;
    }

    // Poles: 0 with its order (if any) and the nonzero roots.
    std::vector<std::pair<Rational, int>> poles() const {
        std::vector<std::pair<Rational, int>> p;
        if (zpow_ > 0) p.emplace_back(Rational(0), zpow_);
        for (auto& [r, m] : roots_) p.emplace_back(r, m);
        return p;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << scale_ << ")*[" << num_.str("z") << "]";
        if (zpow_ != 0) os << "/z^" << zpow_;
        for (auto& [r, m] : roots_) os << "/(z-(" << r << "))" << (m > 1 ? "^" + std::to_string(m) : "");
        return os.str();
    }

private:
    void add_root(const Rational& r, int m) {
        if (r.is_zero()) {
            zpow_ += m;
        } else {
            int& e = roots_[r];
            e += m;
            if (e == 0) roots_.erase(r);
        }
        reduce();
    }
    // cancel numerator factors against denominator roots; keep denominator only
    void reduce() {
        if (num_.is_zero()) return;
        for (auto it = roots_.begin(); it != roots_.end();) {
            while (it->second > 0) {
                QLambda rem;
                ZPoly q = num_.divide_linear(QLambda(it->first), rem);
                if (!rem.is_zero()) break;
                num_ = q;
                --it->second;
            }
            while (it->second < 0) {
                num_ = num_ * ZPoly(std::vector<QLambda>{QLambda(-it->first), QLambda(1)});
                ++it->second;
            }
            it = it->second == 0 ? roots_.erase(it) : std::next(it);
        }
        while (zpow_ > 0 && !num_.is_zero() && num_.coeff(0).is_zero()) {
            num_ = num_.shift_down(1);
            --zpow_;
        }
    }

    ZPoly num_ = ZPoly(QLambda(1));
    Rational scale_ = Rational(1);
    int zpow_ = 0;
    std::map<Rational, int> roots_;  // multiplicity in the denominator
};

inline QLambda lambda_symbol(Theory th) { return th == Theory::twisted ? QLambda::monomial(Rational(1), 1) : QLambda(); }

// (k z + c)⁵ + Λ as a polynomial in z
inline ZPoly quintic_factor(const Rational& k, const Rational& c, Theory th) {
    std::vector<QLambda> v(6);
    for (int i = 0; i <= 5; ++i) {
        Rational binom = Rational::factorial(5) / (Rational::factorial(i) * Rational::factorial(5 - i));
        v[static_cast<size_t>(i)] = QLambda(binom * k.pow(i) * c.pow(5 - i));
    }
    v[0] += lambda_symbol(th);
    return ZPoly(v);
}

// k ranging over {x − j : j ∈ N} ∩ [lo, hi) or (lo, hi] as requested
inline std::vector<Rational> same_class(const Rational& x, const Rational& lo, bool lo_incl, const Rational& hi, bool hi_incl) {
    std::vector<Rational> ks;
    Rational k = lo + (x - lo).frac();
    if (k == lo && !lo_incl) k += Rational(1);
    for (; k < hi || (k == hi && hi_incl); k += Rational(1)) ks.push_back(k);
    return ks;
}

// Coefficient of Q^{(a+1)/5} φ♥_a:
// z^{1−a}/a! · Π_{0≤k<A}((kz)⁵ + Λ) / Π_{0<k≤A}(kz − α), A = (a+1)/5, k ≡ A mod 1,
// the k = 0 factor present exactly when A is an integer.
inline ZRational heart_term(int a, Theory th, const Rational& alpha = Rational(1)) {
    Rational A(a + 1, 5);
    ZRational r;
    r.mul_zpow(1 - a);
    r.mul_scalar(Rational::factorial(a).inverse());
    ZPoly num(QLambda(1));
    for (auto& k : same_class(A, Rational(0), true, A, false)) num = num * quintic_factor(k, Rational(0), th);
    for (auto& k : same_class(A, Rational(0), false, A, true)) r.div_linear(k, -alpha);
    r.mul_poly(num);
    return r;
}

// Coefficient of Q^b φ◇: −(zα/5) z^{−b}/b! · Π_{k=0}^{b−1}((kz+α)⁵ + Λ) / Π_{k=0}^{5b−1}(kz + 5α)
inline ZRational diamond_term(int b, Theory th, const Rational& alpha = Rational(1)) {
    ZRational r;
    r.mul_zpow(1 - b);
    r.mul_scalar(-alpha / Rational(5) / Rational::factorial(b));
    ZPoly num(QLambda(1));
    for (int k = 0; k < b; ++k) num = num * quintic_factor(Rational(k), alpha, th);
    for (int k = 0; k < 5 * b; ++k) r.div_linear(Rational(k), Rational(5) * alpha);
    r.mul_poly(num);
    return r;
}

struct SectorIFunction {
    bool heart = true;
    Theory theory = Theory::twisted;
    std::vector<ZRational> terms;  // heart: index a, degree (a+1)/5; diamond: index b, degree b
};

inline std::pair<SectorIFunction, SectorIFunction> build_sector_ifunctions(int dmax, Theory th) {
    if (dmax < 1) throw invalid_argument("build_sector_ifunctions: dmax must be >= 1");
    SectorIFunction h, d;
    h.theory = d.theory = th;
    d.heart = false;
    for (int a = 0; a + 1 <= 5 * dmax; ++a) h.terms.push_back(heart_term(a, th));
    for (int b = 0; b <= dmax; ++b) d.terms.push_back(diamond_term(b, th));
    return {h, d};
}

// RC(d) = 1/(5d) · Π_{0<k<d}((kα/d)⁵ + Λ) / ((5d)! (α/d)^{5d} Π_{0≤k<d}(kα/d − α)), k ≡ d mod 1
inline QLambda recursion_coeff(const Rational& d, Theory th, const Rational& alpha = Rational(1)) {
    Rational fd = d * Rational(5);
    if (!fd.is_integer() || fd.sign() <= 0) throw invalid_argument("recursion_coeff: 5d must be a positive integer");
    long n5 = fd.to_long();
    QLambda num(1);
    for (auto& k : same_class(d, Rational(0), false, d, false)) num = num * (QLambda((k * alpha / d).pow(5)) + lambda_symbol(th));
    Rational den = Rational(5) * d * Rational::factorial(n5) * (alpha / d).pow(n5);
    for (auto& k : same_class(d, Rational(0), true, d, false)) den *= k * alpha / d - alpha;
    return num * den.inverse();
}

// (η♥_m)⁻¹ for the sector of multiplicity m = 5d mod 5, and (η◇)⁻¹.
inline QLambda heart_pairing_inverse(long fived, Theory th, const Rational& alpha = Rational(1)) {
    if (fived % 5 != 0) return QLambda(Rational(1, 5));
    return lambda_symbol(th) * (-alpha / Rational(5));
}
inline QLambda diamond_pairing_inverse(const Rational& alpha = Rational(1)) { return QLambda(-alpha / Rational(5)); }

struct ResidueRatio {
    QLambda lhs, rhs;
};

// Solves lhs = c·rhs for one constant c across all entries; 0 = 0 entries are compatible.
struct ConstantFit {
    bool ok = true;
    std::optional<std::pair<QLambda, QLambda>> c;  // c = first / second
    std::string failure;
    std::string str() const {
        if (!c) return "undetermined";
        const auto& [n, d] = *c;
        if (d.is_constant()) return (n * d.coeff(0).inverse()).str();
        return "(" + n.str() + ")/(" + d.str() + ")";
    }
};

inline ConstantFit fit_constant(const std::vector<std::pair<std::string, ResidueRatio>>& rows) {
    ConstantFit f;
    for (auto& [label, r] : rows) {
        if (r.lhs.is_zero() && r.rhs.is_zero()) continue;
        if (!f.c) {
            if (r.rhs.is_zero()) {
                f.ok = false;
                f.failure = label + ": right side vanishes, left side " + r.lhs.str();
                return f;
            }
            f.c = std::make_pair(r.lhs, r.rhs);
            continue;
        }
        if (!(r.lhs * f.c->second == f.c->first * r.rhs)) {
            f.ok = false;
            f.failure = label + ": " + r.lhs.str() + " vs c*(" + r.rhs.str() + ")";
            return f;
        }
    }
    return f;
}

struct C2Result {
    Report report;
    ConstantFit heart_fit, diamond_fit;
};

inline C2Result residue_check(int dmax, Theory th, const Rational& alpha = Rational(1)) {
    C2Result out;
    out.report = timed_suite("residues-" + theory_name(th), [&](Report& rep) {
        std::vector<std::pair<std::string, ResidueRatio>> rows1, rows2;
        nlohmann::json per = nlohmann::json::array();
        // Res_{z=α/d} F♥_{5d} = (η♥_{5d})⁻¹ Q^d RC(d) F◇|_{z=α/d}, matched per power of Q
        for (long fd = 1; fd <= 5L * dmax; ++fd) {
            Rational d(fd, 5);
            Rational pole = alpha / d;
            QLambda rc = recursion_coeff(d, th, alpha);
            for (int b = 0; b <= dmax; ++b) {
                int a = static_cast<int>(fd - 1 + 5 * b);
                ResidueRatio r{heart_term(a, th, alpha).residue(pole),
                               heart_pairing_inverse(fd, th, alpha) * rc * diamond_term(b, th, alpha).eval(pole)};
                std::string label = "heart 5d=" + std::to_string(fd) + " b=" + std::to_string(b);
                per.push_back({{"relation", "heart"}, {"5d", fd}, {"b", b}, {"lhs", r.lhs.str()}, {"rhs_without_constant", r.rhs.str()}});
                rows1.emplace_back(label, r);
            }
        }
        // Res_{z=−α/d} F◇ = (η◇)⁻¹ Q^d RC(d) F♥_{−5d}|_{z=−α/d}
        for (int b = 1; b <= dmax; ++b)
            for (long fd = 1; fd < 5L * b; ++fd) {
                Rational d(fd, 5);
                Rational pole = -alpha / d;
                int a = static_cast<int>(5 * b - fd - 1);
                ResidueRatio r{diamond_term(b, th, alpha).residue(pole),
                               diamond_pairing_inverse(alpha) * recursion_coeff(d, th, alpha) * heart_term(a, th, alpha).eval(pole)};
                std::string label = "diamond b=" + std::to_string(b) + " 5d=" + std::to_string(fd);
                per.push_back({{"relation", "diamond"}, {"5d", fd}, {"b", b}, {"lhs", r.lhs.str()}, {"rhs_without_constant", r.rhs.str()}});
                rows2.emplace_back(label, r);
            }
        out.heart_fit = fit_constant(rows1);
        out.diamond_fit = fit_constant(rows2);
        rep.add("heart residues: one constant for all degrees", out.heart_fit.ok && out.heart_fit.c.has_value(),
                out.heart_fit.failure, out.heart_fit.str());
        rep.add("diamond residues: one constant for all degrees", out.diamond_fit.ok && out.diamond_fit.c.has_value(),
                out.diamond_fit.failure, out.diamond_fit.str());

        // poles only at 0 and the listed simple poles
        bool ok = true;
        std::string bad;
        for (int a = 0; a + 1 <= 5 * dmax + 5 && ok; ++a)
            for (auto& [p, m] : heart_term(a, th, alpha).poles()) {
                if (p.is_zero()) continue;
                Rational d = alpha / p;
                if (m != 1 || d.sign() <= 0 || !(d * Rational(5)).is_integer() || ((d * Rational(5)).to_long() - a - 1) % 5 != 0) {
                    ok = false;
                    bad = "heart a=" + std::to_string(a) + " pole " + p.str();
                }
            }
        for (int b = 0; b <= dmax + 1 && ok; ++b)
            for (auto& [p, m] : diamond_term(b, th, alpha).poles()) {
                if (p.is_zero()) continue;
                Rational d = -alpha / p;
                if (m != 1 || d.sign() <= 0 || !(d * Rational(5)).is_integer()) {
                    ok = false;
                    bad = "diamond b=" + std::to_string(b) + " pole " + p.str();
                }
            }
        rep.add("pole structure", ok, bad, "poles at 0 and simple poles at +-alpha/d");
        // residues at points off the pole list vanish
        bool zero = heart_term(6, th, alpha).residue(-alpha).is_zero() && heart_term(1, th, alpha).residue(alpha * Rational(5)).is_zero() &&
                    diamond_term(2, th, alpha).residue(alpha).is_zero();
        rep.add("residues at regular points vanish", zero);
        rep.details["heart_constant"] = out.heart_fit.str();
        rep.details["diamond_constant"] = out.diamond_fit.str();
        rep.details["rows"] = per;
    });
    return out;
}

inline Report residue_check_C2(int dmax, Theory th) { return residue_check(dmax, th).report; }

// ---- edge contributions ----

struct EdgeValue {
    QLambda value;   // Q-power stripped
    Rational q_power;
};

inline EdgeValue edge_contribution(int kase, const Rational& d, Theory th, const Rational& alpha = Rational(1)) {
    Rational fd = d * Rational(5);
    if (!fd.is_integer() || fd.sign() <= 0) throw invalid_argument("edge_contribution: 5d must be a positive integer");
    long n5 = fd.to_long();
    auto numer = [&](const Rational& dd) {
        QLambda num(1);
        for (auto& k : same_class(dd, Rational(0), false, dd, false)) num = num * (QLambda((k * alpha / dd).pow(5)) + lambda_symbol(th));
        return num;
    };
    EdgeValue e;
    e.q_power = d;
    if (kase == 1 || kase == 2) {
        long f = kase == 1 ? n5 : n5 - 1;
        Rational den = Rational::factorial(f) * (alpha / d).pow(f);
        for (auto& k : same_class(d, Rational(0), true, d, false)) den *= k * alpha / d - alpha;
        e.value = numer(d) * (Rational(5) / d / den);
        return e;
    }
    if (kase == 3) {
        if (!d.is_integer()) throw invalid_argument("edge_contribution case 3 requires an integer degree");
        Rational dp = d - Rational(1, 5);
        Rational den = Rational::factorial(n5 - 1) * (alpha / dp).pow(n5 - 1);
        for (auto& k : same_class(dp, Rational(-1, 5), true, dp, false)) den *= k * alpha / dp - alpha;
        e.value = numer(dp) * (Rational(5) / Rational(n5 - 1) / den);
        return e;
    }
    throw invalid_argument("edge_contribution: case must be 1, 2 or 3");
}

// ---- tail series ----

// r·ω^e with ω⁵ = −1
struct OmegaMonomial {
    Rational c;
    int e = 0;
    OmegaMonomial operator*(const OmegaMonomial& o) const { return {c * o.c, e + o.e}; }
    bool is_rational() const { return ((e % 5) + 5) % 5 == 0; }
    Rational to_rational() const {
        if (!is_rational()) throw domain_error("omega power " + std::to_string(e) + " is not rational");
        int k = e / 5;  // exact
        return (k % 2 == 0) ? c : -c;
    }
};

struct TailData {
    RSeries phi0_z;     // T(Q,−z)[φ♥_0 z Λ⁰] in q = Q^{1/5}
    RSeries phi1;       // T(Q,−z)[φ♥_1 Λ⁰]
    QSeries phi0_z_full;  // with Λ
};

// The z-regular part of the heart I-function without its Q^{1/5} term.
inline TailData tail_series(int n, Theory th = Theory::twisted) {
    TailData t{RSeries(n, "q"), RSeries(n, "q"), QSeries(n, "q")};
    for (int a = 1; a + 1 <= n; ++a) {
        if (a % 5 != 0 && a % 5 != 1) continue;
        int qp = a + 1;  // exponent of q
        auto lc = heart_term(a, th).laurent(1);
        if (a % 5 == 0) {
            QLambda c = lc.count(1) ? lc[1] : QLambda();
            t.phi0_z_full[qp] = -c;  // z → −z
            t.phi0_z[qp] = -c.coeff(0);
        } else {
            QLambda c = lc.count(0) ? lc[0] : QLambda();
            t.phi1[qp] = c.coeff(0);
        }
    }
    return t;
}

inline Report tail_extraction(int n) {
    return timed_suite("tails", [&](Report& rep) {
        TailData tw = tail_series(n, Theory::twisted);
        TailData fj = tail_series(n, Theory::fjrw);
        RSeries i0 = i_component(0, n), i1 = i_component(1, n);
        // t = ω⁻¹ q; displays at α = 1
        RSeries disp0(n, "q"), disp1(n, "q"), exact0(n, "q");
        for (int j = 0; 5 * j + 1 <= n; ++j) {
            OmegaMonomial tj{i0[5 * j], -5 * j};
            Rational c = tj.to_rational();
            if (j >= 1) {
                disp0[5 * j + 1] = -c;  // −q(I_0(t) − 1)
                exact0[5 * j + 1] = c;  // from Q^{−1/5}(−α)T = 1 − I_0(t)
            }
            if (5 * j + 2 <= n) {
                OmegaMonomial w = OmegaMonomial{Rational(1), -4} * OmegaMonomial{i1[5 * j + 1], -(5 * j + 1)};
                disp1[5 * j + 2] = w.to_rational();
            }
        }
        rep.add(compare_series("phi_1 coefficient = (-alpha)^(-4/5) Q^(1/5) I_1(t)", tw.phi1, disp1, n));
        // φ_0: solve the sign at the first nonzero order, then require it everywhere
        std::optional<Rational> sign;
        bool uniform = true;
        for (int k = 0; k <= n; ++k) {
            if (disp0[k].is_zero() && tw.phi0_z[k].is_zero()) continue;
            if (disp0[k].is_zero() || tw.phi0_z[k].is_zero()) {
                uniform = false;
                break;
            }
            Rational s = tw.phi0_z[k] / disp0[k];
            if (!sign) sign = s;
            else if (s != *sign) uniform = false;
        }
        rep.add("phi_0 z coefficient matches the display up to one sign", uniform && sign.has_value(), "", "");
        rep.details["phi0_sign_relative_to_display"] = sign ? sign->str() : "none";
        rep.add(compare_series("Q^(-1/5)(-alpha) T[phi_0 z] = 1 - I_0(t)", tw.phi0_z * Rational(-1), exact0 * Rational(-1), n));
        rep.add(compare_series("fjrw tails = twisted tails at Lambda^0", fj.phi0_z, tw.phi0_z, n));
        bool divisible = true;
        for (int k = 0; k <= n; ++k)
            if (!(tw.phi0_z_full[k] - QLambda(tw.phi0_z[k])).coeff(0).is_zero()) divisible = false;
        rep.add("Lambda enters the phi_0 z coefficient only through multiples of Lambda", divisible);
        if (n >= 6) rep.details["phi0_z_q6"] = tw.phi0_z[6].str();
    });
}

}  // namespace mirrorforge
