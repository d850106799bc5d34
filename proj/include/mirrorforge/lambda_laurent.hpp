#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cyclotomic.hpp"

namespace mirrorforge {

// Finite sum Σ c_h λ^{h/2}, c_h ∈ Q(ξ). Exponents are stored in half steps.
class LambdaLaurent {
public:
    using Terms = std::map<int, Cyc>;

    LambdaLaurent() = default;
    LambdaLaurent(const Cyc& c) { add_term(0, c); }       // NOLINT
    LambdaLaurent(const Rational& r) { add_term(0, Cyc(r)); }  // NOLINT
    LambdaLaurent(long n) { add_term(0, Cyc(n)); }        // NOLINT
    LambdaLaurent(int n) { add_term(0, Cyc(n)); }         // NOLINT

    static LambdaLaurent monomial(int halfexp, const Cyc& c = Cyc(1)) {
        LambdaLaurent r;
        r.add_term(halfexp, c);
        return r;
    }
    // λ^k for integer k.
    static LambdaLaurent lambda_pow(int k) { return monomial(2 * k); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    size_t size() const { return t_.size(); }

    Cyc coeff(int halfexp) const {
        auto it = t_.find(halfexp);
        return it == t_.end() ? Cyc() : it->second;
    }

    void add_term(int halfexp, const Cyc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(halfexp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    LambdaLaurent inverse() const {
        if (t_.empty()) throw division_by_zero();
        if (t_.size() != 1) throw not_a_unit("LambdaLaurent inverse of non-monomial " + str());
        auto& [h, c] = *t_.begin();
        return monomial(-h, c.inverse());
    }

    LambdaLaurent div_monomial(int halfexp, const Cyc& c = Cyc(1)) const {
        Cyc ic = c.inverse();
        LambdaLaurent r;
        for (auto& [h, v] : t_) r.t_.emplace(h - halfexp, v * ic);
        return r;
    }

    // Replace λ by s·λ for rational s; a term λ^{h/2} picks up s^{h/2}, so h must be even.
    LambdaLaurent rescale_lambda(const Rational& s) const {
        LambdaLaurent r;
        for (auto& [h, v] : t_) {
            if (h % 2 != 0) throw domain_error("rescale_lambda on half-integer exponent");
            r.add_term(h, v * s.pow(h / 2));
        }
        return r;
    }

    LambdaLaurent& operator+=(const LambdaLaurent& o) {
        for (auto& [h, c] : o.t_) add_term(h, c);
        return *this;
    }
    LambdaLaurent& operator-=(const LambdaLaurent& o) {
        for (auto& [h, c] : o.t_) add_term(h, -c);
        return *this;
    }
    LambdaLaurent& operator*=(const Rational& r) {
        if (r.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [h, c] : t_) c *= r;
        return *this;
    }
    friend LambdaLaurent operator+(LambdaLaurent a, const LambdaLaurent& b) { return a += b; }
    friend LambdaLaurent operator-(LambdaLaurent a, const LambdaLaurent& b) { return a -= b; }
    friend LambdaLaurent operator-(const LambdaLaurent& a) {
        LambdaLaurent r;
        for (auto& [h, c] : a.t_) r.t_.emplace(h, -c);
        return r;
    }
    friend LambdaLaurent operator*(LambdaLaurent a, const Rational& r) { return a *= r; }
    friend LambdaLaurent operator*(const Rational& r, LambdaLaurent a) { return a *= r; }
    friend LambdaLaurent operator*(const LambdaLaurent& a, const LambdaLaurent& b) {
        LambdaLaurent r;
        for (auto& [h1, c1] : a.t_)
            for (auto& [h2, c2] : b.t_) r.add_term(h1 + h2, c1 * c2);
        return r;
    }
    LambdaLaurent& operator*=(const LambdaLaurent& o) { return *this = *this * o; }

    friend bool operator==(const LambdaLaurent& a, const LambdaLaurent& b) { return a.t_ == b.t_; }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [h, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (h != 0) {
                os << "*lambda^";
                if (h % 2 == 0) os << h / 2;
                else os << "(" << h << "/2)";
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const LambdaLaurent& x) { return os << x.str(); }

private:
    Terms t_;
};

// Exact rational value of x, or cancellation_failure carrying the leftover terms.
inline Rational rationality_project(const LambdaLaurent& x) {
    if (x.is_zero()) return Rational(0);
    if (x.size() == 1) {
        auto& [h, c] = *x.terms().begin();
        if (h == 0 && c.is_rational()) return c[0];
    }
    LambdaLaurent residual = x;
    Cyc c0 = x.coeff(0);
    if (!c0.is_zero()) residual -= LambdaLaurent(Cyc(c0[0]));
    throw cancellation_failure(residual.str());
}

// Square root of a monomial q·ξ^k·λ^{h/2} with q a rational square and h even,
// using the in-group root for ξ.
inline LambdaLaurent monomial_sqrt(const LambdaLaurent& m) {
    if (!m.is_monomial()) throw domain_error("monomial_sqrt of " + m.str());
    auto& [h, c] = *m.terms().begin();
    if (h % 2 != 0) throw domain_error("monomial_sqrt: odd half-exponent");
    for (int k = 0; k < 5; ++k) {
        Cyc q = c * Cyc::xi_pow(-k);
        if (!q.is_rational()) continue;
        Rational root;
        if (!q[0].perfect_square_root(root)) continue;
        return LambdaLaurent::monomial(h / 2, zeta_half_power(k) * root);
    }
    throw domain_error("monomial_sqrt: no square root for " + m.str());
}

}  // namespace mirrorforge
