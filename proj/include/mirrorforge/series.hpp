#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "ring_traits.hpp"

namespace mirrorforge {

// Power series in one variable known through x^order.
template <class R>
class TruncatedSeries {
public:
    using ring = R;
    using traits = ring_traits<R>;

    TruncatedSeries() : TruncatedSeries(0) {}
    explicit TruncatedSeries(int order, std::string var = "t")
        : var_(std::move(var)), order_(order), c_(static_cast<size_t>(std::max(order, -1) + 1), traits::zero()) {
        if (order < 0) throw out_of_order("negative series order");
    }
    TruncatedSeries(int order, std::vector<R> coeffs, std::string var = "t") : TruncatedSeries(order, std::move(var)) {
        for (size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
    }

    static TruncatedSeries constant(const R& c, int order, std::string var = "t") {
        TruncatedSeries s(order, std::move(var));
        s.c_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order, std::string var = "t") { return constant(traits::one(), order, std::move(var)); }
    static TruncatedSeries monomial(const R& c, int k, int order, std::string var = "t") {
        TruncatedSeries s(order, std::move(var));
        if (k <= order) s.c_[static_cast<size_t>(k)] = c;
        return s;
    }
    static TruncatedSeries variable(int order, std::string var = "t") { return monomial(traits::one(), 1, order, std::move(var)); }

    int order() const { return order_; }
    const std::string& var() const { return var_; }
    const std::vector<R>& coeffs() const { return c_; }

    const R& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    R& operator[](int k) { return c_[static_cast<size_t>(k)]; }

    const R& coefficient(int k) const {
        if (k < 0 || k > order_)
            throw out_of_order("coefficient " + std::to_string(k) + " beyond order " + std::to_string(order_));
        return c_[static_cast<size_t>(k)];
    }

    // Lowest exponent with nonzero coefficient, or order+1 for the zero series.
    int valuation() const {
        for (int k = 0; k <= order_; ++k)
            if (!traits::is_zero(c_[static_cast<size_t>(k)])) return k;
        return order_ + 1;
    }
    bool is_zero() const { return valuation() > order_; }

    TruncatedSeries truncate(int m) const {
        if (m > order_) throw out_of_order("cannot raise order by truncation");
        TruncatedSeries r(m, var_);
        std::copy(c_.begin(), c_.begin() + m + 1, r.c_.begin());
        return r;
    }
    TruncatedSeries renamed(std::string v) const {
        TruncatedSeries r = *this;
        r.var_ = std::move(v);
        return r;
    }

    // Multiplication by x^k (k may be negative if the low coefficients vanish).
    TruncatedSeries shift(int k) const {
        TruncatedSeries r(order_, var_);
        for (int i = 0; i <= order_; ++i) {
            int j = i + k;
            if (j < 0) {
                if (!traits::is_zero(c_[static_cast<size_t>(i)])) throw domain_error("shift would create negative exponent");
                continue;
            }
            if (j <= order_) r.c_[static_cast<size_t>(j)] = c_[static_cast<size_t>(i)];
        }
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(c_[0]))>;
        TruncatedSeries<S> r(order_, var_);
        for (int k = 0; k <= order_; ++k) r[k] = f(c_[static_cast<size_t>(k)]);
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    TruncatedSeries& operator*=(const Rational& r) {
        for (auto& x : c_) x *= r;
        return *this;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    TruncatedSeries& operator/=(const TruncatedSeries& o) { return *this = *this / o; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& r) { return a *= r; }
    friend TruncatedSeries operator*(const Rational& r, TruncatedSeries a) { return a *= r; }

    // Scalar multiplication by a ring element.
    TruncatedSeries scaled(const R& s) const {
        TruncatedSeries r(order_, var_);
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = s * c_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_var(b);
        int n = std::min(a.order_, b.order_);
        TruncatedSeries r(n, a.var_);
        int va = a.valuation(), vb = b.valuation();
        for (int i = va; i <= n; ++i) {
            const R& ai = a.c_[static_cast<size_t>(i)];
            if (traits::is_zero(ai)) continue;
            for (int j = vb; i + j <= n; ++j) {
                const R& bj = b.c_[static_cast<size_t>(j)];
                if (traits::is_zero(bj)) continue;
                r.c_[static_cast<size_t>(i + j)] += ai * bj;
            }
        }
        return r;
    }

    TruncatedSeries inverse() const {
        R inv0 = [&] {
            try {
                return traits::inverse(c_[0]);
            } catch (const error&) {
                std::ostringstream os;
                os << "series with constant term " << c_[0] << " is not a unit";
                throw not_a_unit(os.str());
            }
        }();
        TruncatedSeries r(order_, var_);
        r.c_[0] = inv0;
        for (int k = 1; k <= order_; ++k) {
            R acc = traits::zero();
            for (int j = 1; j <= k; ++j) {
                const R& cj = c_[static_cast<size_t>(j)];
                if (traits::is_zero(cj)) continue;
                acc += cj * r.c_[static_cast<size_t>(k - j)];
            }
            r.c_[static_cast<size_t>(k)] = -(inv0 * acc);
        }
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            const R& x = c_[static_cast<size_t>(k)];
            if (traits::is_zero(x)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << x << ")";
            if (k > 0) os << "*" << var_ << (k > 1 ? "^" + std::to_string(k) : "");
        }
        if (first) os << "0";
        os << " + O(" << var_ << "^" << order_ + 1 << ")";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

private:
    void check_var(const TruncatedSeries& o) const {
        if (var_ != o.var_) throw domain_error("series variables differ: " + var_ + " vs " + o.var_);
    }
    void check_compatible(const TruncatedSeries& o) const {
        check_var(o);
        if (order_ != o.order_) throw out_of_order("series orders differ in addition");
    }

    std::string var_;
    int order_;
    std::vector<R> c_;
};

using RSeries = TruncatedSeries<Rational>;

// ---- calculus ----

template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& a) {
    if (a.order() == 0) return TruncatedSeries<R>(0, a.var());
    TruncatedSeries<R> r(a.order() - 1, a.var());
    for (int k = 1; k <= a.order(); ++k) r[k - 1] = a[k] * Rational(k);
    return r;
}

// Antiderivative with the given constant; the order rises by one.
template <class R>
TruncatedSeries<R> antiderivative(const TruncatedSeries<R>& a, const R& c = ring_traits<R>::zero()) {
    TruncatedSeries<R> r(a.order() + 1, a.var());
    r[0] = c;
    for (int k = 0; k <= a.order(); ++k) r[k + 1] = a[k] * Rational(1, k + 1);
    return r;
}

template <class R>
void require_constant(const TruncatedSeries<R>& a, bool one, const char* what) {
    bool ok = one ? a[0] == ring_traits<R>::one() : ring_traits<R>::is_zero(a[0]);
    if (!ok) {
        std::ostringstream os;
        os << what << " requires constant term " << (one ? "1" : "0") << ", got " << a[0];
        throw domain_error(os.str());
    }
}

// log a with a(0) = 1, same order as a.
template <class R>
TruncatedSeries<R> log(const TruncatedSeries<R>& a) {
    require_constant(a, true, "log");
    if (a.order() == 0) return TruncatedSeries<R>(0, a.var());
    TruncatedSeries<R> q = derivative(a) / a.truncate(a.order() - 1);
    return antiderivative(q);
}

// a'/a for any unit a; order drops by one.
template <class R>
TruncatedSeries<R> dlog(const TruncatedSeries<R>& a) {
    if (a.order() == 0) return TruncatedSeries<R>(0, a.var());
    return derivative(a) / a.truncate(a.order() - 1);
}

// exp a with a(0) = 0, via b_k = (1/k) Σ j a_j b_{k−j}.
template <class R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& a) {
    require_constant(a, false, "exp");
    using T = ring_traits<R>;
    TruncatedSeries<R> b(a.order(), a.var());
    b[0] = T::one();
    for (int k = 1; k <= a.order(); ++k) {
        R acc = T::zero();
        for (int j = 1; j <= k; ++j) {
            if (T::is_zero(a[j])) continue;
            acc += a[j] * b[k - j] * Rational(j);
        }
        b[k] = acc * Rational(1, k);
    }
    return b;
}

// a^e for a(0) = 1 and rational e.
template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& a, const Rational& e) {
    require_constant(a, true, "pow");
    return exp(log(a) * e);
}

template <class R>
TruncatedSeries<R> nth_root(const TruncatedSeries<R>& a, long n) {
    if (n <= 0) throw domain_error("nth_root needs positive n");
    require_constant(a, true, "nth_root");
    return exp(log(a) * Rational(1, n));
}

// Non-negative integer power by repeated squaring.
template <class R>
TruncatedSeries<R> ipow(TruncatedSeries<R> a, unsigned long e) {
    auto r = TruncatedSeries<R>::one(a.order(), a.var());
    while (e) {
        if (e & 1) r = r * a;
        e >>= 1;
        if (e) a = a * a;
    }
    return r;
}

// outer(inner(x)); inner must have vanishing constant term.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    if (!ring_traits<R>::is_zero(inner[0])) throw domain_error("compose: inner series has nonzero constant term");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries<R> in = inner.truncate(n);
    TruncatedSeries<R> r = TruncatedSeries<R>::constant(outer[n], n, inner.var());
    for (int k = n - 1; k >= 0; --k) {
        r = r * in;
        r[0] += outer[k];
    }
    return r;
}

// Compositional inverse of a = c·x + O(x²).
template <class R>
TruncatedSeries<R> reversion(const TruncatedSeries<R>& a) {
    using T = ring_traits<R>;
    if (!T::is_zero(a[0])) throw domain_error("reversion: nonzero constant term");
    if (a.order() < 1 || T::is_zero(a[1])) throw domain_error("reversion: vanishing linear coefficient");
    int n = a.order();
    R cinv = T::inverse(a[1]);
    TruncatedSeries<R> x = TruncatedSeries<R>::variable(n, a.var());
    TruncatedSeries<R> rest = a;
    rest[1] = T::zero();
    // g = c⁻¹ (x − rest∘g); each pass fixes one more coefficient.
    TruncatedSeries<R> g = x.scaled(cinv);
    for (int it = 2; it <= n; ++it) g = (x - compose(rest, g)).scaled(cinv);
    return g;
}

// Lift a rational series into another coefficient ring.
template <class S>
TruncatedSeries<S> lift(const RSeries& a) {
    return a.map([](const Rational& x) { return S(x); });
}

}  // namespace mirrorforge
