#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "rational.hpp"
#include "ring_traits.hpp"

namespace mirrorforge {

// Dense univariate polynomial over R, trailing zeros trimmed.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(const R& c) : c_{c} { trim(); }  // NOLINT
    Poly(long n) : c_{R(n)} { trim(); }   // NOLINT
    Poly(int n) : c_{R(n)} { trim(); }    // NOLINT
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(const R& c, size_t k) {
        std::vector<R> v(k + 1, ring_traits<R>::zero());
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(ring_traits<R>::one(), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(size_t k) const { return k < c_.size() ? c_[k] : ring_traits<R>::zero(); }
    bool is_constant() const { return c_.size() <= 1; }

    template <class S>
    S eval(const S& x) const {
        S acc = S(ring_traits<R>::zero());
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }

    // Quotient by (x − r); remainder returned through rem.
    Poly divide_linear(const R& r, R& rem) const {
        if (c_.empty()) {
            rem = ring_traits<R>::zero();
            return Poly();
        }
        std::vector<R> q(c_.size() - 1, ring_traits<R>::zero());
        R acc = ring_traits<R>::zero();
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * r + c_[i];
            if (i > 0) q[i - 1] = acc;
        }
        rem = acc;
        return Poly(std::move(q));
    }

    Poly shift_down(size_t k) const {
        if (k >= c_.size()) return Poly();
        return Poly(std::vector<R>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_traits<R>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_traits<R>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& r) {
        for (auto& x : c_) x *= r;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
    friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, ring_traits<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_traits<R>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly inverse() const {
        if (c_.size() != 1) throw not_a_unit("polynomial of positive degree or zero is not a unit");
        return Poly(ring_traits<R>::inverse(c_[0]));
    }

    std::string str(const std::string& var = "L") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (ring_traits<R>::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i] << ")";
            if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && ring_traits<R>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Q[Λ], Λ = λ⁵.
using QLambda = Poly<Rational>;

template <class R>
struct ring_traits<Poly<R>> {
    static Poly<R> zero() { return Poly<R>(); }
    static Poly<R> one() { return Poly<R>(ring_traits<R>::one()); }
    static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
    static Poly<R> inverse(const Poly<R>& p) { return p.inverse(); }
    static std::string name() {
        if constexpr (std::is_same_v<R, Rational>) return "QLambda";
        else return "Poly<" + ring_traits<R>::name() + ">";
    }
};

}  // namespace mirrorforge
