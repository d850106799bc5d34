#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace mirrorforge {

// Arbitrary precision rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw division_by_zero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "n" or "n/d".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw invalid_argument("not a rational: " + s);
        if (q.get_den() == 0) throw division_by_zero();
        q.canonicalize();
        return Rational(q);
    }

    static Rational factorial(long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        return Rational(f);
    }

    const mpq_class& mpq() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1) / v_);
    }

    // Integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }

    // floor and fractional part, used for sector bookkeeping.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return r;
    }
    Rational frac() const { return *this - Rational(floor()); }

    // Exact square root when the value is a square of a rational.
    bool perfect_square_root(Rational& out) const {
        if (sign() < 0) return false;
        if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t())) return false;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
        out = Rational(mpq_class(n, d));
        return true;
    }

    long to_long() const {
        if (!is_integer()) throw domain_error("not an integer: " + str());
        return v_.get_num().get_si();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational operator""_q(unsigned long long n) { return Rational(static_cast<long>(n)); }

}  // namespace mirrorforge
