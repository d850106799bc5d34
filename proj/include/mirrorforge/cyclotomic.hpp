#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "rational.hpp"

namespace mirrorforge {

// Element of Q(ξ), ξ a primitive 5th root of unity, in the basis 1, ξ, ξ², ξ³.
class Cyc {
public:
    Cyc() = default;
    Cyc(const Rational& r) { c_[0] = r; }  // NOLINT
    Cyc(long n) { c_[0] = Rational(n); }   // NOLINT
    Cyc(int n) { c_[0] = Rational(n); }    // NOLINT
    explicit Cyc(const std::array<Rational, 4>& c) : c_(c) {}

    static Cyc xi_pow(long k) {
        std::array<Rational, 5> e{};
        e[static_cast<size_t>(((k % 5) + 5) % 5)] = Rational(1);
        return reduce(e);
    }

    const Rational& operator[](size_t i) const { return c_[i]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    // Galois conjugate ξ ↦ ξ^k, k coprime to 5.
    Cyc conj(int k) const {
        std::array<Rational, 5> e{};
        for (int i = 0; i < 4; ++i) e[static_cast<size_t>((i * k % 5 + 5) % 5)] += c_[static_cast<size_t>(i)];
        return reduce(e);
    }

    Rational norm() const {
        Cyc p = *this * conj(2) * conj(3) * conj(4);
        return p.c_[0];
    }

    Cyc inverse() const {
        if (is_zero()) throw division_by_zero();
        Cyc rest = conj(2) * conj(3) * conj(4);
        Rational n = (*this * rest).c_[0];
        return rest * n.inverse();
    }

    Cyc& operator+=(const Cyc& o) {
        for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyc& operator-=(const Cyc& o) {
        for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyc& operator*=(const Rational& r) {
        for (auto& x : c_) x *= r;
        return *this;
    }
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator-(const Cyc& a) {
        Cyc r;
        for (size_t i = 0; i < 4; ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend Cyc operator*(Cyc a, const Rational& r) { return a *= r; }
    friend Cyc operator*(const Rational& r, Cyc a) { return a *= r; }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        std::array<Rational, 5> e{};
        for (size_t i = 0; i < 4; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < 4; ++j) {
                if (b.c_[j].is_zero()) continue;
                e[(i + j) % 5] += a.c_[i] * b.c_[j];
            }
        }
        return reduce(e);
    }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < 4; ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << c_[i];
            } else {
                if (!c_[i].is_one()) os << c_[i] << "*";
                os << "xi";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

private:
    // Coefficients of 1..ξ⁴ reduced with ξ⁴ = −(1 + ξ + ξ² + ξ³).
    static Cyc reduce(const std::array<Rational, 5>& e) {
        Cyc r;
        for (size_t i = 0; i < 4; ++i) r.c_[i] = e[i] - e[4];
        return r;
    }

    std::array<Rational, 4> c_{};
};

inline Cyc xi(long k = 1) { return Cyc::xi_pow(k); }

// ξ^{n/2} with the in-group square root ξ^{1/2} := ξ³.
inline Cyc zeta_half_power(long n) { return Cyc::xi_pow(3 * n); }

}  // namespace mirrorforge
