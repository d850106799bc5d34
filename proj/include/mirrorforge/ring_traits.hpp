#pragma once

#include <string>

#include "lambda_laurent.hpp"

namespace mirrorforge {

// Coefficient-ring interface used by the series and polynomial templates.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational inverse(const Rational& x) {
        if (x.is_zero()) throw not_a_unit("zero is not a unit");
        return x.inverse();
    }
    static std::string name() { return "Rational"; }
};

template <>
struct ring_traits<Cyc> {
    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(1); }
    static bool is_zero(const Cyc& x) { return x.is_zero(); }
    static Cyc inverse(const Cyc& x) {
        if (x.is_zero()) throw not_a_unit("zero is not a unit");
        return x.inverse();
    }
    static std::string name() { return "Cyc"; }
};

template <>
struct ring_traits<LambdaLaurent> {
    static LambdaLaurent zero() { return LambdaLaurent(); }
    static LambdaLaurent one() { return LambdaLaurent(1); }
    static bool is_zero(const LambdaLaurent& x) { return x.is_zero(); }
    static LambdaLaurent inverse(const LambdaLaurent& x) {
        if (x.is_zero()) throw not_a_unit("zero is not a unit");
        return x.inverse();
    }
    static std::string name() { return "LambdaLaurent"; }
};

}  // namespace mirrorforge
