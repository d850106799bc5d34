#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "cohft.hpp"
#include "loc.hpp"

namespace mirrorforge {

using nlohmann::json;

inline json to_json(const Rational& r) { return {{"n", r.num_str()}, {"d", r.den_str()}}; }

inline json to_json(const Cyc& c) {
    json a = json::array();
    for (auto& x : c.coeffs()) a.push_back(to_json(x));
    return a;
}

inline json to_json(const LambdaLaurent& l) {
    json a = json::array();
    for (auto& [h, c] : l.terms()) a.push_back({{"halfexp", h}, {"c", to_json(c)}});
    return a;
}

// Q[Λ] as its coefficient list in Λ
inline json to_json(const QLambda& p) {
    json a = json::array();
    for (auto& x : p.coeffs()) a.push_back(to_json(x));
    return a;
}

template <class R>
json to_json(const TruncatedSeries<R>& s) {
    json c = json::array();
    for (int k = 0; k <= s.order(); ++k) c.push_back(to_json(s[k]));
    return {{"var", s.var()}, {"order", s.order()}, {"ring", ring_traits<R>::name()}, {"coeffs", c}};
}

// exponent,coefficient rows; zero coefficients skipped
template <class R>
std::string to_csv(const TruncatedSeries<R>& s) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (int k = 0; k <= s.order(); ++k)
        if (!ring_traits<R>::is_zero(s[k])) os << k << "," << coeff_str(s[k]) << "\n";
    return os.str();
}

inline json to_json(const LMatrix& m) {
    json rows = json::array();
    for (auto& r : m) {
        json row = json::array();
        for (auto& e : r) row.push_back(to_json(e));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const StableGraph& g) {
    json e = json::array();
    for (auto [a, b] : g.edges) e.push_back({a, b});
    return {{"genus", g.genus}, {"edges", e}, {"legs", g.leg_vertex}, {"aut", g.aut}, {"str", g.str()}};
}

}  // namespace mirrorforge
