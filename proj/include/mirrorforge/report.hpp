#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "series.hpp"

namespace mirrorforge {

struct Failure {
    std::string check;
    int order = -1;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<Failure> failure;
};

// Outcome of one verification suite.
struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    nlohmann::json details = nlohmann::json::object();
    long elapsed_ms = 0;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::optional<Failure> first_failure() const {
        for (auto& c : checks)
            if (!c.pass) return c.failure;
        return std::nullopt;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const std::string& name, bool ok, const std::string& lhs = "", const std::string& rhs = "", int order = -1) {
        CheckResult c{name, ok, std::nullopt};
        if (!ok) c.failure = Failure{name, order, lhs, rhs};
        checks.push_back(std::move(c));
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (auto c : o.checks) {
            c.name = prefix + c.name;
            if (c.failure) c.failure->check = c.name;
            checks.push_back(std::move(c));
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["status"] = pass() ? "pass" : "fail";
        if (auto f = first_failure()) {
            j["first_failure"] = {{"check", f->check}, {"order", f->order}, {"lhs", f->lhs}, {"rhs", f->rhs}};
        } else {
            j["first_failure"] = nullptr;
        }
        j["elapsed_ms"] = elapsed_ms;
        nlohmann::json cs = nlohmann::json::array();
        for (auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}});
        j["checks"] = cs;
        if (!details.empty()) j["details"] = details;
        return j;
    }
};

template <class R>
std::string coeff_str(const R& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Coefficient-wise comparison through t^n; records the first differing exponent.
template <class R>
CheckResult compare_series(const std::string& name, const TruncatedSeries<R>& a, const TruncatedSeries<R>& b, int n) {
    if (a.order() < n || b.order() < n)
        return {name, false, Failure{name, std::min(a.order(), b.order()) + 1, "order too small", "order too small"}};
    for (int k = 0; k <= n; ++k) {
        if (!(a[k] == b[k])) return {name, false, Failure{name, k, coeff_str(a[k]), coeff_str(b[k])}};
    }
    return {name, true, std::nullopt};
}

template <class R>
CheckResult expect_zero_series(const std::string& name, const TruncatedSeries<R>& a, int n) {
    return compare_series(name, a, TruncatedSeries<R>(a.order(), a.var()), n);
}

// Runs body(report) and stamps elapsed time.
template <class F>
Report timed_suite(const std::string& suite, F&& body) {
    Report r;
    r.suite = suite;
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace mirrorforge
