#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "mirrorforge/cohft.hpp"
#include "mirrorforge/loc.hpp"

using namespace mirrorforge;

namespace {

struct Outcome {
    bool ok;
    std::string note;
};

bool checks_pass(const Report& r, const std::string& prefix) {
    bool seen = false;
    for (auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) {
            seen = true;
            if (!c.pass) return false;
        }
    return seen;
}

std::string failure_note(const Report& r) {
    auto f = r.first_failure();
    return f ? f->check + " @ " + std::to_string(f->order) : "";
}

Outcome from_report(const Report& r) { return {r.pass(), failure_note(r)}; }

// t⁵ coefficient of e·log I_0 − (1/12)log(1 − t⁵/5⁵) − (1/2)log I_{1,1} from the hypergeometric
// recursion alone: c_{a+5} = c_a ((a+1)/5)⁵ a!/(a+5)!.
Rational t5_oracle(const Rational& e) {
    auto step = [](int a, const Rational& c) { return c * Rational(a + 1, 5).pow(5) * Rational::factorial(a) / Rational::factorial(a + 5); };
    Rational i0_5 = step(0, Rational(1));
    Rational i1_6 = step(1, Rational(1));
    Rational tau_6 = i1_6 - i0_5;  // I_1/I_0 = t + (i1_6 − i0_5) t⁶
    Rational i11_5 = tau_6 * 6;
    return e * i0_5 + Rational(1, 12) * Rational(1, 3125) - Rational(1, 2) * i11_5;
}

}  // namespace

int main() {
    // recorded before any pipeline call
    const Rational oracle_tw = t5_oracle(Rational(5, 24) - 2);
    const Rational oracle_fj = t5_oracle(Rational(-31, 3));

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"I00 I11 I22 I33 I44 = L^5 through t^30",
         [] {
             Report r = verify_ipp(30);
             return Outcome{checks_pass(r, "product "), failure_note(r)};
         }},
        {"I55 = Lambda I00 through t^20",
         [] {
             Report r = verify_ipp(20);
             return Outcome{checks_pass(r, "Lambda shift "), failure_note(r)};
         }},
        {"I_pp = I_(4-p)(4-p) through t^30",
         [] {
             Report r = verify_ipp(30);
             return Outcome{checks_pass(r, "symmetry "), failure_note(r)};
         }},
        {"Picard-Fuchs annihilation a <= 40, both theories", [] { return from_report(picard_fuchs_check(40)); }},
        {"(5^5 - t^5) club = 5 t^5 spade, d1 + d2 <= 12", [] { return from_report(verify_club_spade(12)); }},
        {"derivative identity through t^30", [] { return from_report(verify_zz_identity(30)); }},
        {"Yukawa I22/I11 = L^5/I0^2 (dt/dtau)^3 through t^30", [] { return from_report(yukawa(30).report); }},
        {"Frobenius suite at order 20", [] { return from_report(verify_frobenius(20)); }},
        {"R-matrix suite through t^25",
         [] {
             Report r = verify_flatness(25);
             r.merge(verify_diag_consistency(25));
             return from_report(r);
         }},
        {"genus-one graph formula = twisted closed form through t^30", [] { return from_report(verify_genus1(30)); }},
        {"fjrw = twisted + (-205/24) log I0 through t^30; exponent -31/3; one-point constants",
         [] {
             Report r = verify_comparison(30);
             bool ok = r.pass() && Rational(5, 24) - 2 + Rational(-205, 24) == Rational(-31, 3) &&
                       one_point_constants(Theory::fjrw) == Rational(-200, 24) &&
                       one_point_constants(Theory::twisted) == Rational(5, 24);
             return Outcome{ok, failure_note(r)};
         }},
        {"appendix suite through t^20; graph counts; TQFT values",
         [] {
             Report r = verify_appendix(20);
             bool counts = enumerate_stable_graphs(0, 3).size() == 1 && enumerate_stable_graphs(0, 4).size() == 4 &&
                           enumerate_stable_graphs(1, 1).size() == 2;
             CanonicalFrame fr = build_frame(8);
             CohFTInput id = identity_cohft(fr);
             LSeries tq = rt_omega_integral(id, 1, {phi0_frame(id.sqrt_delta_inv)}, {1});
             Rational psi = psi_integral(1, {1});
             bool tqft = psi == Rational(1, 24) && tq == LSeries::constant(LambdaLaurent(Rational(5) * psi), id.order);
             return Outcome{r.pass() && counts && tqft, failure_note(r)};
         }},
        {"localization residues 5d <= 15 both theories; tails through q^15",
         [] {
             C2Result tw = residue_check(3, Theory::twisted), fj = residue_check(3, Theory::fjrw);
             Report t = tail_extraction(15);
             bool ok = tw.report.pass() && fj.report.pass() && t.pass();
             std::string note = "constants " + tw.heart_fit.str() + ", " + tw.diamond_fit.str() + " | " + fj.heart_fit.str() + ", " +
                                fj.diamond_fit.str();
             return Outcome{ok, ok ? note : failure_note(tw.report) + failure_note(fj.report) + failure_note(t)};
         }},
        {"t^5 oracle: twisted -23/1800000, fjrw -1/28125",
         [&] {
             bool rec = oracle_tw == Rational(-23, 1800000) && oracle_fj == Rational(-1, 28125);
             RSeries tw = f1_from_formula(6), fj = f1_closed_fjrw(6);
             bool ok = rec && tw[5] == oracle_tw && fj[5] == oracle_fj;
             return Outcome{ok, "pipeline " + tw[5].str() + ", " + fj[5].str()};
         }},
    };

    int failed = 0;
    auto t_all = std::chrono::steady_clock::now();
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s (%ld ms)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms, o.note.empty() ? "" : " : ",
                    o.note.c_str());
        failed += !o.ok;
    }
    long total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t_all).count();
    std::printf("%d/%zu criteria passed in %ld ms\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed ? 1 : 0;
}
