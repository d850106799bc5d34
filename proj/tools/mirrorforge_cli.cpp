#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "mirrorforge/encode.hpp"

using namespace mirrorforge;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int order = 30;
    std::optional<int> kmax, dmax;
    std::string theory = "both";
    std::string format;
    std::string out;
    unsigned jobs = 0;
    std::vector<std::string> suites;
};

std::vector<Theory> theories(const std::string& s) {
    if (s == "both") return {Theory::twisted, Theory::fjrw};
    if (s == "twisted" || s == "lambda") return {Theory::twisted};
    if (s == "fjrw" || s == "w") return {Theory::fjrw};
    throw UsageError("unknown theory '" + s + "'");
}

Theory single_theory(const std::string& s) {
    auto t = theories(s == "both" ? "twisted" : s);
    return t.front();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open " + cfg.out);
    f << text;
}

// ---- verify ----

using SuiteFn = std::function<Report(const RunConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"ipp", [](const RunConfig& c) { return verify_ipp(c.order); }},
        {"zz", [](const RunConfig& c) { return verify_zz_identity(c.order); }},
        {"clubspade", [](const RunConfig& c) { return verify_club_spade(c.dmax.value_or(12)); }},
        {"pf", [](const RunConfig& c) { return picard_fuchs_check(c.order); }},
        {"yukawa", [](const RunConfig& c) { return yukawa(c.order).report; }},
        {"frobenius", [](const RunConfig& c) { return verify_frobenius(c.order); }},
        {"rmatrix",
         [](const RunConfig& c) {
             return timed_suite("rmatrix", [&](Report& r) {
                 r.merge(verify_flatness(c.order));
                 r.merge(verify_diag_consistency(c.order));
             });
         }},
        {"genus1", [](const RunConfig& c) { return verify_genus1(c.order); }},
        {"appendix", [](const RunConfig& c) { return verify_appendix(c.order); }},
        {"residues",
         [](const RunConfig& c) {
             return timed_suite("residues", [&](Report& r) {
                 for (Theory th : theories(c.theory)) {
                     Report x = residue_check_C2(c.dmax.value_or(3), th);
                     r.merge(x, theory_name(th) + ": ");
                     r.details[theory_name(th)] = x.details;
                 }
             });
         }},
        {"tails", [](const RunConfig& c) { return tail_extraction(c.order); }},
    };
    return table;
}

std::string status_line(const Report& r) {
    std::ostringstream os;
    os << (r.pass() ? "PASS " : "FAIL ") << r.suite << " (" << r.elapsed_ms << " ms)";
    if (auto f = r.first_failure()) os << ": " << f->check << " at order " << f->order << ": " << f->lhs << " != " << f->rhs;
    return os.str();
}

int cmd_verify(RunConfig cfg) {
    if (cfg.order < 6) throw UsageError("verify needs --order >= 6");
    std::vector<std::string> names;
    for (auto& s : cfg.suites) {
        if (s == "all") {
            for (auto& [n, f] : suite_table()) names.push_back(n);
            continue;
        }
        bool known = false;
        for (auto& [n, f] : suite_table()) known |= n == s;
        if (!known) throw UsageError("unknown suite '" + s + "'");
        names.push_back(s);
    }
    if (names.empty()) throw UsageError("no suites given");
    (void)theories(cfg.theory);

    std::vector<std::optional<Report>> results(names.size());
    std::vector<std::exception_ptr> errors(names.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < names.size();) {
            try {
                for (auto& [n, f] : suite_table())
                    if (n == names[i]) results[i] = f(cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(names.size()));
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    bool ok = true;
    std::ostringstream os;
    if (cfg.format == "json") {
        json a = json::array();
        for (auto& r : results) a.push_back(r->to_json());
        os << a.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "suite,status,elapsed_ms,first_failure_check,first_failure_order\n";
        for (auto& r : results) {
            auto f = r->first_failure();
            os << r->suite << "," << (r->pass() ? "pass" : "fail") << "," << r->elapsed_ms << "," << (f ? "\"" + f->check + "\"" : "")
               << "," << (f ? std::to_string(f->order) : "") << "\n";
        }
    } else {
        for (auto& r : results) os << status_line(*r) << "\n";
    }
    for (auto& r : results) ok &= r->pass();
    emit(cfg, os.str());
    return ok ? kPass : kFail;
}

// ---- compute ----

template <class R>
std::string render_series(const RunConfig& cfg, const TruncatedSeries<R>& s, const std::string& target) {
    if (cfg.format == "csv") return to_csv(s);
    if (cfg.format == "text") return s.str() + "\n";
    json j = to_json(s);
    j["target"] = target;
    return j.dump(2) + "\n";
}

int cmd_compute(const std::string& target, const RunConfig& cfg) {
    int n = cfg.order;
    if (n < 0) throw UsageError("--order must be >= 0");
    Theory th = single_theory(cfg.theory);
    auto multi = [&](json j) {
        if (cfg.format == "csv") throw UsageError("csv output is only available for single rational series");
        j["target"] = target;
        return j.dump(2) + "\n";
    };
    std::string out;
    if (target == "i0") out = render_series(cfg, i_component(0, n), target);
    else if (target == "i1") out = render_series(cfg, i_component(1, n), target);
    else if (target == "tau") out = render_series(cfg, mirror_map(n), target);
    else if (target == "L") out = render_series(cfg, l_series(n), target);
    else if (target == "f" || target == "g") {
        BirkhoffTable b = ipq_table(4, 4, n + 4, th);
        int p = target == "f" ? 2 : 4;
        out = render_series(cfg, (b.rational(p, p).truncate(n) / b.rational(1, 1).truncate(n)), target);
    } else if (target == "yukawa") out = render_series(cfg, yukawa(n).y, target);
    else if (target == "f1") out = render_series(cfg, th == Theory::twisted ? f1_from_formula(n) : f1_closed_fjrw(n), target);
    else if (target == "delta") {
        CanonicalFrame fr = build_frame(n);
        json a = json::array();
        for (auto& d : fr.delta) a.push_back(to_json(d));
        out = multi({{"delta", a}});
    } else if (target == "r1") {
        CanonicalFrame fr = build_frame(rmat_frame_order(n));
        RMatrixData rd = build_r1(fr);
        LMatrix m;
        for (size_t a = 0; a < 5; ++a)
            for (size_t b = 0; b < 5; ++b) m[a][b] = rd.R1[a][b].truncate(n);
        out = multi({{"R1", to_json(m)}});
    } else {
        throw UsageError("unknown compute target '" + target + "'");
    }
    emit(cfg, out);
    return kPass;
}

// ---- dump ----

int cmd_dump(const std::string& what, const RunConfig& cfg, int g, int nlegs) {
    int n = cfg.order;
    json j;
    if (what == "frame") {
        CanonicalFrame fr = build_frame(n);
        j["f"] = to_json((fr.I22 / fr.I11.truncate(fr.I22.order())).truncate(n));
        j["g"] = to_json((fr.I44 / fr.I11.truncate(fr.I44.order())).truncate(n));
        j["u"] = to_json(fr.u);
        json d = json::array(), c = json::array();
        for (auto& x : fr.delta) d.push_back(to_json(x));
        for (int k = -1; k <= 4; ++k) c.push_back(to_json(fr.cj(k)));
        j["delta"] = d;
        j["c"] = c;  // c_{-1} .. c_4
        j["psi"] = to_json(fr.psi);
    } else if (what == "rmatrix") {
        CanonicalFrame fr = build_frame(rmat_frame_order(n));
        RMatrixData rd = build_r1(fr);
        LMatrix m;
        for (size_t a = 0; a < 5; ++a)
            for (size_t b = 0; b < 5; ++b) m[a][b] = rd.R1[a][b].truncate(n);
        j["R1"] = to_json(m);
        json cs = json::array();
        for (auto& x : rd.C) cs.push_back(to_json(x));
        j["C"] = cs;
    } else if (what == "graphs") {
        json a = json::array();
        for (auto& G : enumerate_stable_graphs(g, nlegs)) a.push_back(to_json(G));
        j = {{"g", g}, {"n", nlegs}, {"graphs", a}};
    } else {
        throw UsageError("unknown dump target '" + what + "'");
    }
    j["what"] = what;
    j["order"] = n;
    emit(cfg, j.dump(2) + "\n");
    return kPass;
}

// ---- cohft-demo ----

int cmd_cohft_demo(const RunConfig& cfg) {
    CanonicalFrame fr = build_frame(appendix_frame_order(cfg.order));
    RMatrixData rd = build_r1(fr);
    CohFTInput in = make_cohft_input(fr, rd);
    json out = json::array();
    for (auto [g, nl] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}}) {
        std::vector<LVector> ins(static_cast<size_t>(nl), idempotent_frame(in, 0));
        std::vector<int> psi(static_cast<size_t>(nl), 0);
        json gs = json::array();
        for (auto& c : rt_omega_graphs(in, g, ins, psi)) gs.push_back({{"graph", to_json(c.graph)}, {"value", to_json(c.value.truncate(cfg.order))}});
        out.push_back({{"g", g}, {"n", nl}, {"insertion", "e_0"}, {"contributions", gs}});
    }
    emit(cfg, out.dump(2) + "\n");
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirrorforge: exact series, Frobenius and R-matrix checks for the quintic"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("MIRRORFORGE_ORDER")) {
        try {
            cfg.order = std::stoi(env);
        } catch (...) {
            std::cerr << "error: MIRRORFORGE_ORDER is not an integer\n";
            return kUsage;
        }
    }
    auto common = [&](CLI::App* s) {
        s->add_option("--order", cfg.order, "truncation order in t");
        s->add_option("--kmax", cfg.kmax, "z-degree bound");
        s->add_option("--dmax", cfg.dmax, "degree bound for clubspade / residues");
        s->add_option("--theory", cfg.theory, "twisted|fjrw|both (also lambda|w)");
        s->add_option("--format", cfg.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("--out", cfg.out, "write output to a file");
        s->add_option("--jobs", cfg.jobs, "parallel suites");
    };

    std::string target, what;
    std::vector<std::string> positional_suites;
    int g = 0, nlegs = 1;
    auto* compute = app.add_subcommand("compute", "print a series");
    compute->add_option("target", target, "i0|i1|tau|L|f|g|yukawa|delta|r1|f1")->required();
    common(compute);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("names", positional_suites, "suite names or all");
    verify->add_option("--suites", cfg.suites, "comma-separated suite names")->delimiter(',');
    common(verify);
    auto* dump = app.add_subcommand("dump", "emit an artifact as JSON");
    dump->add_option("what", what, "frame|rmatrix|graphs")->required();
    dump->add_option("--g", g, "genus for graphs");
    dump->add_option("--n", nlegs, "number of legs for graphs");
    common(dump);
    auto* demo = app.add_subcommand("cohft-demo", "per-graph contributions of the R-matrix action");
    common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kPass : kUsage;
    }
    try {
        if (compute->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_compute(target, cfg);
        }
        if (verify->parsed()) {
            if (cfg.format.empty()) cfg.format = "text";
            cfg.suites.insert(cfg.suites.begin(), positional_suites.begin(), positional_suites.end());
            return cmd_verify(cfg);
        }
        if (dump->parsed()) return cmd_dump(what, cfg, g, nlegs);
        if (demo->parsed()) return cmd_cohft_demo(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const mirrorforge::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const mirrorforge::unimplemented_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
