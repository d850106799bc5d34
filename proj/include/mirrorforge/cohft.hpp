#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "genus1.hpp"

namespace mirrorforge {

// ---- stable graphs ----

struct StableGraph {
    std::vector<int> genus;                 // per vertex
    std::vector<std::pair<int, int>> edges;  // u <= w, loops allowed, sorted
    std::vector<int> leg_vertex;            // leg i sits on leg_vertex[i]
    long aut = 1;

    int vertices() const { return static_cast<int>(genus.size()); }
    int valence(int v) const {
        int n = 0;
        for (auto [a, b] : edges) n += (a == v) + (b == v);
        for (int x : leg_vertex) n += x == v;
        return n;
    }
    std::string str() const {
        std::ostringstream os;
        os << "V[";
        for (size_t i = 0; i < genus.size(); ++i) os << (i ? "," : "") << "g" << genus[i];
        os << "] E[";
        for (size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << edges[i].first << "-" << edges[i].second;
        os << "] L[";
        for (size_t i = 0; i < leg_vertex.size(); ++i) os << (i ? "," : "") << leg_vertex[i];
        os << "] |Aut|=" << aut;
        return os.str();
    }
};

namespace detail {

using GraphKey = std::tuple<std::vector<int>, std::vector<std::pair<int, int>>, std::vector<int>>;

inline GraphKey relabel(const StableGraph& g, const std::vector<int>& p) {
    std::vector<int> gen(g.genus.size());
    for (size_t v = 0; v < g.genus.size(); ++v) gen[static_cast<size_t>(p[v])] = g.genus[v];
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges) {
        int x = p[static_cast<size_t>(a)], y = p[static_cast<size_t>(b)];
        e.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(e.begin(), e.end());
    std::vector<int> legs;
    for (int v : g.leg_vertex) legs.push_back(p[static_cast<size_t>(v)]);
    return {gen, e, legs};
}

inline bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> comp(static_cast<size_t>(nv));
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)];
        return x;
    };
    for (auto [a, b] : edges) comp[static_cast<size_t>(find(a))] = find(b);
    for (int v = 1; v < nv; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline long factorial_long(long n) { return n <= 1 ? 1 : n * factorial_long(n - 1); }

inline long automorphisms(const StableGraph& g) {
    std::vector<int> p(static_cast<size_t>(g.vertices()));
    std::iota(p.begin(), p.end(), 0);
    GraphKey base = relabel(g, p);
    long vperm = 0;
    do {
        if (relabel(g, p) == base) ++vperm;
    } while (std::next_permutation(p.begin(), p.end()));
    long half = 1;
    for (size_t i = 0; i < g.edges.size();) {
        size_t j = i;
        while (j < g.edges.size() && g.edges[j] == g.edges[i]) ++j;
        long m = static_cast<long>(j - i);
        half *= factorial_long(m);
        if (g.edges[i].first == g.edges[i].second) half <<= m;
        i = j;
    }
    return vperm * half;
}

}  // namespace detail

inline std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
    if (g < 0 || g > 1 || n < 1 || n > 4 || 2 * g - 2 + n <= 0)
        throw unimplemented_range("stable graphs implemented for g in {0,1}, 1 <= n <= 4 with 2g-2+n > 0");
    std::vector<StableGraph> out;
    std::vector<detail::GraphKey> seen;
    for (int nv = 1; nv <= 2 * g - 2 + n; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nv; ++a)
            for (int b = a; b < nv; ++b) pairs.emplace_back(a, b);
        for (int b1 = 0; b1 <= g; ++b1) {
            int ne = nv - 1 + b1;
            // genus labels summing to g − b1
            std::vector<int> gen(static_cast<size_t>(nv), 0);
            std::vector<std::vector<int>> gens;
            std::function<void(int, int)> rec_g = [&](int v, int left) {
                if (v == nv) {
                    if (left == 0) gens.push_back(gen);
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    gen[static_cast<size_t>(v)] = x;
                    rec_g(v + 1, left - x);
                }
            };
            rec_g(0, g - b1);
            // edge multisets of size ne
            std::vector<std::vector<std::pair<int, int>>> emsets;
            std::vector<std::pair<int, int>> cur;
            std::function<void(size_t)> rec_e = [&](size_t start) {
                if (static_cast<int>(cur.size()) == ne) {
                    emsets.push_back(cur);
                    return;
                }
                for (size_t i = start; i < pairs.size(); ++i) {
                    cur.push_back(pairs[i]);
                    rec_e(i);
                    cur.pop_back();
                }
            };
            rec_e(0);
            long legmaps = 1;
            for (int i = 0; i < n; ++i) legmaps *= nv;
            for (auto& gv : gens)
                for (auto& es : emsets) {
                    if (!detail::connected(nv, es)) continue;
                    for (long code = 0; code < legmaps; ++code) {
                        StableGraph sg;
                        sg.genus = gv;
                        sg.edges = es;
                        long c = code;
                        for (int i = 0; i < n; ++i) {
                            sg.leg_vertex.push_back(static_cast<int>(c % nv));
                            c /= nv;
                        }
                        bool stable = true;
                        for (int v = 0; v < nv && stable; ++v) stable = 2 * sg.genus[static_cast<size_t>(v)] - 2 + sg.valence(v) > 0;
                        if (!stable) continue;
                        std::vector<int> p(static_cast<size_t>(nv));
                        std::iota(p.begin(), p.end(), 0);
                        detail::GraphKey best = detail::relabel(sg, p);
                        while (std::next_permutation(p.begin(), p.end())) best = std::min(best, detail::relabel(sg, p));
                        if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
                        seen.push_back(best);
                        sg.genus = std::get<0>(best);
                        sg.edges = std::get<1>(best);
                        sg.leg_vertex = std::get<2>(best);
                        sg.aut = detail::automorphisms(sg);
                        out.push_back(sg);
                    }
                }
        }
    }
    return out;
}

// ---- ψ-integrals ----

// ∫ over M̄_{g,n} of Π ψ_i^{a_i}, g ∈ {0,1}; zero off dimension.
inline Rational psi_integral(int g, const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    if (g < 0 || g > 1) throw unimplemented_range("psi_integral implemented for g <= 1");
    if (2 * g - 2 + n <= 0) return Rational(0);
    int sum = 0;
    for (int x : a) {
        if (x < 0) return Rational(0);
        sum += x;
    }
    if (sum != 3 * g - 3 + n) return Rational(0);
    if (g == 0) {
        Rational r = Rational::factorial(n - 3);
        for (int x : a) r /= Rational::factorial(x);
        return r;
    }
    if (n == 1) return Rational(1, 24);
    // string equation on a zero exponent
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0) {
            std::vector<int> rest = a;
            rest.erase(rest.begin() + static_cast<long>(i));
            Rational r(0);
            for (size_t j = 0; j < rest.size(); ++j) {
                if (rest[j] == 0) continue;
                std::vector<int> b = rest;
                --b[j];
                r += psi_integral(g, b);
            }
            return r;
        }
    // dilaton on an exponent one
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == 1) {
            std::vector<int> rest = a;
            rest.erase(rest.begin() + static_cast<long>(i));
            return Rational(2 * g - 2 + n - 1) * psi_integral(g, rest);
        }
    throw domain_error("psi_integral: unreachable exponent pattern");
}

// ---- the R·T action on the semisimple TQFT, first order in R ----

// Vectors are in the orthonormal frame te_α = Δ_α^{1/2} e_α, where η = identity and
// ω_{g,m}(v_1, …, v_m) = Σ_α Δ_α^{g−1+m/2} Π v_i^α.
struct CohFTInput {
    int order = 0;
    std::array<LSeries, 5> delta_inv, sqrt_delta, sqrt_delta_inv;
    LMatrix R1;
    LVector T1;  // R1 φ_0
};

inline LVector mat_vec(const LMatrix& m, const LVector& v) {
    int n = std::min(m[0][0].order(), v[0].order());
    LVector r = zero_vector(n);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j].truncate(n) * v[j].truncate(n);
    return r;
}

inline LVector phi0_frame(const std::array<LSeries, 5>& sqrt_delta_inv) {
    LVector v;
    for (size_t a = 0; a < 5; ++a) v[a] = sqrt_delta_inv[a];
    return v;
}

// e_β in the orthonormal frame
inline LVector idempotent_frame(const CohFTInput& in, int b) {
    LVector v = zero_vector(in.order);
    v[static_cast<size_t>(b)] = in.sqrt_delta_inv[static_cast<size_t>(b)].truncate(in.order);
    return v;
}

inline CohFTInput make_cohft_input(const CanonicalFrame& fr, const RMatrixData& rd) {
    CohFTInput in;
    in.order = rd.R1[0][0].order();
    for (size_t a = 0; a < 5; ++a) {
        in.sqrt_delta[a] = fr.sqrt_delta[a].truncate(in.order);
        in.sqrt_delta_inv[a] = in.sqrt_delta[a].inverse();
        in.delta_inv[a] = fr.delta[a].truncate(in.order).inverse();
    }
    in.R1 = rd.R1;
    in.T1 = mat_vec(in.R1, phi0_frame(in.sqrt_delta_inv));
    return in;
}

// R = identity: pure TQFT.
inline CohFTInput identity_cohft(const CanonicalFrame& fr) {
    RMatrixData rd;
    rd.R1 = zero_matrix(fr.order);
    return make_cohft_input(fr, rd);
}

struct GraphContribution {
    StableGraph graph;
    LSeries value;  // already divided by |Aut|
};

// Every surviving term has R-degree exactly dim M̄_{g,n} − Σ b_l (legs carry R_k ψ^k, edges
// R_{p+q+1}, T-insertions ψ^{m} carry degree m − 1), so degree ≤ 1 needs only R_1.
inline std::vector<GraphContribution> rt_omega_graphs(const CohFTInput& in, int g, const std::vector<LVector>& ins,
                                                      const std::vector<int>& psi) {
    int n = static_cast<int>(ins.size());
    if (static_cast<int>(psi.size()) != n) throw invalid_argument("rt_omega: one psi exponent per insertion");
    int excess = 3 * g - 3 + n;
    for (int b : psi) excess -= b;
    if (excess >= 2) throw unimplemented_range("rt_omega: needs R-matrix terms beyond first order");
    std::vector<GraphContribution> out;
    auto graphs = enumerate_stable_graphs(g, n);
    int N = in.order;
    std::vector<LVector> rins;
    for (auto& v : ins) rins.push_back(mat_vec(in.R1, v));
    for (auto& G : graphs) {
        LSeries total(N);
        if (excess >= 0 && static_cast<int>(G.edges.size()) <= excess) {
            int nv = G.vertices();
            for (int legmask = 0; legmask < (1 << n); ++legmask)
                for (int tmask = 0; tmask < (1 << nv); ++tmask) {
                    int ord = __builtin_popcount(static_cast<unsigned>(legmask)) + __builtin_popcount(static_cast<unsigned>(tmask)) +
                              static_cast<int>(G.edges.size());
                    if (ord > excess) continue;
                    // ψ-integrals per vertex
                    Rational coef(1);
                    for (int v = 0; v < nv && !coef.is_zero(); ++v) {
                        std::vector<int> ex;
                        for (int l = 0; l < n; ++l)
                            if (G.leg_vertex[static_cast<size_t>(l)] == v) ex.push_back(psi[static_cast<size_t>(l)] + ((legmask >> l) & 1));
                        for (auto [a, b] : G.edges) {
                            if (a == v) ex.push_back(0);
                            if (b == v) ex.push_back(0);
                        }
                        if ((tmask >> v) & 1) ex.push_back(2);
                        coef *= psi_integral(G.genus[static_cast<size_t>(v)], ex);
                    }
                    if (coef.is_zero()) continue;
                    if (ord != excess) throw domain_error("rt_omega: dimension count inconsistent");
                    coef /= Rational(G.aut);
                    // sum over frame indices per vertex
                    std::vector<int> al(static_cast<size_t>(nv), 0);
                    long combos = 1;
                    for (int v = 0; v < nv; ++v) combos *= 5;
                    for (long c = 0; c < combos; ++c) {
                        long cc = c;
                        for (int v = 0; v < nv; ++v) {
                            al[static_cast<size_t>(v)] = static_cast<int>(cc % 5);
                            cc /= 5;
                        }
                        LSeries term = LSeries::one(N);
                        for (int v = 0; v < nv; ++v) {
                            size_t a = static_cast<size_t>(al[static_cast<size_t>(v)]);
                            int m = G.valence(v) + ((tmask >> v) & 1);
                            if (G.genus[static_cast<size_t>(v)] == 0) term *= in.delta_inv[a];
                            for (int i = 0; i < m; ++i) term *= in.sqrt_delta[a];
                            if ((tmask >> v) & 1) term *= in.T1[a];
                        }
                        for (int l = 0; l < n && !term.is_zero(); ++l) {
                            size_t a = static_cast<size_t>(al[static_cast<size_t>(G.leg_vertex[static_cast<size_t>(l)])]);
                            term *= ((legmask >> l) & 1) ? -rins[static_cast<size_t>(l)][a] : ins[static_cast<size_t>(l)][a];
                        }
                        for (auto [u, w] : G.edges) {
                            if (term.is_zero()) break;
                            term *= in.R1[static_cast<size_t>(al[static_cast<size_t>(u)])][static_cast<size_t>(al[static_cast<size_t>(w)])];
                        }
                        if (!term.is_zero()) total += term.truncate(N) * coef;
                    }
                }
        }
        out.push_back({G, total});
    }
    return out;
}

inline LSeries rt_omega_integral(const CohFTInput& in, int g, const std::vector<LVector>& ins, const std::vector<int>& psi) {
    LSeries s(in.order);
    for (auto& c : rt_omega_graphs(in, g, ins, psi)) s += c.value;
    return s;
}

// ---- appendix checks ----

// η(R1 φ_0, e^β) − Σ_α η(R1 e_β, e^α), evaluated in the φ-basis.
inline LSeries appendix_bracket(const CanonicalFrame& fr, const RMatrixData& rd, int b) {
    int N = rd.R1[0][0].order();
    std::array<LVector, 5> te;  // φ-coordinates of Δ^{1/2} e_α
    for (size_t a = 0; a < 5; ++a)
        for (size_t i = 0; i < 5; ++i) te[a][i] = (fr.e[a][i] * fr.sqrt_delta[a]).truncate(N);
    auto apply_r1 = [&](const LVector& x) {
        std::array<LSeries, 5> cf;
        for (size_t a = 0; a < 5; ++a) cf[a] = pair(fr.eta, x, te[a]);
        LVector r = zero_vector(N);
        for (size_t a = 0; a < 5; ++a) {
            LSeries s(N);
            for (size_t c = 0; c < 5; ++c) s += rd.R1[a][c] * cf[c];
            for (size_t i = 0; i < 5; ++i) r[i] += s * te[a][i];
        }
        return r;
    };
    auto dual = [&](int a) {
        LVector v;
        for (size_t i = 0; i < 5; ++i) v[i] = (fr.e[static_cast<size_t>(a)][i] * fr.delta[static_cast<size_t>(a)]).truncate(N);
        return v;
    };
    LVector phi0 = truncate(basis_vector(0, fr.order), N);
    LSeries r = pair(fr.eta, apply_r1(phi0), dual(b));
    LVector reb = apply_r1(truncate(fr.e[static_cast<size_t>(b)], N));
    for (int a = 0; a < 5; ++a) r -= pair(fr.eta, reb, dual(a));
    return r;
}

inline int appendix_frame_order(int n) { return n + 2; }

inline Report verify_appendix(int n, const CConstants& C = default_c()) {
    return timed_suite("appendix", [&](Report& rep) {
        CanonicalFrame fr = build_frame(appendix_frame_order(n));
        RMatrixData rd = build_r1(fr, C);
        CohFTInput in = make_cohft_input(fr, rd);
        int N = in.order;
        LSeries i11inv = lift_l(fr.I11.truncate(N).inverse());

        std::array<LSeries, 5> omega11;
        bool ok = true;
        for (int b = 0; b < 5; ++b) {
            omega11[b] = rt_omega_integral(in, 1, {idempotent_frame(in, b)}, {0});
            LSeries rhs = rd.R1[b][b] * Rational(1, 2) + appendix_bracket(fr, rd, b) * Rational(1, 24);
            auto c = compare_series("one-point beta=" + std::to_string(b), omega11[b], rhs, n);
            if (!c.pass && ok) {
                rep.add(c);
                ok = false;
            }
        }
        if (ok) rep.add("genus-one one-point graph sum", true);

        std::array<std::array<LSeries, 5>, 5> omega04;  // [α][β]
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                LVector ea = idempotent_frame(in, a), eb = idempotent_frame(in, b);
                omega04[a][b] = rt_omega_integral(in, 0, {ea, ea, ea, eb}, {0, 0, 0, 0});
            }
        ok = true;
        for (int b = 0; b < 5 && ok; ++b) {
            LSeries lhs(N);
            for (int a = 0; a < 5; ++a) lhs += fr.delta[a].truncate(N) * omega04[a][b];
            auto c = compare_series("four-point beta=" + std::to_string(b), lhs, appendix_bracket(fr, rd, b), n);
            if (!c.pass) {
                rep.add(c);
                ok = false;
            }
        }
        if (ok) rep.add("genus-zero four-point graph sum", true);

        ok = true;
        for (int a = 0; a < 5 && ok; ++a) {
            LSeries lhs(N);
            for (int b = 0; b < 5; ++b) lhs += du_alpha(fr, b, N) * i11inv * omega04[a][b];
            LSeries rhs = derivative(fr.delta[a].truncate(N + 1).inverse()) * i11inv * Rational(-1, 2);
            auto c = compare_series("Delta derivative alpha=" + std::to_string(a), lhs, rhs, n);
            if (!c.pass) {
                rep.add(c);
                ok = false;
            }
        }
        if (ok) rep.add("tau-directional derivative of Delta^-1", true);

        LSeries main(N);
        for (int b = 0; b < 5; ++b) main += du_alpha(fr, b, N) * i11inv * omega11[b];
        RSeries f1 = f1_from_frame(fr, C);
        RSeries want = derivative(f1).truncate(N) / fr.I11.truncate(N);
        rep.add(compare_series("sum du^b/dtau int Omega_11(e_b) = dF1/dtau", main, lift_l(want), n));

        // R = identity sanity
        CohFTInput id = identity_cohft(fr);
        LSeries tq = rt_omega_integral(id, 1, {phi0_frame(id.sqrt_delta_inv)}, {1});
        rep.add(compare_series("TQFT: int Omega_11(phi_0) psi = 5/24", tq, LSeries::constant(LambdaLaurent(Rational(5, 24)), id.order), n));
    });
}

}  // namespace mirrorforge
