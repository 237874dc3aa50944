#pragma once
// Shared oracles and generators for the test suite.  The bottleneck oracles
// here enumerate all partial bijections directly, so they are independent of
// the saturation-based feasibility used by the library.

#include <functional>
#include <random>
#include <vector>

#include "tda/blocks.hpp"
#include "tda/intervals.hpp"
#include "tda/levelset.hpp"
#include "tda/zigzag.hpp"

namespace testutil {

using namespace tda;

// Same infimum semantics as the library scan, reimplemented locally: probe
// each candidate and a point inside the gap to the next one.
inline Ext inf_scan(std::vector<Rational> cands, const std::function<bool(const Ext&)>& feas) {
    cands.push_back(Rational(0));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (feas(Ext(cands[i]))) return Ext(cands[i]);
        Rational probe = i + 1 < cands.size()
                             ? cands[i] + (cands[i + 1] - cands[i]) / Rational(2)
                             : cands[i] + Rational(1);
        if (feas(Ext(probe))) return Ext(cands[i]);
    }
    return Ext::pos_inf();
}

// All partial bijections between index sets of sizes ns and nt.
inline void enumerate_partial(std::size_t ns, std::size_t nt,
                              const std::function<void(const Matching&)>& visit) {
    Matching cur;
    std::vector<bool> used(nt, false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ns) {
            visit(cur);
            return;
        }
        rec(i + 1);  // leave i unmatched
        for (std::size_t j = 0; j < nt; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.push_back({i, j});
            rec(i + 1);
            cur.pop_back();
            used[j] = false;
        }
    };
    rec(0);
}

inline Ext brute_bottleneck_1d(const Barcode1D& c, const Barcode1D& d) {
    std::vector<Rational> cands;
    auto push_gap = [&](const Ext& a, const Ext& b) {
        Ext g = gap(a, b);
        if (g.finite()) cands.push_back(g.value());
    };
    for (const auto& x : c)
        for (const auto& y : d) {
            push_gap(x.left.v, y.left.v);
            push_gap(x.right.v, y.right.v);
        }
    for (const auto& bc : {c, d})
        for (const auto& x : bc) {
            Ext len = x.length();
            if (len.finite()) cands.push_back(len.value() / Rational(2));
        }
    Ext best = Ext::pos_inf();
    enumerate_partial(c.size(), d.size(), [&](const Matching& sigma) {
        Ext t = inf_scan(cands, [&](const Ext& eps) {
            return check_matching_1d(sigma, c, d, eps);
        });
        if (t < best) best = t;
    });
    return best;
}

inline Ext brute_bottleneck_block(const BlockBarcode& c, const BlockBarcode& d) {
    std::vector<Rational> cands;
    auto push_gap = [&](const Ext& a, const Ext& b) {
        Ext g = gap(a, b);
        if (g.finite()) cands.push_back(g.value());
    };
    for (const auto& x : c)
        for (const auto& y : d) {
            push_gap(x.a, y.a);
            push_gap(x.b, y.b);
        }
    for (const auto& bc : {c, d})
        for (const auto& x : bc) {
            Ext s = x.span();
            if (!s.finite()) continue;
            cands.push_back(s.value() / Rational(2));
            cands.push_back(s.value() / Rational(4));
        }
    Ext best = Ext::pos_inf();
    enumerate_partial(c.size(), d.size(), [&](const Matching& sigma) {
        Ext t = inf_scan(cands, [&](const Ext& eps) {
            return check_matching_block(sigma, c, d, eps);
        });
        if (t < best) best = t;
    });
    return best;
}

inline Rational rand_rational(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo * 4, hi * 4);
    return Rational(num(rng), 4);
}

inline Interval1D rand_interval(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    int k = kind(rng);
    Rational a = rand_rational(rng, -6, 6);
    Rational b = a + rand_rational(rng, 0, 5).abs();
    Ext ea(a), eb(b);
    bool lc = kind(rng) % 2 == 0, rc = kind(rng) % 2 == 0;
    if (k == 0) {
        ea = Ext::neg_inf();
        lc = false;
    }
    if (k == 1) {
        eb = Ext::pos_inf();
        rc = false;
    }
    if (ea == eb) lc = rc = true;
    if (ea.finite() && eb.finite() && ea == eb) return Interval1D::closed(ea, eb);
    if (!lc && !rc && ea == eb) return Interval1D::closed(ea, eb);
    return Interval1D({ea, lc}, {eb, rc});
}

inline Block rand_block(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    int k = kind(rng);
    Rational a = rand_rational(rng, -6, 6);
    Rational b = a + rand_rational(rng, 0, 5).abs() + Rational(1, 4);
    switch (k) {
        case 0: return Block(BlockKind::o, Ext(a), Ext(b));
        case 1: return Block(BlockKind::co, Ext(a), Ext(b));
        case 2: return Block(BlockKind::oc, Ext(a), Ext(b));
        case 3: return Block(BlockKind::c, Ext(a), Ext(b));
        default: return Block(BlockKind::c, Ext(b), Ext(a));  // switched
    }
}

inline PLGraph curve_graph() {
    PLGraph g;
    g.ids = {0, 1, 2, 3, 4};
    g.values = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
    g.edges = {{0, 2}, {2, 3}, {1, 2}, {2, 4}, {1, 3}};
    return g;
}

inline PLGraph diamond_graph() {
    PLGraph g;
    g.ids = {0, 1, 2, 3};
    g.values = {Rational(0), Rational(1), Rational(2), Rational(1)};
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return g;
}

inline PLGraph edge_graph() {
    PLGraph g;
    g.ids = {0, 1};
    g.values = {Rational(0), Rational(1)};
    g.edges = {{0, 1}};
    return g;
}

// Random connected-ish graph with edge-distinct values.
inline PLGraph rand_graph(std::mt19937_64& rng, std::size_t nv, std::size_t extra_edges) {
    PLGraph g;
    std::uniform_int_distribution<int> val(-12, 12);
    for (std::size_t v = 0; v < nv; ++v) {
        g.ids.push_back((long long)v);
        g.values.push_back(Rational(val(rng), 2));
    }
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    for (std::size_t v = 1; v < nv; ++v) {
        std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        g.edges.emplace_back(u, v);
    }
    for (std::size_t e = 0; e < extra_edges; ++e) {
        std::size_t u = pick(rng), v = pick(rng);
        if (u != v) g.edges.emplace_back(u, v);
    }
    // nudge values until every edge is value-distinct
    for (int rounds = 0; rounds < 64; ++rounds) {
        bool ok = true;
        for (auto [u, v] : g.edges)
            if (g.values[u] == g.values[v]) {
                g.values[v] += Rational(1, 3 + (int)(v % 5));
                ok = false;
            }
        if (ok) break;
    }
    return g;
}

inline std::vector<Dir> alternating(std::size_t n, bool first_fwd) {
    std::vector<Dir> o;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        bool fwd = (i % 2 == 0) == first_fwd;
        o.push_back(fwd ? Dir::fwd : Dir::bwd);
    }
    return o;
}

inline std::vector<Dir> rand_orientation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Dir> o;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) o.push_back(coin(rng) ? Dir::fwd : Dir::bwd);
    return o;
}

inline ZigzagBarcode rand_bars(std::mt19937_64& rng, std::size_t n, std::size_t max_bars) {
    ZigzagBarcode bars;
    std::uniform_int_distribution<std::size_t> cnt(0, max_bars);
    std::uniform_int_distribution<std::size_t> pos(1, n);
    std::size_t k = cnt(rng);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t a = pos(rng), b = pos(rng);
        bars.push_back({std::min(a, b), std::max(a, b)});
    }
    return bars;
}

inline ZigzagModule module_from_bars(const ZigzagBarcode& bars, std::size_t n,
                                     const std::vector<Dir>& orientation, std::uint32_t p) {
    if (bars.empty()) {
        ZigzagModule z;
        z.field = p;
        z.dims.assign(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) z.arrows.push_back({orientation[i], Matrix(0, 0, p)});
        return z;
    }
    std::vector<ZigzagModule> parts;
    for (const auto& b : bars) parts.push_back(interval_module_zz(b, n, orientation, p));
    return direct_sum(parts);
}

}  // namespace testutil
