#include "tda/witness.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tda/matching_util.hpp"

namespace tda {

InterleavingWitness witness_from_matching(const Matching& sigma, const BlockBarcode& b,
                                          const BlockBarcode& d, const Rational& eps) {
    if (eps < Rational(0)) throw input_error("interleaving shift must be nonnegative");
    if (!check_matching_block(sigma, b, d, Ext(eps)))
        throw input_error("matching is not an epsilon-matching at the given epsilon");
    // Pairs where both blocks are 2eps-trivial carry the zero morphism (the
    // composites they must realize are zero), so they are dropped; kept
    // pairs are the ones with genuine unit-scalar components.
    Ext two_eps(eps + eps);
    Matching kept;
    for (const MatchPair& pr : sigma)
        if (!(block_is_trivial(b[pr.from], two_eps) && block_is_trivial(d[pr.to], two_eps)))
            kept.push_back(pr);
    return {eps, b, d, kept};
}

namespace {

std::vector<Rational> verification_values(const InterleavingWitness& w) {
    std::vector<Rational> vals;
    auto add_block = [&](const Block& blk) {
        for (const Ext* e : {&blk.a, &blk.b}) {
            if (!e->finite()) continue;
            for (int k = -2; k <= 2; ++k)
                vals.push_back(e->value() + w.eps * Rational(k));
        }
    };
    for (const Block& blk : w.left) add_block(blk);
    for (const Block& blk : w.right) add_block(blk);
    if (vals.empty()) vals.push_back(Rational(0));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Rational> out;
    out.push_back(vals.front() - Rational(1));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out.push_back(vals[i]);
        if (i + 1 < vals.size()) out.push_back((vals[i] + vals[i + 1]) / Rational(2));
    }
    out.push_back(vals.back() + Rational(1));
    return out;
}

// Boolean tables over the grid square; cell (ix, iy) is a point of U only
// when ix <= iy, other cells stay false.
using Table = std::vector<std::vector<char>>;

Table eval_on_grid(const std::vector<Rational>& vals, const Block& blk, const Rational& dx,
                   const Rational& dy) {
    std::size_t n = vals.size();
    Table t(n, std::vector<char>(n, 0));
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = ix; iy < n; ++iy)
            t[ix][iy] = blk.contains(Ext(vals[ix] - dx), Ext(vals[iy] + dy));
    return t;
}

// dom[ix][iy]: does some cell (ux, uy) with ux >= ix, uy <= iy hold?  Those
// are exactly the points below (ix, iy) in the U order.
Table dominated_or(const Table& a) {
    std::size_t n = a.size();
    Table d(n, std::vector<char>(n, 0));
    for (std::size_t ix = n; ix-- > 0;)
        for (std::size_t iy = 0; iy < n; ++iy) {
            char v = a[ix][iy];
            if (ix + 1 < n) v |= d[ix + 1][iy];
            if (iy > 0) v |= d[ix][iy - 1];
            d[ix][iy] = v;
        }
    return d;
}

// phi^{2eps} = 0 on the block as seen from the grid: no point both in the
// block and still in it after the double shift.
bool grid_trivial(const std::vector<Rational>& vals, const Block& blk, const Rational& two_eps) {
    Table in = eval_on_grid(vals, blk, Rational(0), Rational(0));
    Table in2 = eval_on_grid(vals, blk, two_eps, two_eps);
    for (std::size_t ix = 0; ix < vals.size(); ++ix)
        for (std::size_t iy = ix; iy < vals.size(); ++iy)
            if (in[ix][iy] && in2[ix][iy]) return false;
    return true;
}

// Composite identity and naturality for the unit-scalar pair morphism
// f: I^J -> I^K(eps).  Naturality fails exactly when some u <= v in U has
// u in J, v(eps) in K and (v in J) != (u(eps) in K); both mismatch cases are
// dominance queries between the two flag sets.
bool pair_ok(const std::vector<Rational>& vals, const Block& j, const Block& k,
             const Rational& eps) {
    Rational two_eps = eps + eps;
    std::size_t n = vals.size();
    Table in_j = eval_on_grid(vals, j, Rational(0), Rational(0));
    Table in_j2 = eval_on_grid(vals, j, two_eps, two_eps);
    Table k_eps = eval_on_grid(vals, k, eps, eps);
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = ix; iy < n; ++iy)
            if (in_j[ix][iy] && in_j2[ix][iy] && !k_eps[ix][iy]) return false;
    Table a1(n, std::vector<char>(n, 0)), a2(n, std::vector<char>(n, 0));
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = ix; iy < n; ++iy) {
            a1[ix][iy] = in_j[ix][iy] && !k_eps[ix][iy];
            a2[ix][iy] = in_j[ix][iy] && k_eps[ix][iy];
        }
    Table d1 = dominated_or(a1), d2 = dominated_or(a2);
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = ix; iy < n; ++iy) {
            if (in_j[ix][iy] && k_eps[ix][iy] && d1[ix][iy]) return false;
            if (!in_j[ix][iy] && k_eps[ix][iy] && d2[ix][iy]) return false;
        }
    return true;
}

}  // namespace

bool verify_witness(const InterleavingWitness& w) {
    std::vector<bool> used_l(w.left.size(), false), used_r(w.right.size(), false);
    for (const auto& pr : w.pairs) {
        if (pr.from >= w.left.size() || pr.to >= w.right.size())
            throw input_error("witness pair index out of range");
        used_l[pr.from] = true;
        used_r[pr.to] = true;
    }
    std::vector<Rational> vals = verification_values(w);
    Rational two_eps = w.eps + w.eps;
    for (std::size_t i = 0; i < w.left.size(); ++i)
        if (!used_l[i] && !grid_trivial(vals, w.left[i], two_eps)) return false;
    for (std::size_t j = 0; j < w.right.size(); ++j)
        if (!used_r[j] && !grid_trivial(vals, w.right[j], two_eps)) return false;
    for (const auto& pr : w.pairs) {
        if (!pair_ok(vals, w.left[pr.from], w.right[pr.to], w.eps)) return false;
        if (!pair_ok(vals, w.right[pr.to], w.left[pr.from], w.eps)) return false;
    }
    return true;
}

bool block_stability_check(const BlockBarcode& b, const BlockBarcode& d, const Ext& eps) {
    auto scaled = [&](int k) {
        return eps.finite() ? Ext(eps.value() * Rational(k)) : eps;
    };
    auto required = [&](const Block& blk) {
        return !block_is_trivial(blk, blk.kind == BlockKind::o ? scaled(5) : scaled(2));
    };
    auto edge = [&](const Block& x, const Block& y) {
        return x.kind == y.kind && le_limit(gap(x.a, y.a), eps) && le_limit(gap(x.b, y.b), eps);
    };
    std::vector<std::vector<std::size_t>> adj(b.size()), radj(d.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (edge(b[i], d[j])) {
                adj[i].push_back(j);
                radj[j].push_back(i);
            }
    std::vector<std::size_t> req_b, req_d;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (required(b[i])) req_b.push_back(i);
    for (std::size_t j = 0; j < d.size(); ++j)
        if (required(d[j])) req_d.push_back(j);
    return can_saturate(adj, d.size(), req_b) && can_saturate(radj, b.size(), req_d);
}

}  // namespace tda
