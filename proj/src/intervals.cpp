#include "tda/intervals.hpp"

#include <algorithm>
#include <functional>

#include "tda/matching_util.hpp"

namespace tda {

Interval1D::Interval1D(Endpoint l, Endpoint r) : left(l), right(r) {
    if (right.v < left.v) throw input_error("interval with left > right");
    if (left.v == right.v && !(left.closed && right.closed && left.v.finite()))
        throw input_error("degenerate interval must be a closed point [a,a]");
    if (!left.v.finite() && left.closed) throw input_error("infinite endpoint must be open");
    if (!right.v.finite() && right.closed) throw input_error("infinite endpoint must be open");
}

bool Interval1D::contains_point(const Ext& x) const {
    bool l = left.v < x || (left.v == x && left.closed);
    bool r = x < right.v || (x == right.v && right.closed);
    return l && r;
}

bool Interval1D::contains(const Interval1D& o) const {
    bool l = left.v < o.left.v || (left.v == o.left.v && (left.closed || !o.left.closed));
    bool r = o.right.v < right.v || (o.right.v == right.v && (right.closed || !o.right.closed));
    return l && r;
}

Ext Interval1D::length() const {
    if (!left.v.finite() || !right.v.finite()) return Ext::pos_inf();
    return Ext(right.v.value() - left.v.value());
}

std::string Interval1D::str() const {
    return std::string(left.closed ? "[" : "(") + left.v.str() + "," + right.v.str() +
           (right.closed ? "]" : ")");
}

Interval1D thicken(const Interval1D& j, const Rational& eps) {
    if (eps < Rational(0)) throw input_error("thicken with negative epsilon");
    return Interval1D({j.left.v - eps, j.left.closed}, {j.right.v + eps, j.right.closed});
}

bool is_trivial_1d(const Interval1D& j, const Ext& t) {
    Ext len = j.length();
    if (!len.finite()) return false;
    if (!t.finite()) return true;
    if (len < t) return true;
    if (len == t) return !(j.left.closed && j.right.closed);
    return false;
}

bool is_interleaved_1d(const Interval1D& j, const Interval1D& k, const Ext& eps) {
    Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
    if (is_trivial_1d(j, two_eps) && is_trivial_1d(k, two_eps)) return true;
    if (eps.finite()) {
        return thicken(k, eps.value()).contains(j) && thicken(j, eps.value()).contains(k);
    }
    // Limit case (feasibility "for epsilon large enough"): a thickened finite
    // endpoint eventually covers anything finite, but never an infinite one.
    auto covers_in_limit = [](const Interval1D& big, const Interval1D& small) {
        bool l = !big.left.v.finite() || small.left.v.finite();
        bool r = !big.right.v.finite() || small.right.v.finite();
        // An infinite endpoint of small needs the same infinite endpoint on big.
        if (!small.left.v.finite() && big.left.v != small.left.v) l = false;
        if (!small.right.v.finite() && big.right.v != small.right.v) r = false;
        return l && r;
    };
    return covers_in_limit(k, j) && covers_in_limit(j, k);
}

bool check_matching_1d(const Matching& sigma, const Barcode1D& c, const Barcode1D& d,
                       const Ext& eps) {
    std::vector<bool> used_c(c.size(), false), used_d(d.size(), false);
    for (const auto& pr : sigma) {
        if (pr.from >= c.size() || pr.to >= d.size())
            throw input_error("matching index out of range");
        if (used_c[pr.from] || used_d[pr.to])
            throw input_error("matching is not a partial bijection");
        used_c[pr.from] = true;
        used_d[pr.to] = true;
    }
    Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!used_c[i] && !is_trivial_1d(c[i], two_eps)) return false;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (!used_d[j] && !is_trivial_1d(d[j], two_eps)) return false;
    for (const auto& pr : sigma)
        if (!is_interleaved_1d(c[pr.from], d[pr.to], eps)) return false;
    return true;
}

Ext bottleneck_1d(const Barcode1D& c, const Barcode1D& d) {
    std::vector<Rational> cands;
    for (const auto& j : c)
        for (const auto& k : d) {
            Ext ll = gap(j.left.v, k.left.v), rr = gap(j.right.v, k.right.v);
            if (ll.finite()) cands.push_back(ll.value());
            if (rr.finite()) cands.push_back(rr.value());
        }
    auto half_lengths = [&cands](const Barcode1D& b) {
        for (const auto& j : b) {
            Ext len = j.length();
            if (len.finite()) cands.push_back(len.value() / Rational(2));
        }
    };
    half_lengths(c);
    half_lengths(d);

    auto feasible = [&](const Ext& eps) {
        Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
        std::vector<std::vector<std::size_t>> adj(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                if (is_interleaved_1d(c[i], d[j], eps)) adj[i].push_back(j);
        std::vector<std::size_t> req_c, req_d;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!is_trivial_1d(c[i], two_eps)) req_c.push_back(i);
        for (std::size_t j = 0; j < d.size(); ++j)
            if (!is_trivial_1d(d[j], two_eps)) req_d.push_back(j);
        if (!can_saturate(adj, d.size(), req_c)) return false;
        std::vector<std::vector<std::size_t>> radj(d.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j : adj[i]) radj[j].push_back(i);
        return can_saturate(radj, c.size(), req_d);
    };
    return infimum_over_candidates(std::move(cands), feasible);
}

Barcode1D sorted_barcode(Barcode1D b) {
    auto key_lt = [](const Interval1D& x, const Interval1D& y) {
        if (x.left.v != y.left.v) return x.left.v < y.left.v;
        if (x.left.closed != y.left.closed) return x.left.closed;
        if (x.right.v != y.right.v) return x.right.v < y.right.v;
        return x.right.closed < y.right.closed;
    };
    std::sort(b.begin(), b.end(), key_lt);
    return b;
}

}  // namespace tda
