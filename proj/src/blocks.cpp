#include "tda/blocks.hpp"

#include <algorithm>
#include <cstdint>

#include "tda/matching_util.hpp"

namespace tda {

namespace {

const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::o: return "o";
        case BlockKind::co: return "co";
        case BlockKind::oc: return "oc";
        default: return "c";
    }
}

}  // namespace

Block::Block(BlockKind k, Ext a_, Ext b_) : kind(k), a(a_), b(b_) {
    // Reduce to the canonical type partition: the same region can be written
    // in several of the five syntactic forms once endpoints are infinite.
    if (kind == BlockKind::o) {
        if (!(a < b)) throw input_error("o block requires a < b");
        if (a.is_neg_inf() && b.is_pos_inf()) kind = BlockKind::c;
        else if (a.is_neg_inf()) kind = BlockKind::co;       // (-inf,b) = {y < b}
        else if (b.is_pos_inf()) kind = BlockKind::oc;       // (a,inf) = {x > a}
    } else if (kind == BlockKind::co) {
        if (!(a < b)) throw input_error("co block requires a < b");
        if (b.is_pos_inf()) kind = BlockKind::c;             // [a,inf) = {y >= a}
        if (a.is_neg_inf() && b.is_pos_inf()) kind = BlockKind::c;
    } else if (kind == BlockKind::oc) {
        if (!(a < b)) throw input_error("oc block requires a < b");
        if (a.is_neg_inf()) kind = BlockKind::c;             // (-inf,b] = {x <= b}
    }
    if (kind == BlockKind::c) {
        if (a.is_pos_inf() || b.is_neg_inf())
            throw input_error("c block endpoints out of range");
    }
}

bool Block::contains(const Ext& x, const Ext& y) const {
    if (y < x) throw input_error("block membership queried outside U");
    switch (kind) {
        case BlockKind::o: return a < x && y < b;
        case BlockKind::co: return a <= y && y < b;
        case BlockKind::oc: return a < x && x <= b;
        default: return x <= b && a <= y;
    }
}

Ext Block::span() const {
    if (!a.finite() || !b.finite()) return Ext::pos_inf();
    return Ext(b.value() - a.value());
}

std::string Block::str() const {
    return std::string(kind_name(kind)) + "(" + a.str() + "," + b.str() + ")";
}

bool block_is_trivial(const Block& blk, const Ext& t) {
    switch (blk.kind) {
        case BlockKind::c: return false;
        case BlockKind::o: {
            Ext two_t = t.finite() ? Ext(t.value() + t.value()) : t;
            return le_limit(blk.span(), two_t);
        }
        default: return le_limit(blk.span(), t);
    }
}

bool block_is_interleaved(const Block& x, const Block& y, const Ext& eps) {
    Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
    if (block_is_trivial(x, two_eps) && block_is_trivial(y, two_eps)) return true;
    return x.kind == y.kind && le_limit(gap(x.a, y.a), eps) && le_limit(gap(x.b, y.b), eps);
}

namespace {

bool meets_diagonal(const Block& blk) { return !blk.switched(); }

Interval1D diag_of(const Block& blk) {
    switch (blk.kind) {
        case BlockKind::o: return Interval1D::open(blk.a, blk.b);
        case BlockKind::co: return Interval1D({blk.a, blk.a.finite()}, {blk.b, false});
        case BlockKind::oc: return Interval1D({blk.a, false}, {blk.b, blk.b.finite()});
        default: return Interval1D({blk.a, blk.a.finite()}, {blk.b, blk.b.finite()});
    }
}

}  // namespace

Barcode1D diag_barcode(const BlockBarcode& bb) {
    Barcode1D out;
    for (const auto& blk : bb)
        if (meets_diagonal(blk)) out.push_back(diag_of(blk));
    return out;
}

Matching diag_matching(const Matching& sigma, const BlockBarcode& bb, const BlockBarcode& dd) {
    auto diag_index = [](const BlockBarcode& bc) {
        std::vector<std::size_t> idx(bc.size(), SIZE_MAX);
        std::size_t k = 0;
        for (std::size_t i = 0; i < bc.size(); ++i)
            if (meets_diagonal(bc[i])) idx[i] = k++;
        return idx;
    };
    auto bi = diag_index(bb), di = diag_index(dd);
    Matching out;
    for (const auto& pr : sigma) {
        if (pr.from >= bb.size() || pr.to >= dd.size())
            throw input_error("matching index out of range");
        if (bi[pr.from] != SIZE_MAX && di[pr.to] != SIZE_MAX)
            out.push_back({bi[pr.from], di[pr.to]});
    }
    return out;
}

bool check_matching_block(const Matching& sigma, const BlockBarcode& bb, const BlockBarcode& dd,
                          const Ext& eps) {
    std::vector<bool> used_b(bb.size(), false), used_d(dd.size(), false);
    for (const auto& pr : sigma) {
        if (pr.from >= bb.size() || pr.to >= dd.size())
            throw input_error("matching index out of range");
        if (used_b[pr.from] || used_d[pr.to])
            throw input_error("matching is not a partial bijection");
        used_b[pr.from] = true;
        used_d[pr.to] = true;
    }
    Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
    for (std::size_t i = 0; i < bb.size(); ++i)
        if (!used_b[i] && !block_is_trivial(bb[i], two_eps)) return false;
    for (std::size_t j = 0; j < dd.size(); ++j)
        if (!used_d[j] && !block_is_trivial(dd[j], two_eps)) return false;
    for (const auto& pr : sigma)
        if (!block_is_interleaved(bb[pr.from], dd[pr.to], eps)) return false;
    return true;
}

Ext bottleneck_block(const BlockBarcode& bb, const BlockBarcode& dd) {
    std::vector<Rational> cands;
    for (const auto& x : bb)
        for (const auto& y : dd) {
            Ext aa = gap(x.a, y.a), bbg = gap(x.b, y.b);
            if (aa.finite()) cands.push_back(aa.value());
            if (bbg.finite()) cands.push_back(bbg.value());
        }
    auto triv_thresholds = [&cands](const BlockBarcode& bc) {
        for (const auto& blk : bc) {
            Ext s = blk.span();
            if (!s.finite()) continue;
            if (blk.kind == BlockKind::co || blk.kind == BlockKind::oc)
                cands.push_back(s.value() / Rational(2));
            else if (blk.kind == BlockKind::o)
                cands.push_back(s.value() / Rational(4));
        }
    };
    triv_thresholds(bb);
    triv_thresholds(dd);

    auto feasible = [&](const Ext& eps) {
        Ext two_eps = eps.finite() ? Ext(eps.value() + eps.value()) : eps;
        std::vector<std::vector<std::size_t>> adj(bb.size());
        for (std::size_t i = 0; i < bb.size(); ++i)
            for (std::size_t j = 0; j < dd.size(); ++j)
                if (block_is_interleaved(bb[i], dd[j], eps)) adj[i].push_back(j);
        std::vector<std::size_t> req_b, req_d;
        for (std::size_t i = 0; i < bb.size(); ++i)
            if (!block_is_trivial(bb[i], two_eps)) req_b.push_back(i);
        for (std::size_t j = 0; j < dd.size(); ++j)
            if (!block_is_trivial(dd[j], two_eps)) req_d.push_back(j);
        if (!can_saturate(adj, dd.size(), req_b)) return false;
        std::vector<std::vector<std::size_t>> radj(dd.size());
        for (std::size_t i = 0; i < bb.size(); ++i)
            for (std::size_t j : adj[i]) radj[j].push_back(i);
        return can_saturate(radj, bb.size(), req_d);
    };
    return infimum_over_candidates(std::move(cands), feasible);
}

BlockBarcode sorted_blocks(BlockBarcode b) {
    auto key_lt = [](const Block& x, const Block& y) {
        if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    };
    std::sort(b.begin(), b.end(), key_lt);
    return b;
}

}  // namespace tda
