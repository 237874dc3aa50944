#pragma once
// The block extension functor E at the barcode level (relabel zigzag bars
// as blocks) and as a pointwise colimit over box-restricted diagrams, plus
// the zigzag bottleneck distance defined through it.
//
// Position bookkeeping: an alternating zigzag is laid out along ZZ with
// sources at (k, k-1) and sinks at (k, k).  A bar end at a sink is a closed
// endpoint with label k; at a source it is open, with label k-1 on the left
// and k on the right.  This reproduces the four interval forms <b,d>_ZZ.

#include <vector>

#include "tda/blocks.hpp"
#include "tda/zigzag.hpp"

namespace tda {

struct TaggedZigzagInterval {
    BlockKind kind;
    Ext b, d;

    bool operator==(const TaggedZigzagInterval& o) const {
        return kind == o.kind && b == o.b && d == o.d;
    }
};

// ZZ coordinates (i, j) of every position of an alternating zigzag with the
// given arrow directions; errors out on non-alternating input.  A lone
// position (no arrows) is treated as a sink.
std::vector<std::pair<long long, long long>> zz_coordinates(const std::vector<Dir>& orientation);

TaggedZigzagInterval tag_interval(const ZigzagInterval& j, const std::vector<Dir>& orientation);

Block extend_interval(const TaggedZigzagInterval& j);

BlockBarcode extend_barcode(const ZigzagBarcode& bars, const std::vector<Dir>& orientation);

// dim E(V)_(x,y): colimit of V restricted to the positions whose ZZ
// coordinate (i,j) satisfies i >= x and j <= y.
std::size_t pointwise_dim_E(const ZigzagModule& v, const Rational& x, const Rational& y);

Ext zz_bottleneck(const ZigzagModule& v, const ZigzagModule& w);

// Certified bounds on the interleaving distance d_I from the block stability
// sandwich d_I <= d_b <= (5/2) d_I.  With tight_constant the later isometry
// result (d_b = d_I) is used instead and both bounds coincide.
std::pair<Ext, Ext> zz_interleaving_bounds(const ZigzagModule& v, const ZigzagModule& w,
                                           bool tight_constant = false);

}  // namespace tda
