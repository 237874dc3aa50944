#pragma once
// Blocks over the half-plane U = {(x,y) : x <= y}: the four region types
// o/co/oc/c, their triviality and interleaving predicates, diagonal
// restriction, and the block bottleneck distance.  Switched rectangles
// above the diagonal are stored as kind c with a > b.

#include <vector>

#include "tda/intervals.hpp"
#include "tda/rational.hpp"

namespace tda {

enum class BlockKind { o, co, oc, c };

struct Block {
    BlockKind kind;
    Ext a, b;

    // Constructors canonicalize the kind so each region has one
    // representation: e.g. an o with a = -inf is the same region as a co,
    // a co with b = +inf is a c, and so on.
    Block(BlockKind k, Ext a_, Ext b_);

    bool operator==(const Block& o) const { return kind == o.kind && a == o.a && b == o.b; }

    bool switched() const { return kind == BlockKind::c && b < a; }

    // Region membership for (x,y) in U.
    bool contains(const Ext& x, const Ext& y) const;

    // b - a (+inf when either endpoint is infinite); negative only for
    // switched blocks, which no predicate measures.
    Ext span() const;

    std::string str() const;
};

using BlockBarcode = std::vector<Block>;

// With t playing the role of 2*epsilon: co/oc are trivial when b - a <= t,
// o when b - a <= 2t, c never.
bool block_is_trivial(const Block& blk, const Ext& t);

// Same type with coordinatewise endpoint gaps <= eps, or both 2eps-trivial.
bool block_is_interleaved(const Block& x, const Block& y, const Ext& eps);

// Intersection with the diagonal, one 1-D interval per block that meets it.
// Decorations follow the kind; switched blocks contribute nothing.
Barcode1D diag_barcode(const BlockBarcode& bb);

// Restriction of sigma to the pairs whose blocks meet the diagonal on both
// sides, reindexed into the diag barcodes.
Matching diag_matching(const Matching& sigma, const BlockBarcode& bb, const BlockBarcode& dd);

bool check_matching_block(const Matching& sigma, const BlockBarcode& bb, const BlockBarcode& dd,
                          const Ext& eps);

Ext bottleneck_block(const BlockBarcode& bb, const BlockBarcode& dd);

BlockBarcode sorted_blocks(BlockBarcode b);

}  // namespace tda
