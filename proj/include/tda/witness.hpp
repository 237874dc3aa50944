#pragma once
// Explicit interleavings built from block matchings.  The morphism attached
// to a matched pair is the scalar 1 wherever both the source block and the
// shifted target block are present; everything a matching claims is then
// checkable by evaluating the interleaving equations on a finite grid of
// points of U, since all membership functions are piecewise constant with
// breakpoints at block endpoints shifted by multiples of epsilon.

#include <cstdint>

#include "tda/blocks.hpp"

namespace tda {

struct InterleavingWitness {
    Rational eps;
    BlockBarcode left, right;
    Matching pairs;  // per pair: unit scalar on the overlap, zero elsewhere
};

// Packages an epsilon-matching as a candidate interleaving; rejects input
// that is not an epsilon-matching in the first place.
InterleavingWitness witness_from_matching(const Matching& sigma, const BlockBarcode& b,
                                          const BlockBarcode& d, const Rational& eps);

// Evaluates naturality of both families and the composite identities
// g(eps) . f = phi^{2eps} and f(eps) . g = phi^{2eps} at every verification
// grid point (block endpoints shifted by 0, +-eps, +-2eps, midpoints, and
// points beyond the range).
bool verify_witness(const InterleavingWitness& w);

// Executable form of the block stability theorem: does a type-preserving
// matching exist that covers every c block, every o block that is not
// 5eps-trivial and every co/oc block that is not 2eps-trivial on both sides,
// matching only pairs with coordinatewise endpoint gaps <= eps?
bool block_stability_check(const BlockBarcode& b, const BlockBarcode& d, const Ext& eps);

}  // namespace tda
