#pragma once
// Decorated intervals of the extended real line, barcodes, epsilon-matchings
// and the 1-D bottleneck distance.  Decorations (open/closed) are first
// class: triviality and containment flip exactly at the thresholds the
// decorations distinguish, so every predicate is an exact case analysis.

#include <vector>

#include "tda/rational.hpp"

namespace tda {

struct Endpoint {
    Ext v;
    bool closed;

    bool operator==(const Endpoint& o) const { return v == o.v && closed == o.closed; }
};

struct Interval1D {
    Endpoint left, right;

    Interval1D(Endpoint l, Endpoint r);
    static Interval1D closed(Ext a, Ext b) { return {{a, true}, {b, true}}; }
    static Interval1D open(Ext a, Ext b) { return {{a, false}, {b, false}}; }
    static Interval1D half_co(Ext a, Ext b) { return {{a, true}, {b, false}}; }
    static Interval1D half_oc(Ext a, Ext b) { return {{a, false}, {b, true}}; }

    bool operator==(const Interval1D& o) const { return left == o.left && right == o.right; }

    bool contains_point(const Ext& x) const;
    // Decorated set containment: every point of o lies in *this.
    bool contains(const Interval1D& o) const;

    // b - a, or +inf for unbounded intervals.
    Ext length() const;

    std::string str() const;
};

using Barcode1D = std::vector<Interval1D>;

struct MatchPair {
    std::size_t from, to;
};
using Matching = std::vector<MatchPair>;

Interval1D thicken(const Interval1D& j, const Rational& eps);

// True iff every a in J has a + t outside J; equivalently J fits strictly
// inside some [s, s+t].  t may be +inf (every bounded interval qualifies).
bool is_trivial_1d(const Interval1D& j, const Ext& t);

bool is_interleaved_1d(const Interval1D& j, const Interval1D& k, const Ext& eps);

// epsilon-matching test: coverage of all non-2eps-trivial intervals on both
// sides plus pairwise interleaving of matched pairs.
bool check_matching_1d(const Matching& sigma, const Barcode1D& c, const Barcode1D& d,
                       const Ext& eps);

// Infimum of feasible epsilon; +inf if no finite epsilon admits a matching.
// The infimum need not itself be feasible.
Ext bottleneck_1d(const Barcode1D& c, const Barcode1D& d);

// Sort a barcode into a canonical order (for multiset comparison).
Barcode1D sorted_barcode(Barcode1D b);

}  // namespace tda
