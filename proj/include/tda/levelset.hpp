#pragma once
// Piecewise linear functions on finite graphs and their interlevel
// persistence: preimage homology of bands, level/slab zigzags, block
// barcodes with a pointwise certificate, random perturbations and the Reeb
// distance lower bound.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tda/blocks.hpp"
#include "tda/zigzag.hpp"

namespace tda {

struct PLGraph {
    std::vector<long long> ids;     // unique vertex ids (kept for I/O)
    std::vector<Rational> values;   // function value per vertex
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indices

    std::size_t vertex_index(long long id) const;  // throws on unknown id
};

// Empty list means valid; otherwise human-readable violations.
std::vector<std::string> validate_pl_graph(const PLGraph& g);

// Combinatorial preimage of the band [x, y]: original vertices with value in
// the band, plus crossing points where edges enter or leave it.
struct PreimageGraph {
    std::size_t nodes = 0;       // in-band vertices + crossing points
    std::size_t fragments = 0;   // edge pieces inside the band
    std::size_t components = 0;  // h0
    std::size_t h0 = 0;
    std::size_t h1 = 0;
};

PreimageGraph preimage_graph(const PLGraph& g, const Rational& x, const Rational& y);

// Sorted distinct vertex values.
std::vector<Rational> critical_grid(const PLGraph& g);

// The level/slab zigzag in homology degree 0 or 1: positions alternate
// level_1, slab_1, level_2, ..., level_m over the critical grid, with level
// spaces mapping into the neighbouring slab spaces.
ZigzagModule levelset_zigzag(const PLGraph& g, int degree, std::uint32_t p = 2);

// Block barcode of the interlevel filtration.  Degree 0 translates the H0
// zigzag bars to real-valued blocks on the critical grid; degree 1 emits the
// switched companions of the degree-0 open blocks.
BlockBarcode interlevel_blocks(const PLGraph& g, int degree);

Barcode1D level_barcode(const PLGraph& g, int degree);

// Independent certificate: at every pair (x, y) of grid values and grid
// midpoints, the number of blocks containing (x, y) must equal the band's
// homology dimension in the given degree.
bool verify_pointwise(const PLGraph& g, int degree, const BlockBarcode& blocks);

struct PerturbResult {
    PLGraph graph;
    Rational realized;  // d_inf between the original and perturbed functions
};

// Shift every vertex value by a random amount in [-delta, delta], resampling
// until all edges keep distinct endpoint values.
PerturbResult perturb(const PLGraph& g, const Rational& delta, std::uint64_t seed);

// bottleneck_1d(L0(g1), L0(g2)) / 5, a certified lower bound on the Reeb
// interleaving distance.
Ext reeb_lower_bound(const PLGraph& g1, const PLGraph& g2);

}  // namespace tda
