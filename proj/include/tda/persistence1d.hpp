#pragma once
// Finitely presented persistence modules on the real line, discretized on a
// shared grid.  A LineModule is constant on half-open cells [g_i, g_{i+1})
// (the last cell extends to +inf), so every barcode interval is of the form
// [a, b) or [a, inf).  Morphisms come with pointwise kernel/image/cokernel
// barcodes, triviality measurement and the induced matching.

#include <utility>
#include <vector>

#include "tda/intervals.hpp"
#include "tda/zigzag.hpp"

namespace tda {

struct LineModule {
    std::uint32_t field = 2;
    std::vector<Rational> grid;      // strictly increasing, one per cell
    std::vector<std::size_t> dims;   // dim on cell i
    std::vector<Matrix> maps;        // maps[i]: V_i -> V_{i+1}

    std::size_t m() const { return grid.size(); }
    void validate() const;
    ZigzagModule to_zigzag() const;
};

struct LineMorphism {
    LineModule source, target;       // on the same grid
    std::vector<Matrix> components;  // components[i]: source_i -> target_i

    void validate() const;
};

Barcode1D line_barcode(const LineModule& v);

struct MorphismBarcodes {
    Barcode1D ker, im, coker;
};

// Pointwise kernels/images/cokernels with their induced maps, decomposed.
MorphismBarcodes morphism_barcodes(const LineMorphism& f);

// Minimal shifts annihilating ker f and coker f: the longest bar length of
// each (0 when empty, +inf when a bar never dies).
std::pair<Ext, Ext> triviality_of(const LineMorphism& f);

// The canonical matching B(source) -> B(target) through B(im f): the
// surjection side pairs bars sharing a left endpoint by decreasing length,
// the injection side pairs bars sharing a right endpoint by decreasing
// length.
Matching induced_matching_1d(const LineMorphism& f);

}  // namespace tda
