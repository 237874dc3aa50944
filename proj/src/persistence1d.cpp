#include "tda/persistence1d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tda {

void LineModule::validate() const {
    if (!is_prime(field)) throw input_error("line module field must be prime");
    if (dims.size() != grid.size()) throw input_error("line module dims/grid size mismatch");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw input_error("line module grid not increasing");
    std::size_t want = grid.empty() ? 0 : grid.size() - 1;
    if (maps.size() != want) throw input_error("line module needs one map per adjacent cell pair");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].field() != field) throw input_error("line module map field mismatch");
        if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1])
            throw input_error("line module map shape mismatch at cell " + std::to_string(i));
    }
}

ZigzagModule LineModule::to_zigzag() const {
    ZigzagModule z;
    z.field = field;
    z.dims = dims;
    for (const Matrix& m : maps) z.arrows.push_back({Dir::fwd, m});
    return z;
}

void LineMorphism::validate() const {
    source.validate();
    target.validate();
    if (source.field != target.field) throw input_error("line morphism field mismatch");
    if (source.grid != target.grid) throw input_error("line morphism grids differ");
    if (components.size() != source.m()) throw input_error("line morphism component count");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].cols() != source.dims[i] || components[i].rows() != target.dims[i] ||
            components[i].field() != source.field)
            throw input_error("line morphism component shape mismatch at cell " +
                              std::to_string(i));
    for (std::size_t i = 0; i + 1 < components.size(); ++i)
        if (target.maps[i] * components[i] != components[i + 1] * source.maps[i])
            throw input_error("line morphism squares do not commute at cell " +
                              std::to_string(i));
}

Barcode1D line_barcode(const LineModule& v) {
    v.validate();
    Barcode1D out;
    if (v.m() == 0) return out;
    for (const ZigzagInterval& bar : decompose_zz(v.to_zigzag())) {
        Ext right = bar.last < v.m() ? Ext(v.grid[bar.last]) : Ext::pos_inf();
        out.push_back(Interval1D::half_co(Ext(v.grid[bar.first - 1]), right));
    }
    return out;
}

namespace {

LineModule submodule_line(const LineModule& ambient, const std::vector<Matrix>& bases) {
    LineModule s;
    s.field = ambient.field;
    s.grid = ambient.grid;
    for (const Matrix& b : bases) s.dims.push_back(b.cols());
    for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
        auto mi = solve(bases[i + 1], ambient.maps[i] * bases[i]);
        if (!mi) throw std::logic_error("submodule not closed under the internal maps");
        s.maps.push_back(*mi);
    }
    return s;
}

LineModule kernel_module(const LineMorphism& f) {
    std::vector<Matrix> bases;
    for (const Matrix& c : f.components) bases.push_back(kernel_basis(c));
    return submodule_line(f.source, bases);
}

LineModule image_module(const LineMorphism& f) {
    std::vector<Matrix> bases;
    for (const Matrix& c : f.components) bases.push_back(column_basis(c));
    return submodule_line(f.target, bases);
}

LineModule cokernel_module(const LineMorphism& f) {
    LineModule c;
    c.field = f.target.field;
    c.grid = f.target.grid;
    std::vector<Matrix> proj, section;
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        Matrix p = quotient_projection(f.components[i], f.target.dims[i], c.field);
        auto s = solve(p, Matrix::identity(p.rows(), c.field));
        if (!s) throw std::logic_error("quotient projection lost full row rank");
        c.dims.push_back(p.rows());
        proj.push_back(p);
        section.push_back(*s);
    }
    // The induced map is independent of the section because the target map
    // carries im f_i into im f_{i+1}.
    for (std::size_t i = 0; i + 1 < proj.size(); ++i)
        c.maps.push_back(proj[i + 1] * f.target.maps[i] * section[i]);
    return c;
}

}  // namespace

MorphismBarcodes morphism_barcodes(const LineMorphism& f) {
    f.validate();
    MorphismBarcodes out;
    out.ker = line_barcode(kernel_module(f));
    out.im = line_barcode(image_module(f));
    out.coker = line_barcode(cokernel_module(f));
    return out;
}

std::pair<Ext, Ext> triviality_of(const LineMorphism& f) {
    MorphismBarcodes b = morphism_barcodes(f);
    Ext ek(0), dc(0);
    for (const auto& j : b.ker)
        if (ek < j.length()) ek = j.length();
    for (const auto& j : b.coker)
        if (dc < j.length()) dc = j.length();
    return {ek, dc};
}

namespace {

// For each bar of `from`, the index of its partner in `to`: bars are grouped
// by the chosen endpoint and paired k-th longest with k-th longest.  The
// induced matching theorem guarantees every group of `from` fits.
std::vector<std::size_t> pair_by_endpoint(const Barcode1D& from, const Barcode1D& to,
                                          bool by_left) {
    auto key = [&](const Interval1D& j) { return by_left ? j.left.v : j.right.v; };
    std::map<Ext, std::vector<std::size_t>> gf, gt;
    for (std::size_t i = 0; i < from.size(); ++i) gf[key(from[i])].push_back(i);
    for (std::size_t i = 0; i < to.size(); ++i) gt[key(to[i])].push_back(i);
    auto by_len_desc = [](const Barcode1D& bars) {
        return [&bars](std::size_t a, std::size_t b) {
            if (bars[a].length() != bars[b].length()) return bars[b].length() < bars[a].length();
            return a < b;
        };
    };
    std::vector<std::size_t> partner(from.size());
    for (auto& [k, fidx] : gf) {
        auto it = gt.find(k);
        if (it == gt.end() || it->second.size() < fidx.size())
            throw std::logic_error("induced matching endpoint group too small");
        std::sort(fidx.begin(), fidx.end(), by_len_desc(from));
        std::sort(it->second.begin(), it->second.end(), by_len_desc(to));
        for (std::size_t r = 0; r < fidx.size(); ++r) partner[fidx[r]] = it->second[r];
    }
    return partner;
}

}  // namespace

Matching induced_matching_1d(const LineMorphism& f) {
    f.validate();
    Barcode1D bm = line_barcode(f.source);
    Barcode1D bi = line_barcode(image_module(f));
    Barcode1D bn = line_barcode(f.target);
    // Surjection M ->> im f preserves left endpoints; injection im f -> N
    // preserves right endpoints.
    std::vector<std::size_t> to_m = pair_by_endpoint(bi, bm, true);
    std::vector<std::size_t> to_n = pair_by_endpoint(bi, bn, false);
    Matching sigma;
    for (std::size_t k = 0; k < bi.size(); ++k) sigma.push_back({to_m[k], to_n[k]});
    return sigma;
}

}  // namespace tda
