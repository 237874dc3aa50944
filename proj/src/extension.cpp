#include "tda/extension.hpp"

namespace tda {

std::vector<std::pair<long long, long long>> zz_coordinates(const std::vector<Dir>& orientation) {
    for (std::size_t i = 0; i + 1 < orientation.size(); ++i)
        if (orientation[i] == orientation[i + 1])
            throw input_error("zigzag orientation is not alternating");
    std::size_t n = orientation.size() + 1;
    std::vector<std::pair<long long, long long>> coords(n);
    // A position is a source iff its arrows point away from it.
    bool first_is_source = !orientation.empty() && orientation[0] == Dir::fwd;
    coords[0] = first_is_source ? std::make_pair(1LL, 0LL) : std::make_pair(1LL, 1LL);
    for (std::size_t p = 1; p < n; ++p) {
        auto [i, j] = coords[p - 1];
        bool prev_source = i != j;
        coords[p] = prev_source ? std::make_pair(i, j + 1) : std::make_pair(i + 1, j);
    }
    return coords;
}

TaggedZigzagInterval tag_interval(const ZigzagInterval& j, const std::vector<Dir>& orientation) {
    auto coords = zz_coordinates(orientation);
    if (j.first < 1 || j.last > coords.size() || j.first > j.last)
        throw input_error("zigzag interval out of range");
    auto [li, lj] = coords[j.first - 1];
    auto [ri, rj] = coords[j.last - 1];
    bool left_closed = li == lj;
    bool right_closed = ri == rj;
    TaggedZigzagInterval t;
    t.b = Ext(Rational(lj));
    t.d = Ext(Rational(ri));
    if (left_closed && right_closed) t.kind = BlockKind::c;
    else if (left_closed) t.kind = BlockKind::co;
    else if (right_closed) t.kind = BlockKind::oc;
    else t.kind = BlockKind::o;
    return t;
}

Block extend_interval(const TaggedZigzagInterval& j) { return Block(j.kind, j.b, j.d); }

BlockBarcode extend_barcode(const ZigzagBarcode& bars, const std::vector<Dir>& orientation) {
    BlockBarcode out;
    out.reserve(bars.size());
    for (const auto& bar : bars) out.push_back(extend_interval(tag_interval(bar, orientation)));
    return out;
}

std::size_t pointwise_dim_E(const ZigzagModule& v, const Rational& x, const Rational& y) {
    v.validate();
    std::vector<Dir> orientation;
    for (const auto& ar : v.arrows) orientation.push_back(ar.dir);
    auto coords = zz_coordinates(orientation);
    // i is nondecreasing and j nondecreasing along the walk, so the box cuts
    // out a contiguous run of positions.
    std::size_t first = 0, last = 0;
    bool any = false;
    for (std::size_t p = 0; p < coords.size(); ++p) {
        if (Rational(coords[p].first) >= x && Rational(coords[p].second) <= y) {
            if (!any) first = p;
            last = p;
            any = true;
        }
    }
    if (!any) return 0;
    // The module is implicitly zero on the rest of ZZ.  A zero sink adjacent
    // to the slice can still lie in the box, and the relation into it kills
    // the class of the neighbouring source, so append such sinks explicitly.
    // (Zero sources contribute nothing and can be ignored.)
    bool left_sink = coords[first].first != coords[first].second &&
                     Rational(coords[first].second) >= x;
    bool right_sink = coords[last].first != coords[last].second &&
                      Rational(coords[last].first) <= y;
    ZigzagModule w;
    w.field = v.field;
    if (left_sink) w.dims.push_back(0);
    for (std::size_t p = first; p <= last; ++p) w.dims.push_back(v.dims[p]);
    if (right_sink) w.dims.push_back(0);
    if (left_sink) w.arrows.push_back({Dir::bwd, Matrix(0, v.dims[first], v.field)});
    for (std::size_t p = first; p < last; ++p) w.arrows.push_back(v.arrows[p]);
    if (right_sink) w.arrows.push_back({Dir::fwd, Matrix(0, v.dims[last], v.field)});
    return colim_dim_slice(w, 1, w.n());
}

Ext zz_bottleneck(const ZigzagModule& v, const ZigzagModule& w) {
    std::vector<Dir> ov, ow;
    for (const auto& ar : v.arrows) ov.push_back(ar.dir);
    for (const auto& ar : w.arrows) ow.push_back(ar.dir);
    return bottleneck_block(extend_barcode(decompose_zz(v), ov),
                            extend_barcode(decompose_zz(w), ow));
}

std::pair<Ext, Ext> zz_interleaving_bounds(const ZigzagModule& v, const ZigzagModule& w,
                                           bool tight_constant) {
    Ext db = zz_bottleneck(v, w);
    if (tight_constant || !db.finite()) return {db, db};
    return {Ext(db.value() * Rational(2, 5)), db};
}

}  // namespace tda
