#include "tda/levelset.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace tda {

std::size_t PLGraph::vertex_index(long long id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return i;
    throw input_error("unknown vertex id " + std::to_string(id));
}

std::vector<std::string> validate_pl_graph(const PLGraph& g) {
    std::vector<std::string> errs;
    if (g.ids.empty()) errs.push_back("graph has no vertices");
    if (g.ids.size() != g.values.size()) errs.push_back("vertex id/value count mismatch");
    for (std::size_t i = 0; i < g.ids.size(); ++i)
        for (std::size_t j = i + 1; j < g.ids.size(); ++j)
            if (g.ids[i] == g.ids[j])
                errs.push_back("duplicate vertex id " + std::to_string(g.ids[i]));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (u >= g.values.size() || v >= g.values.size()) {
            errs.push_back("edge " + std::to_string(e) + " references a missing vertex");
            continue;
        }
        if (u == v) errs.push_back("edge " + std::to_string(e) + " is a self-loop");
        else if (g.values[u] == g.values[v])
            errs.push_back("edge " + std::to_string(e) + " has equal endpoint values");
    }
    return errs;
}

namespace {

void require_valid(const PLGraph& g) {
    auto errs = validate_pl_graph(g);
    if (!errs.empty()) throw input_error("invalid graph: " + errs.front());
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

constexpr std::size_t kOutside = SIZE_MAX;

// Connected components of the preimage of [x, y]: every in-band vertex and
// every band-meeting edge fragment gets a component id.  Crossing edges
// (range strictly containing the band) are their own components, numbered
// after the vertex classes.
struct BandComponents {
    std::vector<std::size_t> vcomp;  // per vertex, kOutside when out of band
    std::vector<std::size_t> ecomp;  // per edge fragment, kOutside when disjoint
    std::size_t vertex_classes = 0;
    std::size_t count = 0;
    std::size_t in_vertices = 0, full_edges = 0, one_in_edges = 0, crossing_edges = 0;
};

BandComponents band_components(const PLGraph& g, const Rational& x, const Rational& y) {
    std::size_t nv = g.values.size();
    BandComponents bc;
    bc.vcomp.assign(nv, kOutside);
    bc.ecomp.assign(g.edges.size(), kOutside);
    auto in_band = [&](std::size_t v) { return x <= g.values[v] && g.values[v] <= y; };
    UnionFind uf(nv);
    for (auto [u, v] : g.edges)
        if (in_band(u) && in_band(v)) uf.unite(u, v);
    std::vector<std::size_t> root_comp(nv, kOutside);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!in_band(v)) continue;
        ++bc.in_vertices;
        std::size_t r = uf.find(v);
        if (root_comp[r] == kOutside) root_comp[r] = bc.vertex_classes++;
        bc.vcomp[v] = root_comp[r];
    }
    bc.count = bc.vertex_classes;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        std::size_t lo = g.values[u] < g.values[v] ? u : v;
        std::size_t hi = lo == u ? v : u;
        if (g.values[hi] < x || y < g.values[lo]) continue;  // misses the band
        if (in_band(lo) && in_band(hi)) {
            ++bc.full_edges;
            bc.ecomp[e] = bc.vcomp[lo];
        } else if (in_band(lo)) {
            ++bc.one_in_edges;
            bc.ecomp[e] = bc.vcomp[lo];
        } else if (in_band(hi)) {
            ++bc.one_in_edges;
            bc.ecomp[e] = bc.vcomp[hi];
        } else {
            ++bc.crossing_edges;
            bc.ecomp[e] = bc.count++;
        }
    }
    return bc;
}

}  // namespace

PreimageGraph preimage_graph(const PLGraph& g, const Rational& x, const Rational& y) {
    require_valid(g);
    if (y < x) throw input_error("band endpoints out of order");
    BandComponents bc = band_components(g, x, y);
    PreimageGraph pg;
    pg.nodes = bc.in_vertices + bc.one_in_edges + 2 * bc.crossing_edges;
    pg.fragments = bc.full_edges + bc.one_in_edges + bc.crossing_edges;
    pg.components = bc.count;
    pg.h0 = bc.count;
    // Appendage fragments cancel against their crossing points, so the cycle
    // count only sees the fully interior part.
    pg.h1 = bc.full_edges + bc.vertex_classes - bc.in_vertices;
    return pg;
}

std::vector<Rational> critical_grid(const PLGraph& g) {
    std::vector<Rational> s = g.values;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

namespace {

// Component-to-component assignment matrix for the inclusion of the src band
// into the tgt band (src must be contained in tgt).
Matrix inclusion_map(const PLGraph& g, const BandComponents& src, const BandComponents& tgt,
                     std::uint32_t p) {
    Matrix m(tgt.count, src.count, p);
    for (std::size_t v = 0; v < g.values.size(); ++v)
        if (src.vcomp[v] != kOutside) m.at(tgt.vcomp[v], src.vcomp[v]) = 1;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (src.ecomp[e] != kOutside) m.at(tgt.ecomp[e], src.ecomp[e]) = 1;
    return m;
}

// The level/slab zigzag over an arbitrary increasing value sequence.
ZigzagModule zigzag_over(const PLGraph& g, const std::vector<Rational>& s, int degree,
                         std::uint32_t p) {
    std::size_t m = s.size();
    ZigzagModule z;
    z.field = p;
    std::vector<BandComponents> level(m), slab(m ? m - 1 : 0);
    for (std::size_t k = 0; k < m; ++k) level[k] = band_components(g, s[k], s[k]);
    for (std::size_t k = 0; k + 1 < m; ++k) slab[k] = band_components(g, s[k], s[k + 1]);
    auto h1_of = [](const BandComponents& bc) {
        return bc.full_edges + bc.vertex_classes - bc.in_vertices;
    };
    for (std::size_t k = 0; k < m; ++k) {
        z.dims.push_back(degree == 0 ? level[k].count : h1_of(level[k]));
        if (k + 1 < m) z.dims.push_back(degree == 0 ? slab[k].count : h1_of(slab[k]));
    }
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (degree == 0) {
            z.arrows.push_back({Dir::fwd, inclusion_map(g, level[k], slab[k], p)});
            z.arrows.push_back({Dir::bwd, inclusion_map(g, level[k + 1], slab[k], p)});
        } else {
            // Level preimages of a graph are discrete, so both legs are zero.
            z.arrows.push_back({Dir::fwd, Matrix(h1_of(slab[k]), h1_of(level[k]), p)});
            z.arrows.push_back({Dir::bwd, Matrix(h1_of(slab[k]), h1_of(level[k + 1]), p)});
        }
    }
    z.validate();
    return z;
}

}  // namespace

ZigzagModule levelset_zigzag(const PLGraph& g, int degree, std::uint32_t p) {
    require_valid(g);
    if (degree != 0 && degree != 1) throw input_error("homology degree must be 0 or 1");
    return zigzag_over(g, critical_grid(g), degree, p);
}

BlockBarcode interlevel_blocks(const PLGraph& g, int degree) {
    require_valid(g);
    if (degree != 0 && degree != 1) throw input_error("homology degree must be 0 or 1");
    // Blocks supported strictly inside one open slab between adjacent
    // critical values (parallel edges create these) contain no level or slab
    // of the critical grid, so refine with midpoints before decomposing.
    std::vector<Rational> crit = critical_grid(g);
    std::vector<Rational> s;
    for (std::size_t k = 0; k < crit.size(); ++k) {
        s.push_back(crit[k]);
        if (k + 1 < crit.size()) s.push_back((crit[k] + crit[k + 1]) / Rational(2));
    }
    ZigzagBarcode bars = decompose_zz(zigzag_over(g, s, 0, 2));
    BlockBarcode b0;
    // Position 2k-1 is level_k (the set at s_k, shown at (s_k, s_k)), 2k is
    // slab_k (the band [s_k, s_{k+1}], shown at (s_k, s_{k+1})).  A block is
    // recovered from the run of staircase points the bar covers: a bar
    // starting at slab_i is closed on the left at s_{i+1}; starting at an
    // interior level_i it is open at s_{i-1}; the boundary level_1 closes at
    // s_1.  Symmetrically on the right: slab_j closes at s_j, an interior
    // level_j is open at s_{j+1}, and level_m closes at s_m.
    std::size_t m = s.size();
    for (const ZigzagInterval& bar : bars) {
        bool left_level = bar.first % 2 == 1;
        bool right_level = bar.last % 2 == 1;
        Ext a, b;
        bool left_closed, right_closed;
        if (!left_level) {
            std::size_t i = bar.first / 2;
            left_closed = true;
            a = Ext(s[i]);
        } else if (bar.first == 1) {
            left_closed = true;
            a = Ext(s[0]);
        } else {
            std::size_t i = (bar.first + 1) / 2;
            left_closed = false;
            a = Ext(s[i - 2]);
        }
        if (!right_level) {
            std::size_t j = bar.last / 2;
            right_closed = true;
            b = Ext(s[j - 1]);
        } else if (bar.last == 2 * m - 1) {
            right_closed = true;
            b = Ext(s[m - 1]);
        } else {
            std::size_t j = (bar.last + 1) / 2;
            right_closed = false;
            b = Ext(s[j]);
        }
        BlockKind kind = left_closed ? (right_closed ? BlockKind::c : BlockKind::co)
                                     : (right_closed ? BlockKind::oc : BlockKind::o);
        b0.emplace_back(kind, a, b);
    }
    if (degree == 0) return b0;
    BlockBarcode b1;
    for (const Block& blk : b0)
        if (blk.kind == BlockKind::o) b1.emplace_back(BlockKind::c, blk.b, blk.a);
    return b1;
}

Barcode1D level_barcode(const PLGraph& g, int degree) {
    return diag_barcode(interlevel_blocks(g, degree));
}

bool verify_pointwise(const PLGraph& g, int degree, const BlockBarcode& blocks) {
    require_valid(g);
    std::vector<Rational> s = critical_grid(g);
    std::vector<Rational> samples;
    for (std::size_t k = 0; k < s.size(); ++k) {
        samples.push_back(s[k]);
        if (k + 1 < s.size()) samples.push_back((s[k] + s[k + 1]) / Rational(2));
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i; j < samples.size(); ++j) {
            std::size_t expected = degree == 0 ? preimage_graph(g, samples[i], samples[j]).h0
                                               : preimage_graph(g, samples[i], samples[j]).h1;
            std::size_t got = 0;
            for (const Block& blk : blocks)
                if (blk.contains(Ext(samples[i]), Ext(samples[j]))) ++got;
            if (got != expected) return false;
        }
    return true;
}

PerturbResult perturb(const PLGraph& g, const Rational& delta, std::uint64_t seed) {
    require_valid(g);
    if (delta < Rational(0)) throw input_error("perturbation radius must be nonnegative");
    if (delta.is_zero()) return {g, Rational(0)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(-60, 60);
    for (int attempt = 0; attempt < 256; ++attempt) {
        PLGraph h = g;
        Rational realized(0);
        for (std::size_t v = 0; v < h.values.size(); ++v) {
            Rational shift = delta * Rational(step(rng), 60);
            h.values[v] += shift;
            if (realized < shift.abs()) realized = shift.abs();
        }
        bool ok = true;
        for (auto [u, v] : h.edges)
            if (h.values[u] == h.values[v]) ok = false;
        if (ok) return {h, realized};
    }
    throw std::runtime_error("perturbation kept colliding with edge endpoints");
}

Ext reeb_lower_bound(const PLGraph& g1, const PLGraph& g2) {
    Ext b = bottleneck_1d(level_barcode(g1, 0), level_barcode(g2, 0));
    if (!b.finite()) return b;
    return Ext(b.value() / Rational(5));
}

}  // namespace tda
