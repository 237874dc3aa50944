#include "tda/json_io.hpp"

namespace tda {

const char* const kSchemaVersion = "1";

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw input_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::string str_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) throw input_error(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

Rational rat_field(const json& j, const char* name) {
    return Rational::parse(str_field(j, name));
}

Ext ext_field(const json& j, const char* name) {
    return Ext::parse(str_field(j, name));
}

long long int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw input_error(std::string("field \"") + name +
                                                  "\" must be an integer");
    return v.get<long long>();
}

const json& array_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_array()) throw input_error(std::string("field \"") + name + "\" must be an array");
    return v;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Shapes are always derivable from the surrounding dims, so zero-sized
// matrices survive the round trip.
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p) {
    if (!j.is_array() || j.size() != rows) throw input_error("matrix row count mismatch");
    Matrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw input_error("matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row.at(c).is_number_integer() || row.at(c).get<long long>() < 0)
                throw input_error("matrix entries must be nonnegative integers");
            m.at(i, c) = Fp(row.at(c).get<unsigned long long>() % p);
        }
    }
    return m;
}

std::uint32_t field_char(const json& j) {
    long long p = int_field(j, "field");
    if (p < 2 || !is_prime(std::uint32_t(p))) throw input_error("field must be a prime");
    return std::uint32_t(p);
}

std::vector<std::size_t> dims_from_json(const json& j) {
    std::vector<std::size_t> dims;
    for (const json& d : j) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw input_error("dims must be nonnegative integers");
        dims.push_back(std::size_t(d.get<long long>()));
    }
    return dims;
}

const char* kind_str(BlockKind k) {
    switch (k) {
        case BlockKind::o: return "o";
        case BlockKind::co: return "co";
        case BlockKind::oc: return "oc";
        default: return "c";
    }
}

BlockKind kind_parse(const std::string& s) {
    if (s == "o") return BlockKind::o;
    if (s == "co") return BlockKind::co;
    if (s == "oc") return BlockKind::oc;
    if (s == "c") return BlockKind::c;
    throw input_error("unknown block kind \"" + s + "\"");
}

}  // namespace

json barcode1d_to_json(const Barcode1D& b) {
    json intervals = json::array();
    for (const Interval1D& j : b)
        intervals.push_back({{"left", {{"v", j.left.v.str()}, {"closed", j.left.closed}}},
                             {"right", {{"v", j.right.v.str()}, {"closed", j.right.closed}}}});
    return {{"intervals", intervals}};
}

Barcode1D barcode1d_from_json(const json& j) {
    Barcode1D out;
    for (const json& e : array_field(j, "intervals")) {
        const json& l = field(e, "left");
        const json& r = field(e, "right");
        auto closed = [](const json& side) {
            const json& c = field(side, "closed");
            if (!c.is_boolean()) throw input_error("endpoint \"closed\" must be a boolean");
            return c.get<bool>();
        };
        out.push_back(Interval1D({ext_field(l, "v"), closed(l)}, {ext_field(r, "v"), closed(r)}));
    }
    return out;
}

json blocks_to_json(const BlockBarcode& b) {
    json blocks = json::array();
    for (const Block& blk : b)
        blocks.push_back({{"kind", kind_str(blk.kind)}, {"a", blk.a.str()}, {"b", blk.b.str()}});
    return {{"blocks", blocks}};
}

BlockBarcode blocks_from_json(const json& j) {
    BlockBarcode out;
    for (const json& e : array_field(j, "blocks"))
        out.emplace_back(kind_parse(str_field(e, "kind")), ext_field(e, "a"), ext_field(e, "b"));
    return out;
}

json zigzag_to_json(const ZigzagModule& v) {
    json arrows = json::array();
    for (const Arrow& a : v.arrows)
        arrows.push_back({{"dir", a.dir == Dir::fwd ? "fwd" : "bwd"},
                          {"matrix", matrix_to_json(a.map)}});
    return {{"field", v.field}, {"dims", v.dims}, {"arrows", arrows}};
}

ZigzagModule zigzag_from_json(const json& j) {
    ZigzagModule v;
    v.field = field_char(j);
    v.dims = dims_from_json(array_field(j, "dims"));
    const json& arrows = array_field(j, "arrows");
    std::size_t want = v.dims.empty() ? 0 : v.dims.size() - 1;
    if (arrows.size() != want) throw input_error("zigzag needs one arrow per adjacent pair");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::string d = str_field(arrows.at(i), "dir");
        if (d != "fwd" && d != "bwd") throw input_error("arrow dir must be fwd or bwd");
        Dir dir = d == "fwd" ? Dir::fwd : Dir::bwd;
        std::size_t src = dir == Dir::fwd ? v.dims[i] : v.dims[i + 1];
        std::size_t tgt = dir == Dir::fwd ? v.dims[i + 1] : v.dims[i];
        v.arrows.push_back({dir, matrix_from_json(field(arrows.at(i), "matrix"), tgt, src,
                                                  v.field)});
    }
    v.validate();
    return v;
}

json line_module_to_json(const LineModule& v) {
    json grid = json::array();
    for (const Rational& g : v.grid) grid.push_back(g.str());
    json maps = json::array();
    for (const Matrix& m : v.maps) maps.push_back(matrix_to_json(m));
    return {{"field", v.field}, {"grid", grid}, {"dims", v.dims}, {"maps", maps}};
}

LineModule line_module_from_json(const json& j) {
    LineModule v;
    v.field = field_char(j);
    for (const json& g : array_field(j, "grid")) {
        if (!g.is_string()) throw input_error("grid values must be rational strings");
        v.grid.push_back(Rational::parse(g.get<std::string>()));
    }
    v.dims = dims_from_json(array_field(j, "dims"));
    if (v.dims.size() != v.grid.size()) throw input_error("line module dims/grid size mismatch");
    const json& maps = array_field(j, "maps");
    std::size_t want = v.grid.empty() ? 0 : v.grid.size() - 1;
    if (maps.size() != want) throw input_error("line module needs one map per adjacent cell pair");
    for (std::size_t i = 0; i < maps.size(); ++i)
        v.maps.push_back(matrix_from_json(maps.at(i), v.dims[i + 1], v.dims[i], v.field));
    v.validate();
    return v;
}

json line_morphism_to_json(const LineMorphism& f) {
    json comps = json::array();
    for (const Matrix& c : f.components) comps.push_back(matrix_to_json(c));
    return {{"source", line_module_to_json(f.source)},
            {"target", line_module_to_json(f.target)},
            {"components", comps}};
}

LineMorphism line_morphism_from_json(const json& j) {
    LineMorphism f;
    f.source = line_module_from_json(field(j, "source"));
    f.target = line_module_from_json(field(j, "target"));
    const json& comps = array_field(j, "components");
    if (comps.size() != f.source.m()) throw input_error("line morphism component count");
    for (std::size_t i = 0; i < comps.size(); ++i)
        f.components.push_back(matrix_from_json(comps.at(i), f.target.dims[i], f.source.dims[i],
                                                f.source.field));
    f.validate();
    return f;
}

json pl_graph_to_json(const PLGraph& g) {
    json verts = json::array();
    for (std::size_t i = 0; i < g.ids.size(); ++i)
        verts.push_back({{"id", g.ids[i]}, {"value", g.values[i].str()}});
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({g.ids[u], g.ids[v]});
    return {{"vertices", verts}, {"edges", edges}};
}

PLGraph pl_graph_from_json(const json& j) {
    PLGraph g;
    for (const json& v : array_field(j, "vertices")) {
        g.ids.push_back(int_field(v, "id"));
        g.values.push_back(rat_field(v, "value"));
    }
    for (const json& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_number_integer() ||
            !e.at(1).is_number_integer())
            throw input_error("edges must be pairs of vertex ids");
        g.edges.emplace_back(g.vertex_index(e.at(0).get<long long>()),
                             g.vertex_index(e.at(1).get<long long>()));
    }
    auto errs = validate_pl_graph(g);
    if (!errs.empty()) throw input_error("invalid graph: " + errs.front());
    return g;
}

json grid_module_to_json(const GridModule2D& m) {
    const Window& w = m.window;
    json dims = json::array();
    for (long long i = w.x0; i <= w.x1; ++i) {
        json col = json::array();
        for (long long jj = w.y0; jj <= w.y1; ++jj) col.push_back(m.dim_at(i, jj));
        dims.push_back(std::move(col));
    }
    json hmaps = json::array(), vmaps = json::array();
    for (long long i = w.x0; i < w.x1; ++i)
        for (long long jj = w.y0; jj <= w.y1; ++jj) hmaps.push_back(matrix_to_json(m.hmap(i, jj)));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long jj = w.y0; jj < w.y1; ++jj) vmaps.push_back(matrix_to_json(m.vmap(i, jj)));
    return {{"field", m.field},
            {"window", {{"x0", w.x0}, {"y0", w.y0}, {"x1", w.x1}, {"y1", w.y1}}},
            {"dims", dims},
            {"hmaps", hmaps},
            {"vmaps", vmaps}};
}

GridModule2D grid_module_from_json(const json& j) {
    GridModule2D m;
    m.field = field_char(j);
    const json& wj = field(j, "window");
    m.window = {int_field(wj, "x0"), int_field(wj, "y0"), int_field(wj, "x1"),
                int_field(wj, "y1")};
    const Window& w = m.window;
    if (w.x0 > w.x1 || w.y0 > w.y1) throw input_error("grid window empty");
    const json& dims = array_field(j, "dims");
    if (dims.size() != w.nx()) throw input_error("grid dims width mismatch");
    m.dims.resize(w.nx() * w.ny());
    for (long long i = w.x0; i <= w.x1; ++i) {
        const json& col = dims.at(std::size_t(i - w.x0));
        if (!col.is_array() || col.size() != w.ny()) throw input_error("grid dims height mismatch");
        auto parsed = dims_from_json(col);
        for (long long jj = w.y0; jj <= w.y1; ++jj)
            m.dims[m.idx(i, jj)] = parsed[std::size_t(jj - w.y0)];
    }
    const json& hmaps = array_field(j, "hmaps");
    const json& vmaps = array_field(j, "vmaps");
    if (hmaps.size() != (w.nx() - 1) * w.ny() || vmaps.size() != w.nx() * (w.ny() - 1))
        throw input_error("grid map count mismatch");
    m.hmaps.assign(hmaps.size(), Matrix(0, 0, m.field));
    m.vmaps.assign(vmaps.size(), Matrix(0, 0, m.field));
    std::size_t hk = 0, vk = 0;
    for (long long i = w.x0; i < w.x1; ++i)
        for (long long jj = w.y0; jj <= w.y1; ++jj, ++hk)
            m.hmaps[m.hidx(i, jj)] =
                matrix_from_json(hmaps.at(hk), m.dim_at(i + 1, jj), m.dim_at(i, jj), m.field);
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long jj = w.y0; jj < w.y1; ++jj, ++vk)
            m.vmaps[m.vidx(i, jj)] =
                matrix_from_json(vmaps.at(vk), m.dim_at(i, jj + 1), m.dim_at(i, jj), m.field);
    m.validate();
    return m;
}

json grid_morphism_to_json(const GridMorphism2D& f) {
    json comps = json::array();
    for (const Matrix& c : f.components) comps.push_back(matrix_to_json(c));
    return {{"source", grid_module_to_json(f.source)},
            {"target", grid_module_to_json(f.target)},
            {"components", comps}};
}

GridMorphism2D grid_morphism_from_json(const json& j) {
    GridMorphism2D f;
    f.source = grid_module_from_json(field(j, "source"));
    f.target = grid_module_from_json(field(j, "target"));
    const json& comps = array_field(j, "components");
    if (comps.size() != f.source.dims.size()) throw input_error("grid morphism component count");
    const Window& w = f.source.window;
    std::size_t k = 0;
    f.components.assign(comps.size(), Matrix(0, 0, f.source.field));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long jj = w.y0; jj <= w.y1; ++jj, ++k)
            f.components[f.source.idx(i, jj)] = matrix_from_json(
                comps.at(k), f.target.dim_at(i, jj), f.source.dim_at(i, jj), f.source.field);
    f.validate();
    return f;
}

json generators_to_json(const GeneratorMultiset& g) {
    json pts = json::array();
    for (const auto& p : g) pts.push_back({{"x", p.first.str()}, {"y", p.second.str()}});
    return {{"generators", pts}};
}

GeneratorMultiset generators_from_json(const json& j) {
    GeneratorMultiset g;
    for (const json& p : array_field(j, "generators"))
        g.emplace_back(rat_field(p, "x"), rat_field(p, "y"));
    return g;
}

json matching_to_json(const Matching& m) {
    json pairs = json::array();
    for (const MatchPair& p : m) pairs.push_back({p.from, p.to});
    return {{"pairs", pairs}};
}

Matching matching_from_json(const json& j) {
    Matching m;
    for (const json& p : array_field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2 || !p.at(0).is_number_integer() ||
            !p.at(1).is_number_integer() || p.at(0).get<long long>() < 0 ||
            p.at(1).get<long long>() < 0)
            throw input_error("matching pairs must be index pairs");
        m.push_back({std::size_t(p.at(0).get<long long>()),
                     std::size_t(p.at(1).get<long long>())});
    }
    return m;
}

namespace {

// Support of the unit-scalar pair morphism: the source block intersected
// with the eps-shift preimage of the target block, for audit output.
json overlap_descriptor(const Block& j, const Block& k, const Rational& eps) {
    if (j.kind != k.kind) return nullptr;  // trivial pair, zero component
    Ext a2 = k.a, b2 = k.b;
    switch (k.kind) {
        case BlockKind::o: a2 = a2 + eps; b2 = b2 - eps; break;
        case BlockKind::co: a2 = a2 - eps; b2 = b2 - eps; break;
        case BlockKind::oc: a2 = a2 + eps; b2 = b2 + eps; break;
        default: a2 = a2 - eps; b2 = b2 + eps; break;
    }
    Ext a = j.a < a2 ? a2 : j.a;  // intersection tightens both bounds
    Ext b = j.b < b2 ? j.b : b2;
    if (k.kind != BlockKind::c && !(a < b)) return nullptr;
    return {{"kind", kind_str(j.kind)}, {"a", a.str()}, {"b", b.str()}};
}

}  // namespace

json witness_to_json(const InterleavingWitness& w) {
    json overlaps = json::array();
    for (const MatchPair& p : w.pairs)
        overlaps.push_back(overlap_descriptor(w.left[p.from], w.right[p.to], w.eps));
    json out = {{"eps", w.eps.str()},
                {"left", blocks_to_json(w.left)},
                {"right", blocks_to_json(w.right)},
                {"pairs", matching_to_json(w.pairs)["pairs"]}};
    out["overlaps"] = overlaps;
    return out;
}

InterleavingWitness witness_from_json(const json& j) {
    InterleavingWitness w;
    w.eps = rat_field(j, "eps");
    w.left = blocks_from_json(field(j, "left"));
    w.right = blocks_from_json(field(j, "right"));
    w.pairs = matching_from_json(json{{"pairs", array_field(j, "pairs")}});
    return w;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

}  // namespace tda
