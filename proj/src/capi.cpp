#include "tda.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tda/extension.hpp"
#include "tda/json_io.hpp"
#include "tda/levelset.hpp"
#include "tda/witness.hpp"

using nlohmann::json;

struct tda_doc {
    json j;
};

namespace {

thread_local std::string g_last_error;

tda_status fail(tda_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

tda_status set_out(tda_doc** out, json j, tda_status s = TDA_OK) {
    *out = new tda_doc{std::move(j)};
    return s;
}

// Runs the body, translating exceptions into status codes.
template <typename F>
tda_status guarded(F&& body) {
    try {
        return body();
    } catch (const tda::input_error& e) {
        return fail(TDA_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(TDA_ERR_INTERNAL, e.what());
    }
}

std::vector<tda::Dir> orientation_of(const tda::ZigzagModule& v) {
    std::vector<tda::Dir> o;
    for (const auto& a : v.arrows) o.push_back(a.dir);
    return o;
}

}  // namespace

extern "C" {

const char* tda_schema_version(void) { return tda::kSchemaVersion; }

const char* tda_last_error(void) { return g_last_error.c_str(); }

tda_status tda_doc_parse(const char* text, tda_doc** out) {
    if (!text || !out) return fail(TDA_ERR_INVALID, "null argument");
    try {
        return set_out(out, tda::parse_json_text(text));
    } catch (const tda::input_error& e) {
        return fail(TDA_ERR_PARSE, e.what());
    }
}

tda_status tda_doc_dump(const tda_doc* doc, char** out_text) {
    if (!doc || !out_text) return fail(TDA_ERR_INVALID, "null argument");
    std::string s = doc->j.dump(2);
    *out_text = static_cast<char*>(std::malloc(s.size() + 1));
    if (!*out_text) return fail(TDA_ERR_INTERNAL, "allocation failed");
    std::memcpy(*out_text, s.c_str(), s.size() + 1);
    return TDA_OK;
}

void tda_doc_free(tda_doc* doc) { delete doc; }

void tda_str_free(char* text) { std::free(text); }

tda_status tda_decompose(const tda_doc* zigzag, tda_doc** out) {
    if (!zigzag || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::ZigzagModule v = tda::zigzag_from_json(zigzag->j);
        json bars = json::array();
        for (const auto& bar : tda::decompose_zz(v)) bars.push_back({bar.first, bar.last});
        return set_out(out, json{{"bars", bars}});
    });
}

tda_status tda_extend(const tda_doc* zigzag, tda_doc** out) {
    if (!zigzag || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::ZigzagModule v = tda::zigzag_from_json(zigzag->j);
        auto blocks = tda::extend_barcode(tda::decompose_zz(v), orientation_of(v));
        return set_out(out, tda::blocks_to_json(blocks));
    });
}

tda_status tda_bottleneck(const tda_doc* a, const tda_doc* b, const char* kind, tda_doc** out) {
    if (!a || !b || !kind || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::Ext d;
        std::string k = kind;
        if (k == "1d")
            d = tda::bottleneck_1d(tda::barcode1d_from_json(a->j),
                                   tda::barcode1d_from_json(b->j));
        else if (k == "block")
            d = tda::bottleneck_block(tda::blocks_from_json(a->j), tda::blocks_from_json(b->j));
        else if (k == "zigzag")
            d = tda::zz_bottleneck(tda::zigzag_from_json(a->j), tda::zigzag_from_json(b->j));
        else
            return fail(TDA_ERR_INVALID, "bottleneck kind must be 1d, block or zigzag");
        return set_out(out, json{{"distance", d.str()}});
    });
}

tda_status tda_levelset(const tda_doc* graph, int degree, tda_doc** out) {
    if (!graph || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::PLGraph g = tda::pl_graph_from_json(graph->j);
        tda::BlockBarcode blocks = tda::interlevel_blocks(g, degree);
        bool certified = tda::verify_pointwise(g, degree, blocks);
        json rep = {{"blocks", tda::blocks_to_json(blocks)["blocks"]},
                    {"levels", tda::barcode1d_to_json(tda::level_barcode(g, degree))["intervals"]},
                    {"certified", certified}};
        if (!certified)
            return set_out(out, std::move(rep),
                           fail(TDA_ERR_CERT, "pointwise certificate failed"));
        return set_out(out, std::move(rep));
    });
}

tda_status tda_perturb(const tda_doc* graph, const char* delta, int trials,
                       unsigned long long seed, tda_doc** out) {
    if (!graph || !delta || !out) return fail(TDA_ERR_INVALID, "null argument");
    if (trials < 1) return fail(TDA_ERR_INVALID, "trial count must be positive");
    return guarded([&] {
        tda::PLGraph g = tda::pl_graph_from_json(graph->j);
        tda::Rational d = tda::Rational::parse(delta);
        auto b0 = tda::interlevel_blocks(g, 0);
        auto b1 = tda::interlevel_blocks(g, 1);
        auto l0 = tda::level_barcode(g, 0);
        auto l1 = tda::level_barcode(g, 1);
        json rows = json::array();
        bool all_pass = true;
        for (int t = 0; t < trials; ++t) {
            tda::PerturbResult pr = tda::perturb(g, d, seed + std::uint64_t(t));
            tda::Ext bound(pr.realized);
            tda::Ext db0 = tda::bottleneck_block(b0, tda::interlevel_blocks(pr.graph, 0));
            tda::Ext db1 = tda::bottleneck_block(b1, tda::interlevel_blocks(pr.graph, 1));
            tda::Ext dl0 = tda::bottleneck_1d(l0, tda::level_barcode(pr.graph, 0));
            tda::Ext dl1 = tda::bottleneck_1d(l1, tda::level_barcode(pr.graph, 1));
            bool pass = db0 <= bound && db1 <= bound && dl0 <= bound && dl1 <= bound;
            all_pass = all_pass && pass;
            rows.push_back({{"trial", t},
                            {"d_inf", pr.realized.str()},
                            {"d_b0", db0.str()},
                            {"d_b1", db1.str()},
                            {"d_l0", dl0.str()},
                            {"d_l1", dl1.str()},
                            {"pass", pass}});
        }
        json rep = {{"trials", rows}, {"all_pass", all_pass}};
        if (!all_pass)
            return set_out(out, std::move(rep),
                           fail(TDA_ERR_CERT, "a perturbation trial violated the bound"));
        return set_out(out, std::move(rep));
    });
}

tda_status tda_witness(const tda_doc* input, const char* eps, tda_doc** out) {
    if (!input || !eps || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::BlockBarcode left = tda::blocks_from_json(
            input->j.contains("left") ? input->j.at("left") : json());
        tda::BlockBarcode right = tda::blocks_from_json(
            input->j.contains("right") ? input->j.at("right") : json());
        tda::Matching sigma = tda::matching_from_json(input->j);
        tda::Rational e = tda::Rational::parse(eps);
        tda::InterleavingWitness w;
        try {
            w = tda::witness_from_matching(sigma, left, right, e);
        } catch (const tda::input_error& ex) {
            return set_out(out, json{{"accepted", false}, {"verified", false}},
                           fail(TDA_ERR_CERT, ex.what()));
        }
        bool ok = tda::verify_witness(w);
        json rep = {{"accepted", true}, {"verified", ok},
                    {"witness", tda::witness_to_json(w)}};
        if (!ok)
            return set_out(out, std::move(rep),
                           fail(TDA_ERR_CERT, "witness failed verification"));
        return set_out(out, std::move(rep));
    });
}

tda_status tda_betti(const tda_doc* module, long long zx, long long zy, tda_doc** out) {
    if (!module || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::GridModule2D m = tda::grid_module_from_json(module->j);
        return set_out(out, json{{"xi1", tda::koszul_xi1(m, zx, zy)}});
    });
}

tda_status tda_interpolant(const tda_doc* morphism, unsigned long long eps, tda_doc** out) {
    if (!morphism || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::GridMorphism2D f = tda::grid_morphism_from_json(morphism->j);
        tda::Submodule2D l = tda::interpolant(f, std::size_t(eps));
        bool free_mod = true;
        const tda::Window& w = l.module.window;
        for (long long i = w.x0 + 1; i <= w.x1 && free_mod; ++i)
            for (long long j = w.y0 + 1; j <= w.y1 && free_mod; ++j)
                if (tda::koszul_xi1(l.module, i, j) != 0) free_mod = false;
        json rep = {{"module", tda::grid_module_to_json(l.module)}, {"free", free_mod}};
        if (!free_mod)
            return set_out(out, std::move(rep),
                           fail(TDA_ERR_CERT, "interpolant is not free on the window"));
        return set_out(out, std::move(rep));
    });
}

tda_status tda_reeb_bound(const tda_doc* g1, const tda_doc* g2, tda_doc** out) {
    if (!g1 || !g2 || !out) return fail(TDA_ERR_INVALID, "null argument");
    return guarded([&] {
        tda::Ext b = tda::reeb_lower_bound(tda::pl_graph_from_json(g1->j),
                                           tda::pl_graph_from_json(g2->j));
        return set_out(out, json{{"bound", b.str()}});
    });
}

}  // extern "C"
