// Command-line harness over the C API.  Every subcommand reads JSON
// artifacts, runs one library operation and prints a report; exit codes
// separate input problems (2) from failed certificates (3).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tda.h"

namespace {

using nlohmann::json;

int exit_code(tda_status s) {
    switch (s) {
        case TDA_OK: return 0;
        case TDA_ERR_PARSE:
        case TDA_ERR_INVALID: return 2;
        case TDA_ERR_CERT: return 3;
        default: return 4;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct DocHandle {
    tda_doc* doc = nullptr;
    ~DocHandle() { tda_doc_free(doc); }
};

// Loads a file into a document or exits with code 2.
int load(const std::string& path, DocHandle& h) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    tda_status s = tda_doc_parse(text.c_str(), &h.doc);
    if (s != TDA_OK) {
        std::cerr << "error: " << path << ": " << tda_last_error() << "\n";
        return exit_code(s);
    }
    return 0;
}

json doc_json(const tda_doc* doc) {
    char* text = nullptr;
    if (tda_doc_dump(doc, &text) != TDA_OK) return json();
    json j = json::parse(text);
    tda_str_free(text);
    return j;
}

void print_tsv(const json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            // table of rows, e.g. perturbation trials
            const json& first = it.value().front();
            std::string header;
            for (auto col = first.begin(); col != first.end(); ++col)
                header += (header.empty() ? "" : "\t") + col.key();
            std::cout << header << "\n";
            for (const json& row : it.value()) {
                std::string line;
                for (auto col = row.begin(); col != row.end(); ++col) {
                    std::string cell = col.value().is_string()
                                           ? col.value().get<std::string>()
                                           : col.value().dump();
                    line += (line.empty() ? "" : "\t") + cell;
                }
                std::cout << line << "\n";
            }
        } else {
            std::string cell = it.value().is_string() ? it.value().get<std::string>()
                                                      : it.value().dump();
            std::cout << it.key() << "\t" << cell << "\n";
        }
    }
}

// Prints the report and frees it.  `pick`: when nonempty and the format is
// json, only that field is printed (compact command output).
int finish(tda_status s, tda_doc* out, const std::string& format, const std::string& pick) {
    DocHandle h;
    h.doc = out;
    if (s != TDA_OK && s != TDA_ERR_CERT) {
        std::cerr << "error: " << tda_last_error() << "\n";
        return exit_code(s);
    }
    if (!out) return exit_code(s);
    json rep = doc_json(out);
    if (format == "tsv") {
        print_tsv(rep);
    } else if (!pick.empty() && rep.contains(pick)) {
        const json& v = rep.at(pick);
        std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << rep.dump(2) << "\n";
    }
    if (s == TDA_ERR_CERT) std::cerr << "certificate failed: " << tda_last_error() << "\n";
    return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zigzag and block persistence toolbox"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 1;
    std::uint32_t field = 2;
    app.add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", seed, "base seed for randomized subcommands");
    app.add_option("--field", field, "expected field characteristic (prime)");

    std::string in1, in2, kind = "block", eps = "0", delta = "0";
    int degree = 0, trials = 1;
    long long zx = 0, zy = 0;
    std::uint64_t ieps = 0;

    auto* version = app.add_subcommand("schema-version", "print the JSON schema version");

    auto* decompose = app.add_subcommand("decompose", "zigzag module to interval barcode");
    decompose->add_option("input", in1)->required();

    auto* extend = app.add_subcommand("extend", "zigzag module to block barcode");
    extend->add_option("input", in1)->required();

    auto* bottleneck = app.add_subcommand("bottleneck", "bottleneck distance");
    bottleneck->add_option("--kind", kind)->check(CLI::IsMember({"1d", "block", "zigzag"}));
    bottleneck->add_option("a", in1)->required();
    bottleneck->add_option("b", in2)->required();

    auto* levelset = app.add_subcommand("levelset", "interlevel barcodes of a PL graph");
    levelset->add_option("--degree", degree)->check(CLI::Range(0, 1));
    levelset->add_option("input", in1)->required();

    auto* perturb = app.add_subcommand("perturb", "perturbation stability experiment");
    perturb->add_option("--delta", delta)->required();
    perturb->add_option("--trials", trials)->check(CLI::PositiveNumber);
    perturb->add_option("input", in1)->required();

    auto* witness = app.add_subcommand("witness", "verify a matching as an interleaving");
    witness->add_option("--eps", eps)->required();
    witness->add_option("input", in1)->required();

    auto* betti = app.add_subcommand("betti", "Koszul first Betti number at a point");
    betti->add_option("--zx", zx)->required();
    betti->add_option("--zy", zy)->required();
    betti->add_option("input", in1)->required();

    auto* interpolant = app.add_subcommand("interpolant", "interpolant of a grid morphism");
    interpolant->add_option("--eps", ieps)->required();
    interpolant->add_option("input", in1)->required();

    auto* reeb = app.add_subcommand("reeb-bound", "Reeb distance lower bound");
    reeb->add_option("a", in1)->required();
    reeb->add_option("b", in2)->required();

    CLI11_PARSE(app, argc, argv);

    if (field < 2) {
        std::cerr << "error: field characteristic must be a prime\n";
        return 2;
    }

    if (version->parsed()) {
        if (format == "json")
            std::cout << json{{"schema_version", tda_schema_version()}}.dump() << "\n";
        else
            std::cout << "schema_version\t" << tda_schema_version() << "\n";
        return 0;
    }

    DocHandle a, b;
    tda_doc* out = nullptr;
    tda_status s = TDA_ERR_INTERNAL;
    std::string pick;

    if (decompose->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_decompose(a.doc, &out);
        pick = "bars";
    } else if (extend->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_extend(a.doc, &out);
        pick = "blocks";
    } else if (bottleneck->parsed()) {
        if (int rc = load(in1, a)) return rc;
        if (int rc = load(in2, b)) return rc;
        s = tda_bottleneck(a.doc, b.doc, kind.c_str(), &out);
        pick = "distance";
    } else if (levelset->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_levelset(a.doc, degree, &out);
    } else if (perturb->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_perturb(a.doc, delta.c_str(), trials, seed, &out);
    } else if (witness->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_witness(a.doc, eps.c_str(), &out);
    } else if (betti->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_betti(a.doc, zx, zy, &out);
        pick = "xi1";
    } else if (interpolant->parsed()) {
        if (int rc = load(in1, a)) return rc;
        s = tda_interpolant(a.doc, ieps, &out);
    } else if (reeb->parsed()) {
        if (int rc = load(in1, a)) return rc;
        if (int rc = load(in2, b)) return rc;
        s = tda_reeb_bound(a.doc, b.doc, &out);
        pick = "bound";
    }

    return finish(s, out, format, pick);
}
