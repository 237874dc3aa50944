#pragma once
// JSON serialization for every artifact the tools exchange.  Numbers that
// must stay exact (all barcode geometry) travel as strings "p/q", "inf",
// "-inf"; matrix entries and dimensions are plain integers.  Parsers throw
// input_error with a short description on malformed documents.

#include <string>

#include <json.hpp>

#include "tda/blocks.hpp"
#include "tda/grid2d.hpp"
#include "tda/intervals.hpp"
#include "tda/levelset.hpp"
#include "tda/persistence1d.hpp"
#include "tda/witness.hpp"
#include "tda/zigzag.hpp"

namespace tda {

extern const char* const kSchemaVersion;  // "1"

nlohmann::json barcode1d_to_json(const Barcode1D& b);
Barcode1D barcode1d_from_json(const nlohmann::json& j);

nlohmann::json blocks_to_json(const BlockBarcode& b);
BlockBarcode blocks_from_json(const nlohmann::json& j);

nlohmann::json zigzag_to_json(const ZigzagModule& v);
ZigzagModule zigzag_from_json(const nlohmann::json& j);

nlohmann::json line_module_to_json(const LineModule& v);
LineModule line_module_from_json(const nlohmann::json& j);

nlohmann::json line_morphism_to_json(const LineMorphism& f);
LineMorphism line_morphism_from_json(const nlohmann::json& j);

nlohmann::json pl_graph_to_json(const PLGraph& g);
PLGraph pl_graph_from_json(const nlohmann::json& j);

nlohmann::json grid_module_to_json(const GridModule2D& m);
GridModule2D grid_module_from_json(const nlohmann::json& j);

nlohmann::json grid_morphism_to_json(const GridMorphism2D& f);
GridMorphism2D grid_morphism_from_json(const nlohmann::json& j);

nlohmann::json generators_to_json(const GeneratorMultiset& g);
GeneratorMultiset generators_from_json(const nlohmann::json& j);

nlohmann::json matching_to_json(const Matching& m);
Matching matching_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const InterleavingWitness& w);
InterleavingWitness witness_from_json(const nlohmann::json& j);

// Parse with input_error instead of nlohmann exceptions.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace tda
