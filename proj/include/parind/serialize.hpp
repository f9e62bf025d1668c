#pragma once

#include <string>

#include <json.hpp>

#include "parind/coinvariants.hpp"
#include "parind/ext_predictor.hpp"
#include "parind/geom_lemma.hpp"
#include "parind/jh_lattice.hpp"

namespace parind {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses a datum spec from JSON text, or from flat TOML `key = value` lines.
DatumSpec parse_datum_spec(const std::string& text);
DatumSpec datum_spec_from_json(const Json& j);
Json datum_to_json(const RootDatum& rd);

/// Subsets as arrays of 1-based simple-root indices.
Json to_json(Subset s);
Subset subset_from_json(const Json& j, int rank);

/// Weyl elements as 1-based reduced words, e.g. [2,1] for s2 s1.
Json to_json(const WeylElement& w);
const WeylElement& weyl_from_json(const WeylGroup& W, const Json& j);

Json to_json(const SmoothCharacter& chi);
SmoothCharacter character_from_json(const RootDatum& rd, const Json& j);
SymbolAction symbol_action_from_json(const RootDatum& rd, const Json& j);

Json to_json(const GradedPiece& p);
GradedPiece graded_piece_from_json(const WeylGroup& W, const Json& j);
Json to_json(const Filtration& f);
Filtration filtration_from_json(const WeylGroup& W, const Json& j);

Json to_json(const SummandDescriptor& s);
SummandDescriptor summand_from_json(const WeylGroup& W, const Json& j);
Json to_json(const CoinvariantTable& t);
CoinvariantTable coinvariants_from_json(const WeylGroup& W, const Json& j);

Json to_json(const ExtPrediction& e);
ExtPrediction prediction_from_json(const WeylGroup& W, const Json& j);

Json to_json(const MultFreeModule& m);
Json to_json(const CoefficientComplex& cx);

}  // namespace parind
