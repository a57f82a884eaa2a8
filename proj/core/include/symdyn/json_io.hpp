#pragma once

#include <json.hpp>

#include <string>

#include "symdyn/entropy.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/int_matrix.hpp"
#include "symdyn/invariants.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/sft.hpp"
#include "symdyn/sgap.hpp"

namespace symdyn {

using Json = nlohmann::ordered_json;

// Inline JSON text or a path to a JSON file.
Json load_json(const std::string& text_or_path);

Word word_from_json(const Json& j, const Alphabet& alphabet, const std::string& where = "");
Json word_to_json(const Word& w);

ForbiddenSetSFT sft_from_json(const Json& j);
Json sft_to_json(const ForbiddenSetSFT& sft);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

SignedBFGroup bf_from_json(const Json& j);
Json bf_to_json(const SignedBFGroup& g);

Json entropy_to_json(const EntropyEstimate& e);

SGapSet sgap_from_json(const Json& j);
Json sgap_to_json(const SGapSet& s);
Json classification_to_json(const Classification& c);
Json verdict_to_json(const FEVerdict& v);

// {"source": sft, "moves": [...]}; `source` may instead be supplied separately.
MovePipeline pipeline_from_json(const Json& j, const ForbiddenSetSFT* source = nullptr);
MoveSpec move_spec_from_json(const Json& m, const Alphabet& alphabet, const std::string& where = "");

// Recognised document kinds; "auto" guesses from the shape.
std::string detect_kind(const Json& j);
// Throws InputError naming the offending location.
std::string validate_document(const Json& j, const std::string& kind = "auto");

}  // namespace symdyn
