#pragma once

#include <string>

#include "tempra/model.hpp"

namespace tempra {

// Reads the JSON model format (see README, "Model files").  Malformed JSON
// and shape errors throw ParseError; reference and constraint problems
// surface as BuildError from the assembly step.
ModelDescription parse_model_description(const std::string& text);
Model parse_model(const std::string& text);

// Serializes back to the same format, always with explicit accessibility
// classes and rational-literal time keys.  parse_model(model_to_json(m))
// reproduces m exactly.
std::string model_to_json(const Model& m, int indent = 2);

}  // namespace tempra
