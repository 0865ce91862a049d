// Text formats for presentations.
//
//   # comment
//   algebra G1
//   vertices 1 2 3
//   arrow a: 1 -> 2
//   relation a b
//
// Syntax errors raise ParseError with a 1-based line and column. Semantic
// errors (unknown ids, words that do not compose, short relations, infinite
// dimension) raise ValidationError.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gorquiv/presentation.hpp"

namespace gorquiv {

MonomialPresentation parse_presentation(std::string_view text);
MonomialPresentation load_presentation(const std::string& path);

// Declaration order and the original generator list are preserved.
std::string serialize(const MonomialPresentation& pres);

nlohmann::json to_json(const MonomialPresentation& pres);
MonomialPresentation presentation_from_json(const nlohmann::json& j);

// Graphviz digraph. Relations appear as comment lines "// relation: a b".
std::string to_dot(const MonomialPresentation& pres);

}  // namespace gorquiv
