#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "corrkit/corr.hpp"
#include "corrkit/prof.hpp"

namespace corrkit {

using Json = nlohmann::json;

// Schema violation with a JSON-pointer-style path to the offending value.
struct ParseError : std::runtime_error {
  std::string path;
  ParseError(std::string p, const std::string& msg)
      : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

// Values serialize with sorted keys and no whitespace variance; parse of a
// serialization compares byte-for-byte.
std::string canonical(const Json& j);
Json parse_text(const std::string& text);  // wraps syntax errors in ParseError

Json to_json(const SimplexRef& r);
Json to_json(const SimplicialSet& X);
Json to_json(const SimplicialMap& f);
Json to_json(const FiniteCategory& C);
Json to_json(const FunctorData& F);
Json to_json(const Profunctor& u);
Json to_json(const CatDiagram& D);

SimplexRef ref_from_json(const Json& j, const std::string& path);
SsetPtr sset_from_json(const Json& j, const std::string& path = "$");
SimplicialMap map_from_json(const Json& j, const std::string& path = "$");
CatPtr cat_from_json(const Json& j, const std::string& path = "$");
FunctorData functor_from_json(const Json& j, const std::string& path = "$");
Profunctor prof_from_json(const Json& j, const std::string& path = "$");
CatDiagram cat_diagram_from_json(const Json& j, const std::string& path = "$");

// {"kind": ..., "value": ...} envelope used by files and the workspace.
Json wrap(const std::string& kind, const Json& value);
std::pair<std::string, Json> unwrap(const Json& j, const std::string& path = "$");

}  // namespace corrkit
