#pragma once

// nlohmann/json bindings shared by the core sources. Not installed.

#include <json.hpp>

#include "gembench/corpus.hpp"
#include "gembench/generators.hpp"

namespace gembench {

using Json = nlohmann::json;

namespace gen {
void to_json(Json& j, const GeneratorSpec& spec);
void from_json(const Json& j, GeneratorSpec& spec);
}  // namespace gen


/// Reads an optional field, keeping the default when absent.
template <typename T>
void read_optional(const Json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) out = it->template get<T>();
}

Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace gembench
