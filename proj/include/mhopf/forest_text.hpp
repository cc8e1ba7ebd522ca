#pragma once

#include <string>
#include <string_view>

#include "mhopf/decoration.hpp"
#include "mhopf/forest.hpp"

namespace mhopf {

// Bracket notation:
//   forest := "1" | tree (WS tree)*
//   tree   := IDENT | IDENT "[" forest "]"
// Decoration kinds come from the registry. Throws ParseError (with byte
// offset), RegistryError for unknown names, DomainError when an X decoration
// is given children.
Forest parse_forest(std::string_view text, const DecorationRegistry& registry);

inline const std::string& print_forest(const Forest& f) { return f.text(); }

}  // namespace mhopf
