#pragma once

// Element grammar and JSON forms.
//
//   n=<arity>; <dom>-><ran>[~](, <dom>-><ran>[~])*
//
// `~` marks a flipped rule and `*` is the empty word, e.g.
// `n=2; 0->00, 10->01, 11->1` or `n=2; *->*~` for the global flip.

#include <string>
#include <string_view>

#include <json.hpp>

#include "cantordiff/dynamics.hpp"

namespace cantordiff {

/// Canonical text of the element as given (rules sorted by domain). For
/// reduced elements this is the canonical serialization used as a key.
std::string format_element(const Element& g);

/// Parses and reduces. Throws ParseError with the offending offset, or
/// InvalidElement when a side is not a complete prefix code.
Element parse_element(std::string_view text);
/// Parses without reducing.
Element parse_element_unreduced(std::string_view text);

nlohmann::json to_json(const Element& g);
Element element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FixedSet& s);
nlohmann::json to_json(const OrderResult& r);

/// `{clopen: {..}, isolated: [(address, p/q), ...]}`
std::string to_string(const FixedSet& s);

}  // namespace cantordiff
