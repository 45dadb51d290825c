#ifndef BIPMIN_IO_HPP
#define BIPMIN_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// Wire format: {"red": [...], "blue": [...], "edges": [["u","v"], ...]}
// with the red endpoint first in every pair. Unknown keys are ignored on
// input so generators may attach metadata.
nlohmann::json to_json(const BiGraph& g);
BiGraph bigraph_from_json(const nlohmann::json& j);

// Plain-text alternative:
//   red: a1 a2
//   blue: b1 b2
//   a1 b1
// '#' starts a comment; blank lines are skipped.
std::string to_text(const BiGraph& g);
BiGraph bigraph_from_text(const std::string& text);

// Autodetects JSON vs text by the first non-space character.
BiGraph read_bigraph(std::istream& in);
BiGraph read_bigraph_file(const std::string& path);

} // namespace bipmin

#endif
