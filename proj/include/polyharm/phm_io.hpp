#pragma once

// .phm text format, one directive per line:
//
//   # comment
//   p <int>
//   a <n> <k> <re> <im>
//   b <n> <k> <re> <im>
//
// <re>/<im> are "num/den", integer or decimal literals. The header comes
// before any coefficient line, (letter, n, k) may not repeat, and
// "a 1 1 1 0" is mandatory.

#include <istream>
#include <string>
#include <string_view>

#include "polyharm/series.hpp"

namespace phm {

/// Throws SyntaxError (with line number) or InvalidMap.
PolyharmonicMap parse_map(std::string_view text);
PolyharmonicMap read_map_file(const std::string& path);

std::string serialize_map(const PolyharmonicMap& f);
void write_map_file(const std::string& path, const PolyharmonicMap& f);

}  // namespace phm
