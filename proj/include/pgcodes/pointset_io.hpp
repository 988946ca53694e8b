#pragma once

// Point-set text files: one point per line, coordinates separated by commas,
// each coordinate given by its coefficients c_0 .. c_{h-1} separated by
// spaces (a single integer when h = 1). Blank lines and '#' comments are
// ignored. Example for GF(4): "1, 0 1, 1 1".

#include "pgcodes/bits.hpp"
#include "pgcodes/geometry.hpp"

#include <istream>
#include <string>

namespace pgcodes::io {

// Non-canonical representatives are normalized; duplicates collapse.
// Throws ParseError with the offending line number.
Bits read_point_set(const geom::Space& space, std::istream& in);
Bits parse_point_set(const geom::Space& space, const std::string& text);

std::string format_point(const geom::Space& space, std::size_t index);

// One point per line, in global point order.
std::string write_point_set(const geom::Space& space, const Bits& points);

} // namespace pgcodes::io
