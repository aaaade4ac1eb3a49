#pragma once

#include <string>
#include <string_view>

#include "fsp/canon.hpp"

namespace fsp {

// Line based object files, '#' starts a comment:
//
//   field: F3
//   object: rep            (or linrel, pairrel)
//   quiver: K              (rep)
//   dims: 2 1              (rep)
//   map alpha:             (rep, one per arrow in order)
//   1x2
//   1 0
//   spaces: 2 2            (linrel, pairrel)
//   relation R:            (linrel; pairrel has R1 and R2)
//   4x1
//   ...
//
// A relation block lists spanning columns in V1 + V2 (top block V1).
// Throws ParseError on malformed text; validation failures keep their own
// kinds (ShapeError, DimensionMismatch).
Object parse_object(std::string_view text);
Object read_object_file(const std::string& path);
std::string object_text(const Object& obj);

}  // namespace fsp
