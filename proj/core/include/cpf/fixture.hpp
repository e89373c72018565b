#pragma once

#include <string>
#include <string_view>

#include "cpf/sparse_map.hpp"

namespace cpf {

// Fixture text: one "row col polynomial" line per nonzero entry, 1-based
// indices, in (row, col) order. Blank lines and '#' comments are ignored.

std::string to_fixture(const SparseMap& m);

/// Throws ParseError on malformed lines, ShapeError on out-of-range indices.
SparseMap parse_fixture(const RingPtr& ring, const ColorSpace& domain, const ColorSpace& codomain,
                        std::string_view text);

}  // namespace cpf
