#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpf/restricted_fraction.hpp"
#include "cpf/sparse_map.hpp"

namespace cpf {

/// Sign of cpf(sigma_1^2) under the convention that a positive generator is
/// the braiding r_pos. Every signed comparison in the test suites is made
/// relative to this value.
inline constexpr int kHopfSign = +1;

/// Word in the braid group B_n. Letters are signed generator indices
/// +-g with 1 <= g <= n-1; the empty word is the identity braid.
struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws ParseError unless every letter is a nonzero generator in range.
void validate_braid(const BraidWord& b);

/// Whitespace-separated nonzero integers. Throws ParseError.
BraidWord parse_braid(std::string_view text, std::size_t strands);

std::string braid_text(const BraidWord& b);

/// image[bottom position] = top position (0-based).
struct Permutation {
  std::vector<std::size_t> image;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation underlying_permutation(const BraidWord& b);

/// Cycles of the underlying permutation, i.e. the closure's link components.
/// Each cycle is sorted and cycles are ordered by their smallest position.
std::vector<std::vector<std::size_t>> components(const BraidWord& b);

/// Color of each bottom strand position.
using Coloring = std::vector<Variable>;

struct ColoringViolation {
  std::vector<std::size_t> cycle;
  std::string message;
};

/// nullopt when the coloring has one entry per strand and is constant on
/// every component.
std::optional<ColoringViolation> validate_coloring(const BraidWord& b, const Coloring& c);

/// Names t1, t2, ... per component, numbered by smallest strand position,
/// returned per strand.
std::vector<std::string> auto_color_names(const BraidWord& b);

/// Bottom-to-top composition of the crossing maps, padded with identities,
/// with colors carried through each crossing. Throws ColoringError.
SparseMap braid_operator(const RingPtr& ring, const BraidWord& b, const Coloring& c);

struct CpfResult {
  RestrictedFraction value;
  Variable open_color;
  std::size_t open_strand = 0;
};

/// Closes every strand except `open_strand` and divides the resulting scalar
/// by (t - t^-1) for the open component's color t. Throws ColoringError,
/// ShapeError for a bad position, and InternalError if the closure is not a
/// scalar.
CpfResult cpf(const RingPtr& ring, const BraidWord& b, const Coloring& c, std::size_t open_strand);

/// cpf of the closure of b together with a split unknot colored
/// `unknot_color` (an extra strand with no crossings).
CpfResult disjoint_union_cpf(const RingPtr& ring, const BraidWord& b, const Coloring& c,
                             std::size_t open_strand, Variable unknot_color);

}  // namespace cpf
