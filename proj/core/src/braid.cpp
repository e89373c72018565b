#include "cpf/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "cpf/error.hpp"
#include "cpf/rep.hpp"

namespace cpf {

void validate_braid(const BraidWord& b) {
  if (b.strands == 0) throw ParseError("braid needs at least one strand");
  if (b.strands > kMaxFactors) {
    throw ParseError("braid has " + std::to_string(b.strands) + " strands; at most " + std::to_string(kMaxFactors) +
                     " are supported");
  }
  for (int g : b.letters) {
    if (g == 0) throw ParseError("generator 0 is not allowed");
    if (static_cast<std::size_t>(std::abs(g)) >= b.strands) {
      throw ParseError("generator " + std::to_string(g) + " out of range for " + std::to_string(b.strands) +
                       " strands");
    }
  }
}

BraidWord parse_braid(std::string_view text, std::size_t strands) {
  BraidWord b{strands, {}};
  std::size_t k = 0;
  while (k < text.size()) {
    if (text[k] == ' ' || text[k] == '\t' || text[k] == '\n' || text[k] == '\r') {
      ++k;
      continue;
    }
    std::size_t j = k;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r') ++j;
    std::string_view tok = text.substr(k, j - k);
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    int g = 0;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), g);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size()) {
      throw ParseError("malformed braid letter '" + std::string(tok) + "'");
    }
    b.letters.push_back(g);
    k = j;
  }
  validate_braid(b);
  return b;
}

std::string braid_text(const BraidWord& b) {
  std::string out;
  for (int g : b.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g);
  }
  return out;
}

Permutation underlying_permutation(const BraidWord& b) {
  validate_braid(b);
  std::vector<std::size_t> at(b.strands);  // strand (by bottom position) currently at each position
  std::iota(at.begin(), at.end(), 0);
  for (int g : b.letters) {
    const auto p = static_cast<std::size_t>(std::abs(g)) - 1;
    std::swap(at[p], at[p + 1]);
  }
  Permutation perm{std::vector<std::size_t>(b.strands)};
  for (std::size_t pos = 0; pos < b.strands; ++pos) perm.image[at[pos]] = pos;
  return perm;
}

std::vector<std::vector<std::size_t>> components(const BraidWord& b) {
  const Permutation perm = underlying_permutation(b);
  std::vector<bool> seen(b.strands, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < b.strands; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t k = start; !seen[k]; k = perm.image[k]) {
      seen[k] = true;
      cycle.push_back(k);
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

std::optional<ColoringViolation> validate_coloring(const BraidWord& b, const Coloring& c) {
  if (c.size() != b.strands) {
    return ColoringViolation{{},
                             "coloring has " + std::to_string(c.size()) + " entries for " +
                                 std::to_string(b.strands) + " strands"};
  }
  for (const auto& cycle : components(b)) {
    for (std::size_t pos : cycle) {
      if (c[pos].kind != VariableKind::kColor) {
        return ColoringViolation{cycle, "strand " + std::to_string(pos + 1) + " is not colored by a color variable"};
      }
      if (!(c[pos] == c[cycle.front()])) {
        std::string positions;
        for (std::size_t q : cycle) positions += (positions.empty() ? "" : ",") + std::to_string(q + 1);
        return ColoringViolation{cycle, "component {" + positions + "} carries more than one color"};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> auto_color_names(const BraidWord& b) {
  std::vector<std::string> names(b.strands);
  std::size_t next = 1;
  for (const auto& cycle : components(b)) {
    const std::string name = "t" + std::to_string(next++);
    for (std::size_t pos : cycle) names[pos] = name;
  }
  return names;
}

namespace {

void require_valid(const BraidWord& b, const Coloring& c) {
  validate_braid(b);
  if (auto bad = validate_coloring(b, c)) throw ColoringError(bad->message);
}

}  // namespace

SparseMap braid_operator(const RingPtr& ring, const BraidWord& b, const Coloring& c) {
  require_valid(b, c);
  std::vector<Variable> cols = c;
  SparseMap op = SparseMap::identity(ring, ColorSpace::of(cols));
  for (int g : b.letters) {
    const auto p = static_cast<std::size_t>(std::abs(g)) - 1;
    const Variable x = cols[p];
    const Variable y = cols[p + 1];
    // both cases map V(x) (x) V(y) -> V(y) (x) V(x)
    const SparseMap crossing = g > 0 ? r_pos(ring, x, y) : r_neg(ring, y, x);
    const ColorSpace left = ColorSpace::of({cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(p)});
    const ColorSpace right = ColorSpace::of({cols.begin() + static_cast<std::ptrdiff_t>(p) + 2, cols.end()});
    op = compose(pad(crossing, left, right), op);
    std::swap(cols[p], cols[p + 1]);
  }
  return op;
}

CpfResult cpf(const RingPtr& ring, const BraidWord& b, const Coloring& c, std::size_t open_strand) {
  require_valid(b, c);
  if (open_strand >= b.strands) throw ShapeError("open strand out of range");
  const SparseMap closed = partial_qtrace(braid_operator(ring, b, c), open_strand);
  const auto scalar = closed.scalar_value();
  if (!scalar) {
    throw InternalError("closure of braid '" + braid_text(b) + "' is not a scalar: diagonal (" +
                        closed.at(0, 0).to_string() + ", " + closed.at(1, 1).to_string() + "), off-diagonal (" +
                        closed.at(0, 1).to_string() + ", " + closed.at(1, 0).to_string() + ")");
  }
  const Variable color = c[open_strand];
  return CpfResult{frac_reduce(RestrictedFraction(*scalar, {{color, 1}})), color, open_strand};
}

CpfResult disjoint_union_cpf(const RingPtr& ring, const BraidWord& b, const Coloring& c,
                             std::size_t open_strand, Variable unknot_color) {
  BraidWord wider = b;
  wider.strands += 1;
  Coloring colors = c;
  colors.push_back(unknot_color);
  return cpf(ring, wider, colors, open_strand);
}

}  // namespace cpf
