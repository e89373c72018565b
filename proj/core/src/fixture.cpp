#include "cpf/fixture.hpp"

#include <charconv>

#include "cpf/error.hpp"

namespace cpf {

std::string to_fixture(const SparseMap& m) {
  std::string out;
  for (const auto& [key, v] : m.entries()) {
    out += std::to_string(key.first + 1) + " " + std::to_string(key.second + 1) + " " + v.to_string() + "\n";
  }
  return out;
}

namespace {

std::string_view next_field(std::string_view& line) {
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  const auto end = line.find(' ');
  std::string_view field = line.substr(0, end);
  line.remove_prefix(end == std::string_view::npos ? line.size() : end);
  return field;
}

SparseMap::Index parse_index(std::string_view field, std::size_t line_no) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value == 0) {
    throw ParseError("fixture line " + std::to_string(line_no) + ": bad index '" + std::string(field) + "'");
  }
  return value - 1;
}

}  // namespace

SparseMap parse_fixture(const RingPtr& ring, const ColorSpace& domain, const ColorSpace& codomain,
                        std::string_view text) {
  std::vector<SparseMap::Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line.remove_prefix(first);
    const auto row = parse_index(next_field(line), line_no);
    const auto col = parse_index(next_field(line), line_no);
    if (line.find_first_not_of(' ') == std::string_view::npos) {
      throw ParseError("fixture line " + std::to_string(line_no) + ": missing polynomial");
    }
    entries.emplace_back(row, col, LaurentPoly::parse(ring, line));
  }
  return SparseMap(ring, domain, codomain, std::move(entries));
}

}  // namespace cpf
