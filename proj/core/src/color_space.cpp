#include "cpf/color_space.hpp"

#include <string>

#include "cpf/error.hpp"

namespace cpf {

ColorSpace::ColorSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.size() > kMaxFactors) {
    throw ShapeError("color space with " + std::to_string(factors_.size()) + " factors exceeds the cap of " +
                     std::to_string(kMaxFactors));
  }
}

ColorSpace ColorSpace::of(const std::vector<Variable>& colors) {
  std::vector<Factor> f;
  f.reserve(colors.size());
  for (const auto& c : colors) f.push_back({c, false});
  return ColorSpace(std::move(f));
}

std::vector<Variable> ColorSpace::colors() const {
  std::vector<Variable> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.color);
  return out;
}

ColorSpace operator+(const ColorSpace& a, const ColorSpace& b) {
  std::vector<Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return ColorSpace(std::move(f));
}

std::string ColorSpace::describe(const Ring& ring) const {
  if (factors_.empty()) return "C";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " (x) ";
    out += "V(" + ring.name(f.color) + ")";
    if (f.dual) out += "*";
  }
  return out;
}

}  // namespace cpf
