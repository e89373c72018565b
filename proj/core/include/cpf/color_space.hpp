#pragma once

#include <cstdint>
#include <vector>

#include "cpf/ring.hpp"

#ifndef CPF_MAX_FACTORS
#define CPF_MAX_FACTORS 12
#endif

namespace cpf {

/// Upper bound on tensor factors, i.e. dimensions up to 2^12.
inline constexpr std::size_t kMaxFactors = CPF_MAX_FACTORS;

/// One tensor factor: V(t), or its dual V(t)* when `dual` is set.
struct Factor {
  Variable color;
  bool dual = false;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Ordered tensor product V(t_1) (x) ... (x) V(t_n). Basis index digits run
/// left to right, leftmost factor most significant; digit 0 is v0 and digit
/// 1 is F v0 (dual basis on dual factors). The empty space is the ground
/// field.
class ColorSpace {
 public:
  ColorSpace() = default;
  explicit ColorSpace(std::vector<Factor> factors);
  static ColorSpace of(const std::vector<Variable>& colors);
  static ColorSpace dual_of(Variable color) { return ColorSpace({{color, true}}); }

  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  std::uint32_t dimension() const { return std::uint32_t{1} << factors_.size(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& operator[](std::size_t pos) const { return factors_.at(pos); }
  std::vector<Variable> colors() const;

  /// Basis digit of `index` at tensor position `pos`.
  int digit(std::uint32_t index, std::size_t pos) const {
    return static_cast<int>((index >> (factors_.size() - 1 - pos)) & 1U);
  }

  friend bool operator==(const ColorSpace&, const ColorSpace&) = default;
  friend ColorSpace operator+(const ColorSpace& a, const ColorSpace& b);

  std::string describe(const Ring& ring) const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace cpf
