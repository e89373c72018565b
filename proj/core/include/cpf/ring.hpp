#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpf {

/// Color variables (t_i) take any integer exponent. The formal variable
/// (alpha) only appears with non-negative exponents.
enum class VariableKind { kColor, kFormal };

struct Variable {
  std::uint32_t id = 0;
  VariableKind kind = VariableKind::kColor;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) { return a.id <=> b.id; }
};

struct VariableSpec {
  std::string name;
  VariableKind kind = VariableKind::kColor;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// An immutable registry of named variables. Every polynomial carries the
/// ring it was built over; exponent vectors are indexed by variable id.
class Ring {
 public:
  static RingPtr make(std::vector<VariableSpec> specs);
  /// Shorthand: every name becomes a color variable.
  static RingPtr colors(const std::vector<std::string>& names);

  std::size_t size() const { return specs_.size(); }
  Variable at(std::uint32_t id) const;
  /// Throws cpf::Error when absent.
  Variable var(std::string_view name) const;
  std::optional<Variable> find(std::string_view name) const;
  const std::string& name(Variable v) const { return specs_.at(v.id).name; }
  const std::vector<VariableSpec>& specs() const { return specs_; }

  /// Same names and kinds in the same order.
  bool same_as(const Ring& other) const;

  static bool valid_name(std::string_view name);

 private:
  explicit Ring(std::vector<VariableSpec> specs) : specs_(std::move(specs)) {}
  std::vector<VariableSpec> specs_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cpf
