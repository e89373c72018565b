#include "cpf/ring.hpp"

#include <cctype>
#include <set>

#include "cpf/error.hpp"

namespace cpf {

RingPtr Ring::make(std::vector<VariableSpec> specs) {
  std::set<std::string> seen;
  for (const auto& s : specs) {
    if (!valid_name(s.name)) throw Error("invalid variable name '" + s.name + "'");
    if (!seen.insert(s.name).second) throw Error("duplicate variable name '" + s.name + "'");
  }
  return RingPtr(new Ring(std::move(specs)));
}

RingPtr Ring::colors(const std::vector<std::string>& names) {
  std::vector<VariableSpec> specs;
  specs.reserve(names.size());
  for (const auto& n : names) specs.push_back({n, VariableKind::kColor});
  return make(std::move(specs));
}

Variable Ring::at(std::uint32_t id) const {
  if (id >= specs_.size()) throw Error("variable id out of range");
  return {id, specs_[id].kind};
}

Variable Ring::var(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error("unknown variable '" + std::string(name) + "'");
}

std::optional<Variable> Ring::find(std::string_view name) const {
  for (std::uint32_t id = 0; id < specs_.size(); ++id) {
    if (specs_[id].name == name) return Variable{id, specs_[id].kind};
  }
  return std::nullopt;
}

bool Ring::same_as(const Ring& other) const {
  if (specs_.size() != other.specs_.size()) return false;
  for (std::size_t k = 0; k < specs_.size(); ++k) {
    if (specs_[k].name != other.specs_[k].name || specs_[k].kind != other.specs_[k].kind) return false;
  }
  return true;
}

// "i" is the imaginary unit in polynomial text.
bool Ring::valid_name(std::string_view name) {
  if (name.empty() || name == "i") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands belong to different ring contexts");
}

}  // namespace cpf
