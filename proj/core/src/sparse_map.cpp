#include "cpf/sparse_map.hpp"

#include <unordered_map>

#include "cpf/error.hpp"

namespace cpf {

SparseMap::SparseMap(RingPtr ring, ColorSpace domain, ColorSpace codomain)
    : ring_(std::move(ring)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!ring_) throw Error("null ring context");
}

SparseMap::SparseMap(RingPtr ring, ColorSpace domain, ColorSpace codomain, std::vector<Entry> entries)
    : SparseMap(std::move(ring), std::move(domain), std::move(codomain)) {
  for (const auto& [r, c, v] : entries) add(r, c, v);
}

SparseMap SparseMap::identity(RingPtr ring, ColorSpace space) {
  SparseMap m(ring, space, space);
  const LaurentPoly one = LaurentPoly::constant(ring, GaussianRational(1));
  for (Index k = 0; k < space.dimension(); ++k) m.entries_.emplace(Key{k, k}, one);
  return m;
}

SparseMap SparseMap::diagonal(RingPtr ring, ColorSpace space, const std::vector<LaurentPoly>& diag) {
  if (diag.size() != space.dimension()) throw ShapeError("diagonal length does not match dimension");
  SparseMap m(std::move(ring), space, space);
  for (Index k = 0; k < diag.size(); ++k) m.add(k, k, diag[k]);
  return m;
}

void SparseMap::check_index(Index row, Index col) const {
  if (row >= rows() || col >= cols()) throw ShapeError("matrix index out of range");
}

void SparseMap::add(Index row, Index col, const LaurentPoly& value) {
  check_index(row, col);
  require_same_ring(ring_, value.ring());
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Key{row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

LaurentPoly SparseMap::at(Index row, Index col) const {
  auto it = entries_.find(Key{row, col});
  return it == entries_.end() ? LaurentPoly(ring_) : it->second;
}

std::optional<LaurentPoly> SparseMap::scalar_value() const {
  if (!(domain_ == codomain_)) return std::nullopt;
  if (entries_.empty()) return LaurentPoly(ring_);
  if (entries_.size() != rows()) return std::nullopt;
  const LaurentPoly& c = entries_.begin()->second;
  for (const auto& [key, v] : entries_) {
    if (key.first != key.second || !(v == c)) return std::nullopt;
  }
  return c;
}

SparseMap SparseMap::scaled(const LaurentPoly& c) const {
  require_same_ring(ring_, c.ring());
  SparseMap m(ring_, domain_, codomain_);
  if (c.is_zero()) return m;
  for (const auto& [key, v] : entries_) {
    LaurentPoly p = v * c;
    if (!p.is_zero()) m.entries_.emplace(key, std::move(p));
  }
  return m;
}

namespace {

void require_same_shape(const SparseMap& a, const SparseMap& b) {
  require_same_ring(a.ring(), b.ring());
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw ShapeError("maps have different domain or codomain");
  }
}

}  // namespace

SparseMap operator+(const SparseMap& a, const SparseMap& b) {
  require_same_shape(a, b);
  SparseMap m = a;
  for (const auto& [key, v] : b.entries_) m.add(key.first, key.second, v);
  return m;
}

SparseMap operator-(const SparseMap& a, const SparseMap& b) {
  require_same_shape(a, b);
  SparseMap m = a;
  for (const auto& [key, v] : b.entries_) m.add(key.first, key.second, -v);
  return m;
}

SparseMap SparseMap::operator-() const {
  SparseMap m = *this;
  for (auto& [key, v] : m.entries_) v = -v;
  return m;
}

bool operator==(const SparseMap& a, const SparseMap& b) {
  if (!same_ring(a.ring_, b.ring_) || !(a.domain_ == b.domain_) || !(a.codomain_ == b.codomain_)) {
    return false;
  }
  return a.entries_ == b.entries_;
}

SparseMap compose(const SparseMap& f, const SparseMap& g) {
  require_same_ring(f.ring_, g.ring_);
  if (!(f.domain_ == g.codomain_)) {
    throw ShapeError("cannot compose: domain " + f.domain_.describe(*f.ring_) + " vs codomain " +
                     g.codomain_.describe(*g.ring_));
  }
  std::unordered_map<SparseMap::Index, std::vector<std::pair<SparseMap::Index, const LaurentPoly*>>> by_col;
  by_col.reserve(f.entries_.size());
  for (const auto& [key, v] : f.entries_) by_col[key.second].emplace_back(key.first, &v);

  SparseMap out(f.ring_, g.domain_, f.codomain_);
  for (const auto& [key, gv] : g.entries_) {
    auto it = by_col.find(key.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, fv] : it->second) out.add(row, key.second, *fv * gv);
  }
  return out;
}

SparseMap tensor(const SparseMap& f, const SparseMap& g) {
  require_same_ring(f.ring_, g.ring_);
  SparseMap out(f.ring_, f.domain_ + g.domain_, f.codomain_ + g.codomain_);
  const SparseMap::Index gr = g.rows();
  const SparseMap::Index gc = g.cols();
  for (const auto& [fk, fv] : f.entries_) {
    for (const auto& [gk, gv] : g.entries_) {
      out.entries_.emplace(SparseMap::Key{fk.first * gr + gk.first, fk.second * gc + gk.second}, fv * gv);
    }
  }
  return out;
}

SparseMap pad(const SparseMap& f, const ColorSpace& left, const ColorSpace& right) {
  SparseMap m = f;
  if (!left.empty()) m = tensor(SparseMap::identity(f.ring(), left), m);
  if (!right.empty()) m = tensor(m, SparseMap::identity(f.ring(), right));
  return m;
}

SparseMap partial_qtrace(const SparseMap& f, std::size_t keep) {
  const ColorSpace& space = f.domain_;
  if (!(space == f.codomain_)) throw ShapeError("partial trace needs an endomorphism");
  if (keep >= space.size()) throw ShapeError("kept position out of range");
  for (const auto& factor : space.factors()) {
    if (factor.dual) throw ShapeError("partial trace is defined on primal factors only");
  }

  const std::size_t n = space.size();
  const Ring& ring = *f.ring_;
  SparseMap out(f.ring_, ColorSpace({space[keep]}), ColorSpace({space[keep]}));
  LaurentPoly::Exponents e(ring.size());
  for (const auto& [key, v] : f.entries_) {
    const auto [row, col] = key;
    std::fill(e.begin(), e.end(), 0);
    bool diagonal = true;
    int ones = 0;
    for (std::size_t pos = 0; pos < n && diagonal; ++pos) {
      if (pos == keep) continue;
      const int d = space.digit(row, pos);
      if (d != space.digit(col, pos)) {
        diagonal = false;
        break;
      }
      // K = diag(t, -t) on the left, K^-1 = diag(1/t, -1/t) on the right
      e[space[pos].color.id] += pos < keep ? 1 : -1;
      ones += d;
    }
    if (!diagonal) continue;
    const LaurentPoly weight =
        LaurentPoly::monomial(f.ring_, GaussianRational(ones % 2 == 0 ? 1 : -1), e);
    out.add(static_cast<SparseMap::Index>(space.digit(row, keep)),
            static_cast<SparseMap::Index>(space.digit(col, keep)), v * weight);
  }
  return out;
}

LaurentPoly quantum_trace(const SparseMap& f) {
  const ColorSpace& space = f.domain();
  if (!(space == f.codomain())) throw ShapeError("quantum trace needs an endomorphism");
  for (const auto& factor : space.factors()) {
    if (factor.dual) throw ShapeError("quantum trace is defined on primal factors only");
  }
  LaurentPoly total(f.ring());
  LaurentPoly::Exponents e(f.ring()->size());
  for (const auto& [key, v] : f.entries()) {
    if (key.first != key.second) continue;
    std::fill(e.begin(), e.end(), 0);
    int ones = 0;
    for (std::size_t pos = 0; pos < space.size(); ++pos) {
      e[space[pos].color.id] -= 1;
      ones += space.digit(key.first, pos);
    }
    total += v * LaurentPoly::monomial(f.ring(), GaussianRational(ones % 2 == 0 ? 1 : -1), e);
  }
  return total;
}

}  // namespace cpf
