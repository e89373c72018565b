#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cpf/color_space.hpp"
#include "cpf/laurent_poly.hpp"

namespace cpf {

/// Linear map between color spaces with Laurent-polynomial entries, stored
/// sparsely by (row, column) over the standard tensor basis. Zero entries
/// are never stored.
class SparseMap {
 public:
  using Index = std::uint32_t;
  using Key = std::pair<Index, Index>;
  using Entry = std::tuple<Index, Index, LaurentPoly>;

  /// The zero map.
  SparseMap(RingPtr ring, ColorSpace domain, ColorSpace codomain);
  /// Entries with a repeated key are summed. Throws ShapeError on an
  /// out-of-range index.
  SparseMap(RingPtr ring, ColorSpace domain, ColorSpace codomain, std::vector<Entry> entries);

  static SparseMap identity(RingPtr ring, ColorSpace space);
  /// Diagonal endomorphism of a single factor.
  static SparseMap diagonal(RingPtr ring, ColorSpace space, const std::vector<LaurentPoly>& diag);

  const RingPtr& ring() const { return ring_; }
  const ColorSpace& domain() const { return domain_; }
  const ColorSpace& codomain() const { return codomain_; }
  Index rows() const { return codomain_.dimension(); }
  Index cols() const { return domain_.dimension(); }

  const std::map<Key, LaurentPoly>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  /// Zero polynomial when the entry is not stored.
  LaurentPoly at(Index row, Index col) const;

  /// c * identity on a space with domain == codomain, or nullopt.
  std::optional<LaurentPoly> scalar_value() const;

  SparseMap scaled(const LaurentPoly& c) const;

  friend SparseMap operator+(const SparseMap& a, const SparseMap& b);
  friend SparseMap operator-(const SparseMap& a, const SparseMap& b);
  SparseMap operator-() const;

  friend bool operator==(const SparseMap& a, const SparseMap& b);

 private:
  void add(Index row, Index col, const LaurentPoly& value);
  void check_index(Index row, Index col) const;

  friend SparseMap compose(const SparseMap& f, const SparseMap& g);
  friend SparseMap tensor(const SparseMap& f, const SparseMap& g);
  friend SparseMap partial_qtrace(const SparseMap& f, std::size_t keep);

  RingPtr ring_;
  ColorSpace domain_;
  ColorSpace codomain_;
  std::map<Key, LaurentPoly> entries_;
};

/// f after g. Throws ShapeError unless f.domain() == g.codomain().
SparseMap compose(const SparseMap& f, const SparseMap& g);

/// Kronecker product, leftmost factor most significant.
SparseMap tensor(const SparseMap& f, const SparseMap& g);

/// Identity on `left` (x) f (x) identity on `right`.
SparseMap pad(const SparseMap& f, const ColorSpace& left, const ColorSpace& right);

/// Closes every factor except `keep`: factors left of it are closed on the
/// left (coev~ / ev, weight K), factors right of it on the right (coev / ev~,
/// weight K^-1). The result is an endomorphism of the kept factor.
/// Throws ShapeError on non-endomorphisms, dual factors or a bad position.
SparseMap partial_qtrace(const SparseMap& f, std::size_t keep);

/// Right-closed quantum trace of an endomorphism: every factor weighted by
/// K^-1.
LaurentPoly quantum_trace(const SparseMap& f);

}  // namespace cpf
