#include "cpf/laurent_poly.hpp"

#include <algorithm>
#include <utility>

#include "cpf/error.hpp"

namespace cpf {

namespace {

using Term = LaurentPoly::Term;

// Merge of two ascending term lists; `sign` is +1 or -1 on the right operand.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->exponents < ib->exponents)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->exponents < ia->exponents) {
      out.push_back({ib->exponents, sign > 0 ? ib->coef : -ib->coef});
      ++ib;
    } else {
      GaussianRational c = sign > 0 ? ia->coef + ib->coef : ia->coef - ib->coef;
      if (!c.is_zero()) out.push_back({ia->exponents, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("null ring context");
}

void LaurentPoly::check_exponents(const Ring& ring, const Exponents& e) {
  if (e.size() != ring.size()) throw Error("exponent vector length does not match ring");
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 && ring.specs()[k].kind == VariableKind::kFormal) {
      throw Error("formal variable '" + ring.specs()[k].name + "' cannot take a negative exponent");
    }
  }
}

LaurentPoly LaurentPoly::constant(RingPtr ring, GaussianRational c) {
  const std::size_t n = ring->size();
  return monomial(std::move(ring), std::move(c), Exponents(n, 0));
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, GaussianRational c, Exponents exponents) {
  LaurentPoly p(std::move(ring));
  check_exponents(*p.ring_, exponents);
  if (!c.is_zero()) p.terms_.push_back({std::move(exponents), std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::variable(RingPtr ring, Variable v, int exponent) {
  Exponents e(ring->size(), 0);
  if (v.id >= e.size()) throw Error("variable not in ring");
  e[v.id] = exponent;
  return monomial(std::move(ring), GaussianRational(1), std::move(e));
}

LaurentPoly LaurentPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  LaurentPoly p(std::move(ring));
  for (const auto& t : terms) check_exponents(*p.ring_, t.exponents);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  return p;
}

std::optional<GaussianRational> LaurentPoly::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& e = terms_.front().exponents;
  if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return std::nullopt;
  return terms_.front().coef;
}

GaussianRational LaurentPoly::coefficient(const Exponents& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const Exponents& e) { return t.exponents < e; });
  if (it != terms_.end() && it->exponents == exponents) return it->coef;
  return GaussianRational(0);
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  Exponents e = terms_.front().exponents;
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] = -e[k];
    if (e[k] < 0 && ring_->specs()[k].kind == VariableKind::kFormal) return std::nullopt;
  }
  return LaurentPoly(ring_, {{std::move(e), terms_.front().coef.inverse()}});
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring_);
  if (b.terms_.size() == 1 && b.terms_.front().coef.is_one() &&
      std::all_of(b.terms_.front().exponents.begin(), b.terms_.front().exponents.end(),
                  [](int x) { return x == 0; })) {
    return a;
  }
  std::map<LaurentPoly::Exponents, GaussianRational> acc;
  const std::size_t n = a.ring_->size();
  LaurentPoly::Exponents e(n);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) e[k] = ta.exponents[k] + tb.exponents[k];
      auto [it, inserted] = acc.try_emplace(e, ta.coef);
      if (inserted) {
        it->second *= tb.coef;
      } else {
        it->second += ta.coef * tb.coef;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exps, c] : acc) {
    if (!c.is_zero()) out.push_back({exps, std::move(c)});
  }
  return LaurentPoly(a.ring_, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return LaurentPoly(ring_);
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(ring_, GaussianRational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exponents != b.terms_[k].exponents || !(a.terms_[k].coef == b.terms_[k].coef)) {
      return false;
    }
  }
  return true;
}

LaurentPoly distinguished_factor(const RingPtr& ring, Variable v) {
  return LaurentPoly::variable(ring, v, 1) - LaurentPoly::variable(ring, v, -1);
}

// a / (v - v^-1) = (a * v) / (v^2 - 1); long division by the monic v^2 - 1
// with coefficients in the remaining variables.
std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a, Variable v) {
  const RingPtr& ring = a.ring();
  if (v.id >= ring->size() || ring->specs()[v.id].kind != VariableKind::kColor) {
    throw Error("exact division needs a color variable");
  }
  if (a.is_zero()) return a;

  // degree in v -> coefficient, kept as term lists with the v slot zeroed
  std::map<int, std::vector<LaurentPoly::Term>> by_degree;
  for (const auto& t : a.terms()) {
    auto e = t.exponents;
    const int d = e[v.id] + 1;
    e[v.id] = 0;
    by_degree[d].push_back({std::move(e), t.coef});
  }
  std::map<int, LaurentPoly> rem;
  for (auto& [d, terms] : by_degree) rem.emplace(d, LaurentPoly::from_terms(ring, std::move(terms)));

  const int lo = rem.begin()->first;
  const int hi = rem.rbegin()->first;
  std::map<int, LaurentPoly> quot;
  for (int d = hi; d >= lo + 2; --d) {
    auto it = rem.find(d);
    if (it == rem.end() || it->second.is_zero()) continue;
    LaurentPoly c = std::move(it->second);
    rem.erase(it);
    auto [jt, inserted] = rem.try_emplace(d - 2, c);
    if (!inserted) jt->second += c;
    quot.emplace(d - 2, std::move(c));
  }
  for (const auto& [d, c] : rem) {
    if (!c.is_zero()) return std::nullopt;
  }

  LaurentPoly q(ring);
  for (const auto& [d, c] : quot) q += c * LaurentPoly::variable(ring, v, d);
  return q;
}

LaurentPoly lp_substitute(const LaurentPoly& a, const std::map<Variable, LaurentPoly>& assignments,
                          const RingPtr& target) {
  const Ring& src = *a.ring();
  std::vector<LaurentPoly> image;
  std::vector<std::optional<LaurentPoly>> inverse;
  image.reserve(src.size());
  for (std::uint32_t id = 0; id < src.size(); ++id) {
    const Variable v = src.at(id);
    auto it = assignments.find(v);
    if (it != assignments.end()) {
      require_same_ring(it->second.ring(), target);
      image.push_back(it->second);
    } else {
      auto tv = target->find(src.name(v));
      if (!tv) throw SubstitutionError("no assignment or target variable for '" + src.name(v) + "'");
      image.push_back(LaurentPoly::variable(target, *tv));
    }
    inverse.push_back(image.back().unit_inverse());
  }

  LaurentPoly out(target);
  for (const auto& t : a.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, t.coef);
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      const int e = t.exponents[k];
      if (e == 0) continue;
      if (e > 0) {
        term = term * image[k].pow(static_cast<unsigned>(e));
      } else {
        if (!inverse[k]) {
          throw SubstitutionError("value substituted for '" + src.specs()[k].name +
                                  "' is not a unit but the variable has a negative exponent");
        }
        term = term * inverse[k]->pow(static_cast<unsigned>(-e));
      }
    }
    out += term;
  }
  return out;
}

}  // namespace cpf
