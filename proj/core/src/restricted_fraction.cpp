#include "cpf/restricted_fraction.hpp"

#include <algorithm>

#include "cpf/error.hpp"

namespace cpf {

namespace {

RestrictedFraction::Denominator strip_zero(RestrictedFraction::Denominator den) {
  for (auto it = den.begin(); it != den.end();) {
    if (it->second < 0) throw Error("negative denominator exponent");
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
  return den;
}

LaurentPoly factor_power(const RingPtr& ring, Variable v, int e) {
  return distinguished_factor(ring, v).pow(static_cast<unsigned>(e));
}

// Brings both fractions over the same denominator and returns the lifted
// numerators.
std::pair<LaurentPoly, LaurentPoly> lift(const RestrictedFraction& a, const RestrictedFraction& b,
                                         RestrictedFraction::Denominator& common) {
  require_same_ring(a.ring(), b.ring());
  common = a.den();
  for (const auto& [v, e] : b.den()) common[v] = std::max(common[v], e);
  LaurentPoly na = a.num();
  LaurentPoly nb = b.num();
  for (const auto& [v, e] : common) {
    const auto ia = a.den().find(v);
    const auto ib = b.den().find(v);
    const int ea = ia == a.den().end() ? 0 : ia->second;
    const int eb = ib == b.den().end() ? 0 : ib->second;
    if (e > ea) na = na * factor_power(a.ring(), v, e - ea);
    if (e > eb) nb = nb * factor_power(b.ring(), v, e - eb);
  }
  return {std::move(na), std::move(nb)};
}

}  // namespace

RestrictedFraction::RestrictedFraction(LaurentPoly num, Denominator den)
    : num_(std::move(num)), den_(strip_zero(std::move(den))) {
  for (const auto& [v, e] : den_) {
    if (v.kind != VariableKind::kColor || v.id >= ring()->size()) {
      throw Error("denominator factors must be color variables of the ring");
    }
  }
}

LaurentPoly RestrictedFraction::den_poly() const {
  LaurentPoly d = LaurentPoly::constant(ring(), GaussianRational(1));
  for (const auto& [v, e] : den_) d = d * factor_power(ring(), v, e);
  return d;
}

RestrictedFraction operator+(const RestrictedFraction& a, const RestrictedFraction& b) {
  RestrictedFraction::Denominator common;
  auto [na, nb] = lift(a, b, common);
  return frac_reduce(RestrictedFraction(na + nb, common));
}

RestrictedFraction operator-(const RestrictedFraction& a, const RestrictedFraction& b) {
  RestrictedFraction::Denominator common;
  auto [na, nb] = lift(a, b, common);
  return frac_reduce(RestrictedFraction(na - nb, common));
}

RestrictedFraction operator*(const RestrictedFraction& a, const LaurentPoly& b) {
  return frac_reduce(RestrictedFraction(a.num() * b, a.den()));
}

bool RestrictedFraction::equivalent(const RestrictedFraction& other) const {
  if (!same_ring(ring(), other.ring())) return false;
  return num_ * other.den_poly() == other.num_ * den_poly();
}

std::string RestrictedFraction::to_string() const {
  if (den_.empty() || num_.is_zero()) return num_.to_string();
  std::string den;
  for (const auto& [v, e] : den_) {
    if (!den.empty()) den += "*";
    const std::string& n = ring()->name(v);
    den += "(" + n + " - " + n + "^-1)";
    if (e != 1) den += "^" + std::to_string(e);
  }
  if (den_.size() > 1 || den_.begin()->second != 1) den = "(" + den + ")";
  const std::string num = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  return num + "/" + den;
}

std::string RestrictedFraction::den_text() const {
  std::string out;
  for (const auto& [v, e] : den_) {
    if (!out.empty()) out += "*";
    out += ring()->name(v) + "^" + std::to_string(e);
  }
  return out;
}

RestrictedFraction frac_reduce(const RestrictedFraction& f) {
  if (f.num().is_zero()) return RestrictedFraction(f.num());
  LaurentPoly num = f.num();
  RestrictedFraction::Denominator den = f.den();
  for (auto& [v, e] : den) {
    while (e > 0) {
      auto q = lp_exact_div(num, v);
      if (!q) break;
      num = std::move(*q);
      --e;
    }
  }
  return RestrictedFraction(std::move(num), std::move(den));
}

}  // namespace cpf
