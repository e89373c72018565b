#pragma once

#include <map>
#include <string>

#include "cpf/laurent_poly.hpp"

namespace cpf {

/// num / prod_v (v - v^-1)^e_v. These are the only denominators the braid
/// closure ever produces, so no general gcd machinery is needed.
class RestrictedFraction {
 public:
  using Denominator = std::map<Variable, int>;

  explicit RestrictedFraction(LaurentPoly num, Denominator den = {});

  const LaurentPoly& num() const { return num_; }
  const Denominator& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Expanded product of the denominator factors.
  LaurentPoly den_poly() const;

  friend RestrictedFraction operator+(const RestrictedFraction& a, const RestrictedFraction& b);
  friend RestrictedFraction operator-(const RestrictedFraction& a, const RestrictedFraction& b);
  friend RestrictedFraction operator*(const RestrictedFraction& a, const LaurentPoly& b);

  /// Structural equality. Only meaningful between reduced fractions.
  friend bool operator==(const RestrictedFraction& a, const RestrictedFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Same value as formal fractions (cross-multiplied).
  bool equivalent(const RestrictedFraction& other) const;

  /// "num" or "(num)/((t - t^-1)^e*...)".
  std::string to_string() const;
  /// "t1^1*t2^2" style listing of denominator exponents; empty when none.
  std::string den_text() const;

 private:
  LaurentPoly num_;
  Denominator den_;
};

/// Strips every (v - v^-1) that divides the numerator; idempotent.
RestrictedFraction frac_reduce(const RestrictedFraction& f);

}  // namespace cpf
