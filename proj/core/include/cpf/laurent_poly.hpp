#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpf/gaussian_rational.hpp"
#include "cpf/ring.hpp"

namespace cpf {

/// Exact multivariate Laurent polynomial over Q(i).
///
/// Terms are kept sorted ascending in lexicographic order of exponent
/// vectors (variables compared by id) with no zero coefficients, so equality
/// is structural. The zero polynomial has no terms.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  struct Term {
    Exponents exponents;
    GaussianRational coef;
  };

  explicit LaurentPoly(RingPtr ring);

  static LaurentPoly constant(RingPtr ring, GaussianRational c);
  static LaurentPoly monomial(RingPtr ring, GaussianRational c, Exponents exponents);
  static LaurentPoly variable(RingPtr ring, Variable v, int exponent = 1);
  /// Merges repeated exponent vectors and drops zeros.
  static LaurentPoly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Reads the canonical text form (see to_string). Throws ParseError.
  static LaurentPoly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// The coefficient when the polynomial is a constant (zero included).
  std::optional<GaussianRational> constant_value() const;
  GaussianRational coefficient(const Exponents& exponents) const;

  /// Inverse of a single-term polynomial; nullopt otherwise or when a formal
  /// variable would get a negative exponent.
  std::optional<LaurentPoly> unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly scaled(const GaussianRational& c) const;
  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Signed sum of terms "c*t1^a*t2^b" in descending monomial order, "0"
  /// for the zero polynomial. Real coefficients print as "p/q", complex ones
  /// as "(p/q)+(r/s)i"; unit coefficients and exponents are elided.
  std::string to_string() const;

 private:
  LaurentPoly(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  static void check_exponents(const Ring& ring, const Exponents& e);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Divides by (v - v^-1) exactly, or returns nullopt when the division leaves
/// a remainder. v must be a color variable.
std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a, Variable v);

/// (v - v^-1) in the given ring.
LaurentPoly distinguished_factor(const RingPtr& ring, Variable v);

/// Ring homomorphism into `target`. Variables without an assignment map to
/// the target variable of the same name. A variable occurring with a negative
/// exponent must be sent to a unit; otherwise SubstitutionError.
LaurentPoly lp_substitute(const LaurentPoly& a, const std::map<Variable, LaurentPoly>& assignments,
                          const RingPtr& target);

}  // namespace cpf
