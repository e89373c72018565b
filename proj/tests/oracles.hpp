#pragma once

// Independent reference computations for the test suites. Nothing here goes
// through R-matrices, sparse maps or quantum traces.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "cpf/laurent_poly.hpp"

namespace cpf::oracle {

/// Integer Laurent polynomial in one variable: exponent -> coefficient.
using UPoly = std::map<int, long long>;

inline UPoly trim(UPoly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline UPoly add(const UPoly& a, const UPoly& b, long long sign = 1) {
  UPoly out = a;
  for (const auto& [e, c] : b) out[e] += sign * c;
  return trim(out);
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  return trim(out);
}

inline UPoly mono(long long c, int e) { return trim({{e, c}}); }

/// Exact division by a polynomial with leading coefficient +-1.
inline UPoly divide(UPoly a, const UPoly& d) {
  const auto [dlead_e, dlead_c] = *d.rbegin();
  const int dlow = d.begin()->first;
  if (dlead_c != 1 && dlead_c != -1) throw std::logic_error("divisor must be monic up to sign");
  UPoly q;
  while (!a.empty() && a.rbegin()->first - dlead_e >= a.begin()->first - dlow) {
    const auto [e, c] = *a.rbegin();
    const UPoly step = mono(c / dlead_c, e - dlead_e);
    q = add(q, step);
    a = add(a, mul(step, d), -1);
  }
  if (!a.empty()) throw std::logic_error("division leaves a remainder");
  return q;
}

/// Representative of p up to units +-x^k: lowest exponent 0, lowest
/// coefficient positive.
inline UPoly normalize_unit(const UPoly& p) {
  if (p.empty()) return p;
  const int shift = p.begin()->first;
  const long long sign = p.begin()->second < 0 ? -1 : 1;
  UPoly out;
  for (const auto& [e, c] : p) out[e - shift] = sign * c;
  return out;
}

inline UPoly substitute_square(const UPoly& p) {
  UPoly out;
  for (const auto& [e, c] : p) out[2 * e] = c;
  return out;
}

using UMatrix = std::vector<std::vector<UPoly>>;

inline UMatrix identity(std::size_t n) {
  UMatrix m(n, std::vector<UPoly>(n));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = mono(1, 0);
  return m;
}

inline UMatrix matmul(const UMatrix& a, const UMatrix& b) {
  const std::size_t n = a.size();
  UMatrix out(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] = add(out[i][j], mul(a[i][k], b[k][j]));
  return out;
}

/// Leibniz expansion; fine for the 1x1 to 3x3 matrices used here.
inline UPoly det(const UMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  UPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    UPoly term = mono(inversions % 2 ? -1 : 1, 0);
    for (std::size_t i = 0; i < n && !term.empty(); ++i) term = mul(term, m[i][perm[i]]);
    total = add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Reduced Burau matrix of one signed generator in B_n, (n-1)x(n-1).
inline UMatrix reduced_burau_letter(std::size_t n, int letter) {
  const std::size_t m = n - 1;
  const std::size_t g = static_cast<std::size_t>(std::abs(letter));  // 1-based
  const bool inv = letter < 0;
  UMatrix a = identity(m);
  const std::size_t i = g - 1;  // 0-based row of the generator
  if (m == 1) {
    a[0][0] = inv ? mono(-1, -1) : mono(-1, 1);
    return a;
  }
  // sigma_i: rows i-1..i+1 carry [[1, t, 0], [0, -t, 0], [0, 1, 1]] (clipped at the ends)
  // inverse: [[1, 1, 0], [0, -1/t, 0], [0, 1/t, 1]]
  a[i][i] = inv ? mono(-1, -1) : mono(-1, 1);
  if (i > 0) a[i - 1][i] = inv ? mono(1, 0) : mono(1, 1);
  if (i + 1 < m) a[i + 1][i] = inv ? mono(1, -1) : mono(1, 0);
  return a;
}

/// Alexander polynomial of the closure of a braid, up to +-x^k, from
/// det(I - reduced Burau) = Delta(x) (1 + x + ... + x^{n-1}).
inline UPoly burau_alexander(std::size_t strands, const std::vector<int>& letters) {
  if (strands == 1) return mono(1, 0);
  UMatrix b = identity(strands - 1);
  for (int letter : letters) b = matmul(b, reduced_burau_letter(strands, letter));
  UMatrix i_minus_b = identity(strands - 1);
  for (std::size_t r = 0; r < strands - 1; ++r)
    for (std::size_t c = 0; c < strands - 1; ++c) i_minus_b[r][c] = add(i_minus_b[r][c], b[r][c], -1);
  UPoly cyclotomic;
  for (std::size_t k = 0; k < strands; ++k) cyclotomic[static_cast<int>(k)] = 1;
  return divide(det(i_minus_b), cyclotomic);
}

/// Converts a one-variable LaurentPoly with integer coefficients.
inline UPoly to_upoly(const LaurentPoly& p, Variable v) {
  UPoly out;
  for (const auto& term : p.terms()) {
    for (std::size_t k = 0; k < term.exponents.size(); ++k) {
      if (k != v.id && term.exponents[k] != 0) throw std::logic_error("polynomial is not univariate");
    }
    if (!term.coef.is_real() || term.coef.re().get_den() != 1) throw std::logic_error("non-integer coefficient");
    out[term.exponents[v.id]] = term.coef.re().get_num().get_si();
  }
  return out;
}

/// Skein recursion for sigma_1^{2k} closures: a_{k+1} = (x + 1/x) a_k - a_{k-1}
/// with a_0 = 0 (split two-component unlink) and a_1 = hopf (the Hopf value).
inline std::vector<LaurentPoly> torus_skein(const LaurentPoly& x, const LaurentPoly& x_inv, int kmax,
                                            const LaurentPoly& hopf) {
  std::vector<LaurentPoly> a{LaurentPoly(x.ring()), hopf};
  for (int k = 1; k < kmax; ++k) a.push_back((x + x_inv) * a[k] - a[k - 1]);
  return a;
}

}  // namespace cpf::oracle
