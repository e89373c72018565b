#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "cpf/braid.hpp"
#include "cpf/laurent_poly.hpp"

namespace cpf::testing {

inline LaurentPoly P(const RingPtr& ring, const char* text) { return LaurentPoly::parse(ring, text); }

/// Random polynomial with up to `max_terms` terms, exponents in [-3, 3] on
/// color variables (non-negative on formal ones) and small Gaussian-rational
/// coefficients.
inline LaurentPoly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution complex(0.3);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    LaurentPoly::Exponents e(ring->size());
    for (std::size_t v = 0; v < e.size(); ++v) {
      e[v] = expo(rng);
      if (ring->specs()[v].kind == VariableKind::kFormal) e[v] = std::abs(e[v]);
    }
    mpq_class re(small(rng), den(rng));
    mpq_class im = complex(rng) ? mpq_class(small(rng), den(rng)) : mpq_class(0);
    terms.push_back({std::move(e), GaussianRational(re, im)});
  }
  return LaurentPoly::from_terms(ring, std::move(terms));
}

/// Random word on 1..max_strands strands with up to max_letters letters.
inline BraidWord random_braid(std::mt19937& rng, std::size_t max_strands, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> strands(1, max_strands);
  std::uniform_int_distribution<std::size_t> length(0, max_letters);
  BraidWord b{strands(rng), {}};
  if (b.strands == 1) return b;
  std::uniform_int_distribution<int> gen(1, static_cast<int>(b.strands) - 1);
  std::bernoulli_distribution negative(0.5);
  const std::size_t n = length(rng);
  for (std::size_t k = 0; k < n; ++k) {
    const int g = gen(rng);
    b.letters.push_back(negative(rng) ? -g : g);
  }
  return b;
}

inline BraidWord inverse(const BraidWord& b) {
  BraidWord out{b.strands, {}};
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace cpf::testing
