// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock
// budget. Exits nonzero if any criterion fails or runs over budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cpf/braid.hpp"
#include "cpf/error.hpp"
#include "cpf/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cpf {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const VerificationReport& r) {
    if (!r.passed && ok) {
      ok = false;
      std::string text = r.to_text();
      for (char& c : text) c = c == '\n' ? ';' : c;
      detail = text;
    }
  }
};

RingPtr link_ring() { return Ring::colors({"t1", "t2", "t3", "t4"}); }

Coloring auto_coloring(const RingPtr& ring, const BraidWord& b) {
  Coloring c;
  for (const std::string& name : auto_color_names(b)) c.push_back(ring->var(name));
  return c;
}

Outcome algebra() {
  Outcome o;
  const RingPtr ring = verification_ring();
  o.require(verify_algebra(ring, ring->var("t"), ring->var("alpha"), Zeta::kPlusI));
  o.require(verify_algebra(ring, ring->var("t"), ring->var("alpha"), Zeta::kMinusI));
  return o;
}

Outcome duality() {
  Outcome o;
  const RingPtr ring = verification_ring();
  const VerificationReport zig = verify_zigzag(ring, ring->var("t"));
  o.require(zig);
  o.require(zig.checks.size() == 4, "expected four zig-zag checks");
  o.require(verify_quantum_dim_zero(ring, ring->var("t")));
  return o;
}

Outcome relation_two() {
  Outcome o;
  const RingPtr ring = verification_ring();
  o.require(verify_relation_II(ring, ring->var("t"), ring->var("s"), true));
  return o;
}

Outcome relation_three() {
  Outcome o;
  const RingPtr ring = verification_ring();
  o.require(verify_relation_III(ring, ring->var("t"), ring->var("s"), ring->var("u"), true));
  return o;
}

Outcome phi() {
  Outcome o;
  const RingPtr ring = verification_ring();
  const PhiResult first = verify_phi(ring, ring->var("t"), ring->var("s"));
  const PhiResult second = verify_phi(ring, ring->var("t"), ring->var("s"));
  o.require(first.inverse_sign == 1 || first.inverse_sign == -1, "scalar is not +-(t - t^-1)");
  o.require(first.inverse_sign == kPhiInverseSign, "sign differs from the recorded one");
  o.require(first.inverse_scalar == second.inverse_scalar, "sign not stable across runs");
  o.detail = "sign " + std::string(first.inverse_sign > 0 ? "+1" : "-1");
  return o;
}

Outcome hopf() {
  Outcome o;
  const HopfResult h = verify_hopf();
  const auto unit = h.open_first.num().constant_value();
  o.require(h.open_first.den().empty() && unit && (*unit == GaussianRational(1) || *unit == GaussianRational(-1)),
            "cpf(sigma_1^2) is not +-1");
  o.require(h.open_first == h.open_second, "open-strand choices disagree");
  o.require(h.with_split_unknot.is_zero(), "disjoint unknot value is not 0");
  return o;
}

Outcome ybe_and_curl() {
  Outcome o;
  const RingPtr ring = verification_ring();
  o.require(verify_ybe(ring, ring->var("t"), ring->var("s"), ring->var("u")));
  o.require(verify_curl(ring, ring->var("t")));
  return o;
}

Outcome torus_links() {
  Outcome o;
  const RingPtr ring = link_ring();
  const Coloring c{ring->var("t1"), ring->var("t2")};
  const LaurentPoly x = LaurentPoly::parse(ring, "t1*t2");
  const auto expected = oracle::torus_skein(x, *x.unit_inverse(), 4, LaurentPoly::constant(ring, kHopfSign));
  for (int k = 1; k <= 4; ++k) {
    const BraidWord b{2, std::vector<int>(static_cast<std::size_t>(2 * k), 1)};
    const RestrictedFraction value = cpf(ring, b, c, 0).value;
    o.require(value.equivalent(RestrictedFraction(expected[static_cast<std::size_t>(k)])),
              "k=" + std::to_string(k) + ": " + value.to_string());
  }
  return o;
}

Outcome knots() {
  Outcome o;
  const RingPtr ring = Ring::colors({"t"});
  const Variable t = ring->var("t");
  for (const BraidWord& b : {BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1, -2}}}) {
    const CpfResult r = cpf(ring, b, Coloring(b.strands, t), 0);
    const auto ours = oracle::normalize_unit(oracle::to_upoly(r.value.num(), t));
    const auto theirs =
        oracle::normalize_unit(oracle::substitute_square(oracle::burau_alexander(b.strands, b.letters)));
    o.require(ours == theirs, braid_text(b) + ": numerator " + r.value.num().to_string());
    o.require(r.value.den() == RestrictedFraction::Denominator{{t, 1}}, braid_text(b) + ": denominator");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  const RingPtr ring = link_ring();
  std::mt19937 rng(20261015U);
  int conjugations = 0, stabilizations = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord b = testing::random_braid(rng, 3, 6);
    const Coloring c = auto_coloring(ring, b);
    const RestrictedFraction base = cpf(ring, b, c, 0).value;

    BraidWord g = testing::random_braid(rng, b.strands, 3);
    g.strands = b.strands;
    if (b.strands == 1) g.letters.clear();
    const Permutation pi = underlying_permutation(g);
    Coloring moved;
    for (std::size_t i = 0; i < b.strands; ++i) moved.push_back(c[pi.image[i]]);
    const BraidWord gbg = testing::concat(testing::concat(g, b), testing::inverse(g));
    o.require(cpf(ring, gbg, moved, 0).value == base, "conjugation " + braid_text(b) + " by " + braid_text(g));
    ++conjugations;

    Coloring extended = c;
    extended.push_back(c.back());
    for (int sign : {1, -1}) {
      BraidWord st = b;
      st.strands += 1;
      st.letters.push_back(sign * static_cast<int>(b.strands));
      o.require(cpf(ring, st, extended, 0).value == base, "stabilization " + braid_text(st));
      ++stabilizations;
    }
  }

  const RingPtr colors = Ring::colors({"t", "s", "u"});
  for (std::size_t n = 2; n <= 4; ++n) {
    Coloring c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(colors->at(static_cast<std::uint32_t>(k % 3)));
    const SparseMap id = SparseMap::identity(colors, ColorSpace::of(c));
    for (int g = 1; g < static_cast<int>(n); ++g) {
      o.require(braid_operator(colors, BraidWord{n, {g, -g}}, c) == id, "R-II at " + std::to_string(g));
      o.require(braid_operator(colors, BraidWord{n, {-g, g}}, c) == id, "R-II at -" + std::to_string(g));
    }
  }

  int presets = 0;
  for (const cli::Preset& p : cli::cmd_presets()) {
    const BraidWord b = parse_braid(p.braid, p.strands);
    if (components(b).size() < 2) continue;
    ++presets;
    const Coloring c = auto_coloring(ring, b);
    const RestrictedFraction first = cpf(ring, b, c, 0).value;
    for (std::size_t open = 1; open < b.strands; ++open) {
      o.require(cpf(ring, b, c, open).value == first, "open strand " + p.name);
    }
  }
  if (o.ok) {
    o.detail = std::to_string(conjugations) + " conjugations, " + std::to_string(stabilizations) +
               " stabilizations, " + std::to_string(presets) + " multi-component presets";
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace cpf

int main() {
  using namespace cpf;
  const Criterion criteria[] = {
      {1, "algebra relations", 0.1, algebra},
      {2, "zig-zag and quantum dimension zero", 0.1, duality},
      {3, "relation II with reference 4x4 matrices", 0.1, relation_two},
      {4, "relation III with reference M1-M3", 1.0, relation_three},
      {5, "relation Phi scalar and sign", 0.1, phi},
      {6, "Hopf link and disjoint unknot", 0.1, hopf},
      {7, "Yang-Baxter and curl triviality", 0.5, ybe_and_curl},
      {8, "torus links sigma_1^2k, k=1..4", 2.0, torus_links},
      {9, "trefoil and figure-eight vs Burau", 5.0, knots},
      {10, "Markov, Reidemeister II, open strand", 30.0, properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << "  (" << std::fixed;
    line.precision(3);
    line << seconds << " s, limit " << c.budget_seconds << " s)";
    if (!in_time) line << "  over time budget";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::puts(line.str().c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
