#include <gtest/gtest.h>

#include "cpf/error.hpp"
#include "cpf/fixture.hpp"
#include "cpf/reference_fixtures.hpp"
#include "cpf/rep.hpp"
#include "cpf/verifier.hpp"
#include "test_util.hpp"

namespace cpf {
namespace {

using testing::P;

class VerifierTest : public ::testing::Test {
 protected:
  RingPtr ring = verification_ring();
  Variable t = ring->var("t");
  Variable s = ring->var("s");
  Variable u = ring->var("u");
  Variable alpha = ring->var("alpha");

  LaurentPoly p(const char* text) const { return P(ring, text); }
};

TEST_F(VerifierTest, Algebra) {
  const VerificationReport r = verify_algebra(ring, t, alpha);
  EXPECT_TRUE(r.passed) << r.to_text();
  EXPECT_GE(r.checks.size(), 8U);

  // the commutator identity by hand
  const RepMatrices rho = rep_matrices(ring, t, alpha);
  const SparseMap commutator = compose(rho.E, rho.F) - compose(rho.F, rho.E);
  const GaussianRational denom = zeta_value(Zeta::kPlusI) - zeta_value(Zeta::kPlusI).inverse();
  EXPECT_EQ(commutator, (rho.K - rho.Kinv).scaled(LaurentPoly::constant(ring, denom.inverse())));
  EXPECT_TRUE((compose(rho.K, rho.E) + compose(rho.E, rho.K)).is_zero());
  EXPECT_EQ(compose(rho.H, rho.E) - compose(rho.E, rho.H), rho.E.scaled(p("2")));

  EXPECT_TRUE(verify_algebra(ring, t, alpha, Zeta::kMinusI).passed);
}

TEST_F(VerifierTest, ZigzagAndQuantumDimension) {
  const VerificationReport z = verify_zigzag(ring, t);
  EXPECT_TRUE(z.passed) << z.to_text();
  EXPECT_EQ(z.checks.size(), 4U);
  const VerificationReport q = verify_quantum_dim_zero(ring, t);
  EXPECT_TRUE(q.passed) << q.to_text();
}

TEST_F(VerifierTest, RelationTwo) {
  const VerificationReport r = verify_relation_II(ring, t, s, true);
  EXPECT_TRUE(r.passed) << r.to_text();
  // product: (1,1) = st, (4,4) = 1/(st); inverse: (2,2) = st - s/t + 1/(st)
  const SparseMap product = compose(r_pos(ring, s, t), r_pos(ring, t, s));
  EXPECT_EQ(product.at(0, 0), p("s*t"));
  EXPECT_EQ(product.at(3, 3), p("s^-1*t^-1"));
  const SparseMap inverse = compose(r_neg(ring, t, s), r_neg(ring, s, t));
  EXPECT_EQ(inverse.at(1, 1), p("s*t - s*t^-1 + s^-1*t^-1"));
  EXPECT_EQ(product + inverse, SparseMap::identity(ring, ColorSpace::of({t, s})).scaled(p("t*s + t^-1*s^-1")));
}

TEST_F(VerifierTest, MMatrixEntries) {
  const SparseMap m1 = build_M(1, ring, t, s, u);
  const SparseMap m2 = build_M(2, ring, t, s, u);
  const SparseMap m3 = build_M(3, ring, t, s, u);
  EXPECT_EQ(m1.domain(), ColorSpace::of({u, s, t}));
  EXPECT_EQ(m1.codomain(), ColorSpace::of({t, s, u}));
  EXPECT_EQ(m1.at(0, 0), p("u + u*t^-2"));
  EXPECT_EQ(m2.at(0, 0), p("u^2*t^-1 + t^-1"));
  EXPECT_EQ(m3.at(7, 7), p("-t^-2*s^-1 - s*u^2"));
  EXPECT_EQ(m3.at(6, 5), p("t^-1*u^-1 - u*t^-1"));
  EXPECT_THROW(build_M(4, ring, t, s, u), Error);

  // every transcribed entry, including the zeros, matches
  const RingPtr ref = reference_ring();
  const ColorSpace dom = ColorSpace::of({ref->var("u"), ref->var("s"), ref->var("t")});
  const ColorSpace cod = ColorSpace::of({ref->var("t"), ref->var("s"), ref->var("u")});
  const RingPtr plain = Ring::colors({"t", "s", "u"});
  int k = 1;
  for (const char* name : {"relation_III_M1", "relation_III_M2", "relation_III_M3"}) {
    const SparseMap fixture = parse_fixture(ref, dom, cod, reference_fixture(name));
    const SparseMap ours = build_M(k++, plain, plain->var("t"), plain->var("s"), plain->var("u"));
    for (SparseMap::Index row = 0; row < 8; ++row) {
      for (SparseMap::Index col = 0; col < 8; ++col) {
        EXPECT_EQ(ours.at(row, col), fixture.at(row, col)) << name << " (" << row + 1 << "," << col + 1 << ")";
      }
    }
  }
}

TEST_F(VerifierTest, RelationThree) {
  const VerificationReport r = verify_relation_III(ring, t, s, u, true);
  EXPECT_TRUE(r.passed) << r.to_text();
  const SparseMap sum = build_M(1, ring, t, s, u).scaled(p("t^-1*s^-1 - t*s")) +
                        build_M(2, ring, t, s, u).scaled(p("s*u - s^-1*u^-1")) +
                        build_M(3, ring, t, s, u).scaled(p("t*u^-1 - u*t^-1"));
  EXPECT_TRUE(sum.is_zero());
}

TEST_F(VerifierTest, Phi) {
  const PhiResult phi = verify_phi(ring, t, s);
  const LaurentPoly d = p("t - t^-1");
  EXPECT_EQ(phi.inverse_scalar, d.scaled(kPhiInverseSign));
  EXPECT_EQ(phi.positive_scalar, d.scaled(-kPhiInverseSign));
  EXPECT_EQ(phi.inverse_sign, kPhiInverseSign);
  EXPECT_EQ(phi.inverse_scalar * phi.positive_scalar, -(d * d));
  // stable across runs
  EXPECT_EQ(verify_phi(ring, t, s).inverse_scalar, phi.inverse_scalar);
  EXPECT_TRUE(phi_report(ring, t, s).passed);
}

TEST_F(VerifierTest, Hopf) {
  const HopfResult h = verify_hopf();
  EXPECT_EQ(h.open_first, h.open_second);
  EXPECT_EQ(h.open_first.num().constant_value(), GaussianRational(kHopfSign));
  EXPECT_TRUE(h.open_first.den().empty());
  EXPECT_EQ(h.mirror.num().constant_value(), GaussianRational(-kHopfSign));
  EXPECT_TRUE(h.with_split_unknot.is_zero());
  EXPECT_TRUE(hopf_report().passed);
}

TEST_F(VerifierTest, YangBaxterAndCurl) {
  EXPECT_TRUE(verify_ybe(ring, t, s, u).passed);
  EXPECT_TRUE(verify_ybe(ring, t, t, t).passed);
  EXPECT_TRUE(verify_curl(ring, t).passed);
}

TEST_F(VerifierTest, WitnessOnMismatch) {
  VerificationReport r("demo");
  const SparseMap a = r_pos(ring, t, s);
  SparseMap b = a + SparseMap(ring, a.domain(), a.codomain(), {{2, 1, p("t")}, {3, 3, p("1")}});
  EXPECT_FALSE(expect_equal(r, "perturbed", b, a));
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->check, "perturbed");
  EXPECT_EQ(r.witness->row, 2U);
  EXPECT_EQ(r.witness->col, 1U);
  EXPECT_EQ(r.witness->expected, "1");
  EXPECT_EQ(r.witness->actual, "t + 1");
  // the first witness is kept
  EXPECT_FALSE(expect_equal(r, "second", a.scaled(p("2")), a));
  EXPECT_EQ(r.witness->check, "perturbed");
  const std::string text = r.to_text();
  EXPECT_NE(text.find("relation demo: FAIL"), std::string::npos) << text;

  VerificationReport shape("shape");
  EXPECT_FALSE(expect_equal(shape, "wrong shape", r_pos(ring, t, s), r_pos(ring, s, t)));
}

TEST_F(VerifierTest, RunVerification) {
  EXPECT_GE(relation_ids().size(), 9U);
  const auto all = run_verification("all", {true});
  EXPECT_EQ(all.size(), relation_ids().size());
  for (const auto& r : all) EXPECT_TRUE(r.passed) << r.to_text();
  const auto three = run_verification("III", {true});
  ASSERT_EQ(three.size(), 1U);
  EXPECT_EQ(three[0].relation, "III");
  EXPECT_THROW(run_verification("nope"), Error);
}

}  // namespace
}  // namespace cpf
