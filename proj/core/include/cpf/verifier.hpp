#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpf/braid.hpp"
#include "cpf/rep.hpp"

namespace cpf {

/// First entry, in (row, col) order, where two maps disagree.
struct Witness {
  std::string check;
  SparseMap::Index row = 0;
  SparseMap::Index col = 0;
  std::string expected;
  std::string actual;
};

/// Outcome of one relation family. `passed` means exact equality of every
/// sub-check listed in `checks`.
struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string id) : relation(std::move(id)) {}

  std::string relation;
  bool passed = true;
  std::vector<std::string> checks;
  std::optional<Witness> witness;
  std::string note;

  /// Structured text: "relation <id>: PASS|FAIL", then one line per check,
  /// the witness and the note when present.
  std::string to_text() const;
};

/// Records `check` on the report and compares; keeps the first witness.
bool expect_equal(VerificationReport& report, const std::string& check, const SparseMap& actual,
                  const SparseMap& expected);

/// Ring with colors t, s, u and the formal variable alpha.
RingPtr verification_ring();

/// KK^-1 = K^-1K = 1, KE = -EK, KF = -FK, [E,F] = (K - K^-1)/(zeta - zeta^-1),
/// HK = KH, [H,E] = 2E, [H,F] = -2F, E^2 = F^2 = 0.
VerificationReport verify_algebra(const RingPtr& ring, Variable t, Variable alpha, Zeta zeta = Zeta::kPlusI);

/// The four zig-zag identities for the duality maps of V(t).
VerificationReport verify_zigzag(const RingPtr& ring, Variable t);

/// ev~ o coev = 0, ev o coev~ = 0 and the K^-1-weighted trace of id is 0.
VerificationReport verify_quantum_dim_zero(const RingPtr& ring, Variable t);

/// R_st R_ts + (R_st R_ts)^-1 = (ts + (ts)^-1) id, optionally comparing both
/// products against the reference fixtures.
VerificationReport verify_relation_II(const RingPtr& ring, Variable t, Variable s, bool with_fixtures = true);

/// One of the three sums of triple compositions
/// V(u) (x) V(s) (x) V(t) -> V(t) (x) V(s) (x) V(u).
SparseMap build_M(int k, const RingPtr& ring, Variable t, Variable s, Variable u);

/// (1/(ts) - ts) M1 + (su - 1/(su)) M2 + (t/u - u/t) M3 = 0, optionally with
/// entry-by-entry comparison of M1..M3 against the reference fixtures.
VerificationReport verify_relation_III(const RingPtr& ring, Variable t, Variable s, Variable u,
                                       bool with_fixtures = true);

/// Sign of (id (x) ev~_s)((R_st R_ts)^-1 (x) id)(id (x) coev_s) relative to
/// (t - t^-1), as computed under this library's conventions.
inline constexpr int kPhiInverseSign = -1;

struct PhiResult {
  LaurentPoly inverse_scalar;   ///< closure using (R_st R_ts)^-1
  LaurentPoly positive_scalar;  ///< closure using R_st R_ts
  int inverse_sign = 0;         ///< +-1 when inverse_scalar = +-(t - t^-1), else 0
};

/// Throws InternalError if either closure is not a scalar multiple of id.
PhiResult verify_phi(const RingPtr& ring, Variable t, Variable s);
VerificationReport phi_report(const RingPtr& ring, Variable t, Variable s);

struct HopfResult {
  RestrictedFraction open_first;
  RestrictedFraction open_second;
  RestrictedFraction mirror;
  RestrictedFraction with_split_unknot;
};

/// cpf of sigma_1^2 with either strand open, of sigma_1^-2, and of the Hopf
/// link plus a split unknot, all over colors (t1, t2) (and t3 for the unknot).
HopfResult verify_hopf();
VerificationReport hopf_report();

/// Colored Yang-Baxter for r_pos and, separately, for r_neg, as maps
/// V(t) (x) V(s) (x) V(u) -> V(u) (x) V(s) (x) V(t) (and the inverse shape).
VerificationReport verify_ybe(const RingPtr& ring, Variable t, Variable s, Variable u);

/// Right and left kinks of r_pos(t,t) and r_neg(t,t) close to id on V(t).
VerificationReport verify_curl(const RingPtr& ring, Variable t);

struct VerifyOptions {
  bool with_fixtures = true;
};

/// Relation ids accepted by run_verification, in run order.
const std::vector<std::string>& relation_ids();

/// Runs one relation id, or every relation for "all". Throws cpf::Error on an
/// unknown id.
std::vector<VerificationReport> run_verification(const std::string& selector, const VerifyOptions& options = {});

}  // namespace cpf
