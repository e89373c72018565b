#pragma once

#include "cpf/sparse_map.hpp"

namespace cpf {

/// Which primitive fourth root of unity plays the role of q.
enum class Zeta { kPlusI, kMinusI };

GaussianRational zeta_value(Zeta z);

/// The two-dimensional highest-weight module V(t) of unrolled restricted
/// quantum sl2 at q = zeta, in the basis (v0, F v0):
///   F = [[0,0],[1,0]]        E = (t - t^-1)/(zeta - zeta^-1) [[0,1],[0,0]]
///   K = diag(t, -t)          H = diag(alpha, alpha - 2)
struct RepMatrices {
  SparseMap E;
  SparseMap F;
  SparseMap K;
  SparseMap Kinv;
  SparseMap H;
};

/// `alpha` must be a formal variable of the same ring.
RepMatrices rep_matrices(const RingPtr& ring, Variable t, Variable alpha, Zeta zeta = Zeta::kPlusI);

/// Normalized braiding V(t) (x) V(s) -> V(s) (x) V(t):
///   [[t, 0,      0,        0     ],
///    [0, 0,      t s^-1,   0     ],
///    [0, 1,      t - t^-1, 0     ],
///    [0, 0,      0,        -s^-1 ]]
SparseMap r_pos(const RingPtr& ring, Variable t, Variable s);

/// Inverse of r_pos(t, s): V(s) (x) V(t) -> V(t) (x) V(s).
SparseMap r_neg(const RingPtr& ring, Variable t, Variable s);

/// ev: V(t)* (x) V(t) -> C,   e_i* (x) e_j |-> delta_ij
SparseMap dual_ev(const RingPtr& ring, Variable t);
/// coev: C -> V(t) (x) V(t)*,   1 |-> sum_i e_i (x) e_i*
SparseMap dual_coev(const RingPtr& ring, Variable t);
/// ev~: V(t) (x) V(t)* -> C,   e_i (x) e_j* |-> e_j*(K^-1 e_i)
SparseMap dual_ev_tilde(const RingPtr& ring, Variable t);
/// coev~: C -> V(t)* (x) V(t),   1 |-> sum_i e_i* (x) K e_i
SparseMap dual_coev_tilde(const RingPtr& ring, Variable t);

}  // namespace cpf
