#include "cpf/rep.hpp"

#include "cpf/error.hpp"

namespace cpf {

namespace {

LaurentPoly var(const RingPtr& ring, Variable v, int e = 1) { return LaurentPoly::variable(ring, v, e); }
LaurentPoly num(const RingPtr& ring, const GaussianRational& c) { return LaurentPoly::constant(ring, c); }

void require_color(const Ring& ring, Variable v) {
  if (v.id >= ring.size() || ring.specs()[v.id].kind != VariableKind::kColor) {
    throw Error("expected a color variable");
  }
}

}  // namespace

GaussianRational zeta_value(Zeta z) {
  return z == Zeta::kPlusI ? GaussianRational::i() : -GaussianRational::i();
}

RepMatrices rep_matrices(const RingPtr& ring, Variable t, Variable alpha, Zeta zeta) {
  require_color(*ring, t);
  if (alpha.id >= ring->size() || ring->specs()[alpha.id].kind != VariableKind::kFormal) {
    throw Error("H needs a formal variable for alpha");
  }
  const ColorSpace v = ColorSpace::of({t});
  const GaussianRational z = zeta_value(zeta);
  const GaussianRational e_scale = (z - z.inverse()).inverse();
  const LaurentPoly t_diff = var(ring, t) - var(ring, t, -1);
  const LaurentPoly a = var(ring, alpha);

  return RepMatrices{
      SparseMap(ring, v, v, {{0, 1, t_diff.scaled(e_scale)}}),
      SparseMap(ring, v, v, {{1, 0, num(ring, 1)}}),
      SparseMap::diagonal(ring, v, {var(ring, t), -var(ring, t)}),
      SparseMap::diagonal(ring, v, {var(ring, t, -1), -var(ring, t, -1)}),
      SparseMap::diagonal(ring, v, {a, a - num(ring, 2)}),
  };
}

SparseMap r_pos(const RingPtr& ring, Variable t, Variable s) {
  require_color(*ring, t);
  require_color(*ring, s);
  return SparseMap(ring, ColorSpace::of({t, s}), ColorSpace::of({s, t}),
                   {
                       {0, 0, var(ring, t)},
                       {1, 2, var(ring, t) * var(ring, s, -1)},
                       {2, 1, num(ring, 1)},
                       {2, 2, var(ring, t) - var(ring, t, -1)},
                       {3, 3, -var(ring, s, -1)},
                   });
}

// Middle block of r_pos is [[0, t/s], [1, t - 1/t]] with determinant -t/s.
SparseMap r_neg(const RingPtr& ring, Variable t, Variable s) {
  require_color(*ring, t);
  require_color(*ring, s);
  return SparseMap(ring, ColorSpace::of({s, t}), ColorSpace::of({t, s}),
                   {
                       {0, 0, var(ring, t, -1)},
                       {1, 1, var(ring, s) * var(ring, t, -2) - var(ring, s)},
                       {1, 2, num(ring, 1)},
                       {2, 1, var(ring, s) * var(ring, t, -1)},
                       {3, 3, -var(ring, s)},
                   });
}

SparseMap dual_ev(const RingPtr& ring, Variable t) {
  require_color(*ring, t);
  return SparseMap(ring, ColorSpace({{t, true}, {t, false}}), ColorSpace(),
                   {{0, 0, num(ring, 1)}, {0, 3, num(ring, 1)}});
}

SparseMap dual_coev(const RingPtr& ring, Variable t) {
  require_color(*ring, t);
  return SparseMap(ring, ColorSpace(), ColorSpace({{t, false}, {t, true}}),
                   {{0, 0, num(ring, 1)}, {3, 0, num(ring, 1)}});
}

SparseMap dual_ev_tilde(const RingPtr& ring, Variable t) {
  require_color(*ring, t);
  return SparseMap(ring, ColorSpace({{t, false}, {t, true}}), ColorSpace(),
                   {{0, 0, var(ring, t, -1)}, {0, 3, -var(ring, t, -1)}});
}

SparseMap dual_coev_tilde(const RingPtr& ring, Variable t) {
  require_color(*ring, t);
  return SparseMap(ring, ColorSpace(), ColorSpace({{t, true}, {t, false}}),
                   {{0, 0, var(ring, t)}, {3, 0, -var(ring, t)}});
}

}  // namespace cpf
