#pragma once

#include <string_view>
#include <vector>

#include "cpf/ring.hpp"

namespace cpf {

/// Hand-transcribed reference matrices in fixture text form. They are data,
/// never regenerated from this library:
///   relation_II_product   R_st R_ts on V(t) (x) V(s)
///   relation_II_inverse   (R_st R_ts)^-1
///   relation_III_M1..M3   V(u) (x) V(s) (x) V(t) -> V(t) (x) V(s) (x) V(u)
std::string_view reference_fixture(std::string_view name);
std::vector<std::string_view> reference_fixture_names();

/// Color ring (t, s, u) the fixtures are written in.
RingPtr reference_ring();

}  // namespace cpf
