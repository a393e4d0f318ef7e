#pragma once

#include "ada/ops.hpp"
#include "ada/params.hpp"

namespace ada {

// Closed forms of the three Argyres-Douglas dualities and of the
// intermediate steps of the second one. Each function computes the target
// parameter directly from the formulas; the verification suites check them
// against the corresponding compositions of elementary operations, which
// are implemented independently in ops.

// Duality I: (m, s/r, [Y]) -> (m, s/(r+ls), [(ms)^l, Y]); equals (F+)^l.
// Requires a standard type-I parameter.
ADAParameter duality_add_columns(const ADAParameter& t, int l);

// Duality II: (m, s/r, [Y]) -> (m, s/(Ls-r), [Y^c]) with L the number of
// columns of Y and Y^c its complement in the height-ms box; equals
// (F+)^{L-1-kappa} F (F-)^kappa with r = kappa*s + rho. Requires standard
// type-I, s > 1 and L*s > r (i.e. L > kappa).
ADAParameter duality_complement(const ADAParameter& t);

// Parameter after the first l steps of the duality II composition,
// 0 <= l <= L, by the closed three-regime formulas.
ADAParameter intermediate(const ADAParameter& t, int l);

// The composition realizing duality II ((F-)^kappa, then F, then
// (F+)^{L-1-kappa}); its length-l prefix realizes intermediate(t, l).
std::vector<Operation> duality_complement_sequence(const ADAParameter& t);

// Duality III: standard non-type-I (m, s/r, {1:[Y]}, {beta_j:[1]}) ->
// (m, s/(kappa*s+r), {1:[Y]} u {beta_j:[ms-1]}, {}); equals
// F+_{beta_kappa} ... F+_{beta_1}.
ADAParameter duality_iii(const ADAParameter& t);

// The twisted composition realizing duality III.
std::vector<Operation> duality_iii_sequence(const ADAParameter& t);

} // namespace ada
