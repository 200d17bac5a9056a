#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/discord/params.hpp"
#include "geodiscord/discord/sphere_search.hpp"

namespace geodiscord::discord {

/// Closed-form trace-distance discord of a two-qubit X state.
double dt_xstate(const XStateParams& x);

/// Trace-distance discord of a Bell-diagonal state: the middle one of
/// |c1|, |c2|, |c3|.
double dt_bell_diagonal(const BellDiagonalParams& c);

/// || rho - Pi_u(rho) ||_1 where Pi_u dephases qubit A in the eigenbasis of
/// u . sigma.
double measurement_distance(const DensityMatrix& rho, const UnitVector3& u);

/// Brute-force trace-distance discord: minimum of measurement_distance over
/// directions u. Independent of the closed forms; used for cross-checks and
/// for states without X structure.
SphereOptimum dt_measurement_search(const DensityMatrix& rho, const MeasurementGrid& grid = {});
double dt_measurement_oracle(const DensityMatrix& rho, const MeasurementGrid& grid = {});

}  // namespace geodiscord::discord
