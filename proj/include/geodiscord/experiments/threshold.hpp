#pragma once

namespace geodiscord::experiments {

/// Steady-state gain of the trace discord in a common reservoir:
/// D_T(steady state) - D_T(initial |Phi>) as a function of alpha^2.
double steady_gain(double alpha2);

/// Largest alpha^2 in [0, 1/2] for which the steady trace discord exceeds
/// its initial value, located by bisection of steady_gain to width `width`.
double generation_threshold(double width = 1e-6);

}  // namespace geodiscord::experiments
