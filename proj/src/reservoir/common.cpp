#include "geodiscord/reservoir/common.hpp"

#include "geodiscord/reservoir/lorentzian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geodiscord::reservoir {

AmplitudeTriple amplitude_common(double scaled_t, const InitialPhi& init, const ReservoirParams& params) {
  params.validate();
  if (params.topology != Topology::common) throw std::invalid_argument("amplitude_common requires a common reservoir");
  if (!(scaled_t >= 0.0) || !std::isfinite(scaled_t)) throw std::invalid_argument("scaled time must be >= 0");

  const auto psi = init.amplitudes();
  const Complex c1 = psi[2];
  const Complex c2 = psi[1];
  const Complex bright0 = (c1 + c2) / std::numbers::sqrt2;
  const Complex dark = (c1 - c2) / std::numbers::sqrt2;

  // Collective coupling sqrt2 g doubles the effective decay rate.
  const auto q = detail::lorentzian_amplitude(scaled_t / params.gamma0, 2.0 * params.gamma0, params.lambda,
                                              params.delta);
  const Complex bright = q.value * bright0;
  // c+' = -i G b with G^2 = gamma0 lambda.
  const double coupling = std::sqrt(params.gamma0 * params.lambda);

  AmplitudeTriple out;
  out.c1 = (bright + dark) / std::numbers::sqrt2;
  out.c2 = (bright - dark) / std::numbers::sqrt2;
  out.b = Complex(0.0, 1.0) * q.derivative * bright0 / coupling;
  return out;
}

DensityMatrix evolve_common(const InitialPhi& init, double scaled_t, const ReservoirParams& params) {
  const AmplitudeTriple a = amplitude_common(scaled_t, init, params);
  ComplexMatrix rho(4, 4);
  rho(2, 2) = std::norm(a.c1);
  rho(1, 1) = std::norm(a.c2);
  rho(2, 1) = a.c1 * std::conj(a.c2);
  rho(1, 2) = std::conj(rho(2, 1));
  rho(0, 0) = 1.0 - std::norm(a.c1) - std::norm(a.c2);
  return DensityMatrix(std::move(rho));
}

double dark_weight(const InitialPhi& init) {
  init.validate();
  const double alpha = std::sqrt(init.alpha2);
  return 0.5 * (1.0 - 2.0 * alpha * std::sqrt(1.0 - init.alpha2) * std::cos(init.phase));
}

DensityMatrix steady_common(const InitialPhi& init) {
  const double s = dark_weight(init);
  ComplexMatrix rho(4, 4);
  rho(0, 0) = 1.0 - s;
  rho(1, 1) = 0.5 * s;
  rho(2, 2) = 0.5 * s;
  rho(1, 2) = -0.5 * s;
  rho(2, 1) = -0.5 * s;
  return DensityMatrix(std::move(rho));
}

}  // namespace geodiscord::reservoir
