#include "geodiscord/reservoir/lorentzian.hpp"

#include <cmath>

namespace geodiscord::reservoir::detail {
namespace {

Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-3) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

}  // namespace

LorentzianAmplitude lorentzian_amplitude(double t, double gamma, double lambda, double delta) {
  const Complex l(lambda, -delta);
  const Complex d = std::sqrt(l * l - 2.0 * gamma * lambda);
  const Complex half_dt = 0.5 * d * t;

  LorentzianAmplitude out;
  if (std::abs(half_dt) < 1.0) {
    const Complex envelope = std::exp(-0.5 * l * t);
    const Complex sh = 0.5 * t * sinhc(half_dt);  // sinh(Dt/2) / D
    out.value = envelope * (std::cosh(half_dt) + l * sh);
    out.derivative = -gamma * lambda * envelope * sh;
  } else {
    // Split into the two normal modes so that large t never overflows.
    const Complex slow = std::exp(0.5 * (-l + d) * t);
    const Complex fast = std::exp(0.5 * (-l - d) * t);
    out.value = 0.5 * ((1.0 + l / d) * slow + (1.0 - l / d) * fast);
    out.derivative = -gamma * lambda / d * 0.5 * (slow - fast);
  }
  return out;
}

}  // namespace geodiscord::reservoir::detail
