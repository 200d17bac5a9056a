#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace geodiscord {

/// Direction on the Bloch sphere in polar coordinates.
/// theta is kept in [0, pi] and phi in [0, 2 pi).
class UnitVector3 {
 public:
  UnitVector3() = default;
  UnitVector3(double theta, double phi) : theta_(theta), phi_(phi) { normalize_angles(); }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  std::array<double, 3> cartesian() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
  }

 private:
  void normalize_angles() {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta_ = std::fmod(theta_, two_pi);
    if (theta_ < 0) theta_ += two_pi;
    if (theta_ > std::numbers::pi) {
      // Reflect through the pole: (theta, phi) and (2pi - theta, phi + pi) name the same point.
      theta_ = two_pi - theta_;
      phi_ += std::numbers::pi;
    }
    phi_ = std::fmod(phi_, two_pi);
    if (phi_ < 0) phi_ += two_pi;
    if (phi_ >= two_pi) phi_ = 0.0;
  }

  double theta_ = 0.0;
  double phi_ = 0.0;
};

}  // namespace geodiscord
