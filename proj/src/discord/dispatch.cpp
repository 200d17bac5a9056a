#include "geodiscord/discord/dispatch.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"
#include "geodiscord/discord/bures.hpp"
#include "geodiscord/discord/params.hpp"
#include "geodiscord/discord/trace_distance.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace geodiscord::discord {
namespace {

bool is_bell_diagonal(const DensityMatrix& rho) {
  const double tol = rho.tolerance();
  return is_x_form(rho.matrix(), tol) && std::abs(rho(0, 0) - rho(3, 3)) <= tol &&
         std::abs(rho(1, 1) - rho(2, 2)) <= tol && std::abs(rho(0, 3).imag()) <= tol &&
         std::abs(rho(1, 2).imag()) <= tol;
}

BellDiagonalParams correlations(const DensityMatrix& rho) {
  const double r14 = rho(0, 3).real();
  const double r23 = rho(1, 2).real();
  BellDiagonalParams c;
  c.c1 = 2.0 * (r23 + r14);
  c.c2 = 2.0 * (r23 - r14);
  c.c3 = (rho(0, 0) + rho(3, 3) - rho(1, 1) - rho(2, 2)).real();
  return c;
}

std::vector<Complex> leading_amplitudes(const DensityMatrix& rho) {
  const EigenSystem eig = herm_eig(rho.matrix(), rho.tolerance());
  const double weight = std::sqrt(std::max(0.0, eig.values.front()));
  std::vector<Complex> psi(rho.dim());
  double norm2 = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) norm2 += std::norm(eig.vectors(i, 0));
  for (std::size_t i = 0; i < rho.dim(); ++i) psi[i] = eig.vectors(i, 0) * (weight / std::sqrt(norm2));
  // Renormalize away the O(tolerance) deficit of a numerically pure state.
  double n2 = 0.0;
  for (const auto& a : psi) n2 += std::norm(a);
  for (auto& a : psi) a /= std::sqrt(n2);
  return psi;
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("discord measures need a two-qubit (4x4) state");
}

}  // namespace

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::general: return "general";
    case StateClass::x_state: return "x-state";
    case StateClass::bell_diagonal: return "bell-diagonal";
    case StateClass::pure: return "pure";
  }
  return "general";
}

std::string_view to_string(Measure m) { return m == Measure::trace ? "trace" : "bures"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::closed: return "closed";
    case Method::oracle: return "oracle";
  }
  return "auto";
}

std::optional<Measure> parse_measure(std::string_view text) {
  if (text == "trace") return Measure::trace;
  if (text == "bures") return Measure::bures;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "closed") return Method::closed;
  if (text == "oracle") return Method::oracle;
  return std::nullopt;
}

StateClass classify_state(const DensityMatrix& rho) {
  require_two_qubits(rho);
  if (herm_eigenvalues(rho.matrix()).front() >= 1.0 - rho.tolerance()) return StateClass::pure;
  if (is_bell_diagonal(rho)) return StateClass::bell_diagonal;
  if (is_x_form(rho.matrix(), rho.tolerance())) return StateClass::x_state;
  return StateClass::general;
}

MeasureResult evaluate_measure(const DensityMatrix& rho, Measure measure, Method method,
                               const MeasurementGrid& grid) {
  const StateClass route = classify_state(rho);
  MeasureResult r;
  r.route = route;

  if (measure == Measure::trace) {
    if (method == Method::oracle) {
      r.value = dt_measurement_oracle(rho, grid);
      r.formula = "measurement search";
      return r;
    }
    if (is_bell_diagonal(rho)) {
      r.value = dt_bell_diagonal(correlations(rho));
      r.formula = "bell-diagonal middle correlation";
    } else if (is_x_form(rho.matrix(), rho.tolerance())) {
      r.value = dt_xstate(XStateParams::from_matrix(rho));
      r.formula = "x-state closed form";
    } else if (method == Method::closed) {
      throw InvalidStateError("no closed trace-distance formula for a state without X structure");
    } else {
      r.value = dt_measurement_oracle(rho, grid);
      r.formula = "measurement search";
    }
    return r;
  }

  if (method != Method::oracle) {
    if (route == StateClass::pure) {
      r.value = db_pure(leading_amplitudes(rho), 2);
      r.formula = "largest Schmidt weight";
      return r;
    }
    if (route == StateClass::bell_diagonal) {
      r.value = db_from_fmax(fmax_bell_diagonal(correlations(rho)));
      r.formula = "bell-diagonal fidelity maximum";
      return r;
    }
    if (method == Method::closed) {
      throw InvalidStateError("no closed Bures formula for a " + std::string(to_string(route)) + " state");
    }
  }
  r.value = db_from_fmax(fmax_2xn(rho, 2, grid).fmax);
  r.formula = "sphere maximization of the fidelity";
  return r;
}

}  // namespace geodiscord::discord
