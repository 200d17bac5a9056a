#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/discord/sphere_search.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace geodiscord::discord {

enum class StateClass { general, x_state, bell_diagonal, pure };
enum class Measure { trace, bures };
enum class Method { automatic, closed, oracle };

std::string_view to_string(StateClass c);
std::string_view to_string(Measure m);
std::string_view to_string(Method m);
std::optional<Measure> parse_measure(std::string_view text);
std::optional<Method> parse_method(std::string_view text);

/// Most specific structure of a two-qubit state, in precedence
/// pure > bell-diagonal > x-state > general, decided at the state's tolerance.
StateClass classify_state(const DensityMatrix& rho);

struct MeasureResult {
  double value = 0.0;
  StateClass route = StateClass::general;
  std::string formula;  ///< human-readable name of the evaluation path
};

/// Evaluates a discord measure on a two-qubit state.
///
/// automatic picks the cheapest valid path: pure states use the Schmidt
/// shortcut for Bures, Bell-diagonal states the correlation-triple formulas,
/// X states the closed trace formula and the sphere maximization for Bures,
/// anything else the measurement search and the sphere maximization.
/// closed insists on a closed form and throws InvalidStateError when the
/// state has none; oracle always takes the numerical search.
MeasureResult evaluate_measure(const DensityMatrix& rho, Measure measure,
                               Method method = Method::automatic,
                               const MeasurementGrid& grid = {});

}  // namespace geodiscord::discord
