#pragma once
// Closed-form s-wave results for the model potentials and the point Coulomb
// problem; used as the oracle for the numerical solvers.

#include <string>
#include <vector>

#include "specqm/potential.hpp"

namespace specqm {

struct ExactPhase {
  double delta;  ///< raw value of the Im ln / arg expression (branch as produced)
  double tan_delta;
};

/// xi = p a (p bohr for Coulomb); l only used for the Coulomb model
ExactPhase exact_phase(const PotentialModel& m, double xi, int l = 0);

struct ExactResult {
  double value;
  std::string formula;
  bool near_pole;  ///< |value| > 1e6 a
};
/// A/a with A = lim delta / p
ExactResult exact_scattering_length(const PotentialModel& m);

/// residual of the bound-state condition at x = kappa a (continuous in x except Hulthen)
double exact_bound_condition(const PotentialModel& m, double x, int l = 0);
/// bound-state x values in (lo, hi), descending
std::vector<double> exact_bound_states(const PotentialModel& m, double lo, double hi, int l = 0);

/// U_l(k, k'); l = 0 for the short-range models, any l for Coulomb (k != k')
double exact_momentum_potential(const PotentialModel& m, int l, double k, double kp);

}  // namespace specqm
