#pragma once
// Configuration-space two-body solvers: the regularised Schroedinger system,
// Volterra forms of the Lippmann-Schwinger equation, the Fredholm determinant
// on the imaginary axis, and the multi-partition (composite) variant.

#include <string>
#include <vector>

#include "specqm/cheb_core.hpp"
#include "specqm/potential.hpp"

namespace specqm {

struct SolveConfig {
  int l = 0;
  std::size_t N = 64;
  double R = 0.0;                  ///< cutoff; <= 0 means 30 * model range
  std::vector<double> partitions;  ///< interior break points for composite solves
  double cutoff(const PotentialModel& m) const { return R > 0.0 ? R : 30.0 * m.range(); }
};

struct ScatteringOutput {
  double tan_delta = 0.0;
  double delta = 0.0;  ///< atan(tan_delta), in (-pi/2, pi/2]
  double scattering_length = 0.0;
  double bound_kappa = 0.0;
  bool pole = false;        ///< scattering-length pole / vanishing denominator
  bool r_warning = false;   ///< |2 mu V(R)| / p^2 > 1e-8
  double condition = 0.0;   ///< of the collocation system
  double residual = 0.0;
  std::string method;
};

// ---- Schroedinger first-order system ----

ScatteringOutput schrod_phase_shift(const PotentialModel& m, double p, const SolveConfig& cfg);
ScatteringOutput schrod_scattering_length(const PotentialModel& m, const SolveConfig& cfg);
/// bound-state matching function at kappa, scaled by exp(-kappa R)
double schrod_bound_residual(const PotentialModel& m, double kappa, const SolveConfig& cfg);
/// deepest state in (kappa_lo, kappa_hi); NumericalError when there is none
ScatteringOutput schrod_bound_state(const PotentialModel& m, const SolveConfig& cfg, double kappa_lo,
                                    double kappa_hi);

// ---- Volterra (configuration-space Lippmann-Schwinger) ----

ScatteringOutput volterra_phase_shift(const PotentialModel& m, double p, const SolveConfig& cfg);
ScatteringOutput volterra_scattering_length(const PotentialModel& m, const SolveConfig& cfg);
double fredholm_determinant(const PotentialModel& m, double kappa, const SolveConfig& cfg);
/// same bracket rule as schrod_bound_state
ScatteringOutput bound_state_from_determinant(const PotentialModel& m, const SolveConfig& cfg,
                                              double kappa_lo, double kappa_hi);

// ---- composite partitions ----

struct PartitionSolution {
  ChebGrid grid;
  Vector u, w, du, dw;  ///< local regular / irregular solutions and r-derivatives
  double A, B;          ///< global = A u + B w on this partition
};

struct CompositeResult {
  std::vector<PartitionSolution> parts;
  double psi_R, dpsi_R;  ///< global solution at the cutoff
  ScatteringOutput out;
};

/// scattering at momentum p; partition radii from cfg.partitions (empty = one partition)
CompositeResult composite_solve(const PotentialModel& m, double p, const SolveConfig& cfg);
/// negative energy counterpart; out.bound_kappa unset
CompositeResult composite_solve_bound(const PotentialModel& m, double kappa, const SolveConfig& cfg);
double composite_bound_residual(const PotentialModel& m, double kappa, const SolveConfig& cfg);
ScatteringOutput composite_bound_state(const PotentialModel& m, const SolveConfig& cfg,
                                       double kappa_lo, double kappa_hi);
/// u'w - uw' ... evaluated as W[w,u] = w u' - u w' at the midpoint of partition k
double composite_wronskian_mid(const CompositeResult& r, std::size_t k);

// ---- helpers ----

enum class ConfigMethod { Schrodinger, Volterra };

/// tan delta at (N, R) and at (2N, 1.5R); reports the difference
struct ConvergenceCheck {
  ScatteringOutput base;
  double tan_refined;
  double difference;
};
ConvergenceCheck phase_shift_checked(const PotentialModel& m, double p, const SolveConfig& cfg,
                                     ConfigMethod method);

/// all bound-state kappas in (lo, hi) by a log-spaced scan of the given residual
std::vector<double> scan_bound_states(const PotentialModel& m, const SolveConfig& cfg, double lo,
                                      double hi, int n, ConfigMethod method);

}  // namespace specqm
