#pragma once
// Model potentials, stored as 2 mu V(r) with s = 2 mu V0 a^2.

#include <cmath>
#include <string>

namespace specqm {

enum class PotentialKind { Exponential, Hulthen, Morse, CoulombPoint };

struct PotentialModel {
  PotentialKind kind = PotentialKind::Exponential;
  double s = 0.0;     ///< dimensionless strength
  double a = 1.0;     ///< range
  double d = 0.0;     ///< Morse offset
  int Z = 0;          ///< Coulomb overlay charge; 2 mu V_C = 2 Z / (bohr r)
  double bohr = 1.0;  ///< 1/(mu alpha)
  double mu = 1.0;    ///< only used to convert kappa to a binding energy

  /// 2 mu V of the short-range part (zero for CoulombPoint)
  double v(double r) const;
  /// 2 mu V_C
  double coulomb(double r) const { return Z == 0 ? 0.0 : 2.0 * Z / (bohr * r); }
  double total(double r) const { return v(r) + coulomb(r); }
  bool has_coulomb() const { return Z != 0; }
  /// Sommerfeld parameter at momentum p (or eta~ at kappa)
  double eta(double p) const { return Z / (bohr * p); }
  /// 2 mu alpha |Z|
  double beta() const { return 2.0 * std::abs(double(Z)) / bohr; }
  /// chi(0) = mu lim r V / (l+1), V including the Coulomb part
  double c_constant(int l) const;
  /// length unit used for default cutoffs and mappings
  double range() const { return kind == PotentialKind::CoulombPoint ? bohr : a; }
  std::string name() const;
};

PotentialModel exponential_model(double s, double a = 1.0);
PotentialModel hulthen_model(double s, double a = 1.0);
PotentialModel morse_model(double s, double a, double d);
/// attractive hydrogen-like for Z < 0
PotentialModel coulomb_model(int Z = -1, double bohr = 1.0);

}  // namespace specqm
