#include "specqm/potential.hpp"

#include <cmath>

#include "specqm/linalg.hpp"

namespace specqm {

double PotentialModel::v(double r) const {
  const double k = s / (a * a);
  switch (kind) {
    case PotentialKind::Exponential:
      return -k * std::exp(-r / a);
    case PotentialKind::Hulthen:
      return r == 0.0 ? -INFINITY : -k / std::expm1(r / a);
    case PotentialKind::Morse: {
      const double e = std::exp((d - r) / a);
      return -k * e * (2.0 - e);
    }
    case PotentialKind::CoulombPoint:
      return 0.0;
  }
  return 0.0;
}

double PotentialModel::c_constant(int l) const {
  double lim = 0.0;  // lim r -> 0 of r 2 mu V
  if (kind == PotentialKind::Hulthen) lim -= s / a;
  lim += 2.0 * Z / bohr;
  return lim / (2.0 * (l + 1.0));
}

std::string PotentialModel::name() const {
  switch (kind) {
    case PotentialKind::Exponential: return "exp";
    case PotentialKind::Hulthen: return "hulthen";
    case PotentialKind::Morse: return "morse";
    case PotentialKind::CoulombPoint: return "coulomb";
  }
  return "?";
}

PotentialModel exponential_model(double s, double a) {
  if (!(a > 0.0)) throw DomainError("range must be positive");
  return {PotentialKind::Exponential, s, a};
}

PotentialModel hulthen_model(double s, double a) {
  if (!(a > 0.0)) throw DomainError("range must be positive");
  return {PotentialKind::Hulthen, s, a};
}

PotentialModel morse_model(double s, double a, double d) {
  if (!(a > 0.0)) throw DomainError("range must be positive");
  return {PotentialKind::Morse, s, a, d};
}

PotentialModel coulomb_model(int Z, double bohr) {
  if (!(bohr > 0.0)) throw DomainError("Bohr radius must be positive");
  PotentialModel m;
  m.kind = PotentialKind::CoulombPoint;
  m.Z = Z;
  m.bohr = bohr;
  m.a = bohr;
  return m;
}

}  // namespace specqm
