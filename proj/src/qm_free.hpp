#pragma once
// Free solutions in r with r-derivatives, for the configuration-space solvers.

#include "specqm/potential.hpp"
#include "specqm/special.hpp"

namespace specqm {

struct FreeAt {
  double f, g, df, dg;  ///< d/dr
};

/// scattering: (f, g) = Riccati or Coulomb pair at k r;
/// bound: (f~, h~) modified or negative-energy Coulomb pair at kappa r
inline FreeAt free_at(const PotentialModel& m, int l, double k, bool bound, double r) {
  const double x = k * r;
  if (bound) {
    const FreePair p = m.has_coulomb() ? neg_energy_coulomb(l, m.eta(k), x) : modified_riccati(l, x);
    return {p.f, p.g, k * p.df, k * p.dg};
  }
  if (m.has_coulomb()) {
    const CoulombFG c = coulomb_FG(l, m.eta(k), x);
    return {c.F, c.G, k * c.dF, k * c.dG};
  }
  const FreePair p = riccati_free(l, x);
  return {p.f, p.g, k * p.df, k * p.dg};
}

}  // namespace specqm
