#pragma once
// Special functions for the scattering layer and the analytic oracles.

#include <complex>

namespace specqm {

using cplx = std::complex<double>;

// ---- gamma family ----

/// principal-branch log Gamma(z); analytic off the negative real axis
cplx log_gamma(cplx z);
double digamma(double x);
cplx digamma(cplx z);

// ---- confluent hypergeometric ----

double kummer_M(double a, double b, double x);
cplx kummer_M(cplx a, cplx b, cplx z);
/// U(a,b,x), x > 0, real a and b
double tricomi_U(double a, double b, double x);
/// U(a,b,z) for Re a > 0 and z = |z| e^{i phi}, |phi| < pi/2 + small; integral along the rotated ray
cplx tricomi_U(cplx a, cplx b, cplx z);
/// A&S 13.1.6 log series, integer b = n+1 >= 1; any complex a, z (cancellation for large |z|)
cplx tricomi_U_log_series(cplx a, int b, cplx z);
/// U(a+1,b,x)/U(a,b,x) by continued fraction (U minimal in a)
double tricomi_U_ratio(double a, double b, double x);

// ---- Bessel type ----

/// f, g and d/drho; f = F or rho j_l etc., depending on producer
struct FreePair {
  double f, g, df, dg;
};

/// f = rho j_l(rho), g = -rho n_l(rho); W = f g' - g f' = -1
FreePair riccati_free(int l, double rho);
/// f~ = x i_l(x), g = h~ = (2/pi) x k_l(x); h~ f~' - f~ h~' = 1
FreePair modified_riccati(int l, double x);
/// the same pair as f~ e^{-x0}, h~ e^{x0}; finite for large x when x - x0 is moderate
FreePair modified_riccati_scaled(int l, double x, double x0);
/// ascending series, complex order
cplx bessel_J(cplx nu, double x);

struct ZeroEnergyCoulomb {
  double Phi, Theta, dPhi, dTheta;  ///< d/dr
};
/// p = 0 Coulomb pair; zsign = sign of Z, beta = 2 mu alpha |Z|; Theta Phi' - Phi Theta' = 1
ZeroEnergyCoulomb zero_energy_coulomb(int l, double beta, double r, int zsign);

struct CoulombFG {
  double F, G, dF, dG;  ///< d/drho ; F G' - G F' = -1
  bool degraded;        ///< outside the validated box (l <= 2, |eta| <= 3, rho <= 50)
};
CoulombFG coulomb_FG(int l, double eta, double rho);

/// f~, h~ at negative energy with Coulomb: x = kappa r, eta~ = mu alpha Z / kappa;
/// f = f~, g = h~, derivatives d/dx; h~ f~' - f~ h~' = 1
FreePair neg_energy_coulomb(int l, double eta, double x);
/// d ln h~ / dx via the continued fraction for U ratios
double neg_energy_coulomb_hlogderiv(int l, double eta, double x);

// ---- Legendre ----

struct LegendrePQ {
  double P, W, Q;  ///< P_l(z), W_{l-1}(z), Q_l(z)
};
/// z > 1
LegendrePQ legendre_PQ(int l, double z);
double legendre_P(int l, double z);
/// Q_l'(z), z > 1
double legendre_dQ(int l, double z);

}  // namespace specqm
