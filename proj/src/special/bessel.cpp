#include <cmath>
#include <limits>
#include <numbers>

#include "specqm/linalg.hpp"
#include "specqm/special.hpp"

namespace specqm {

FreePair riccati_free(int l, double rho) {
  if (!(rho > 0.0)) throw DomainError("riccati_free: rho must be positive");
  if (l < 0) throw DomainError("riccati_free: negative l");
  const unsigned ul = static_cast<unsigned>(l);
  const double j = std::sph_bessel(ul, rho), n = std::sph_neumann(ul, rho);
  double dj, dn;
  if (l == 0) {
    dj = -std::sph_bessel(1u, rho);
    dn = -std::sph_neumann(1u, rho);
  } else {
    dj = std::sph_bessel(ul - 1, rho) - (l + 1.0) / rho * j;
    dn = std::sph_neumann(ul - 1, rho) - (l + 1.0) / rho * n;
  }
  return {rho * j, -rho * n, j + rho * dj, -(n + rho * dn)};
}

FreePair modified_riccati(int l, double x) {
  if (!(x > 0.0)) throw DomainError("modified_riccati: x must be positive");
  if (l < 0) throw DomainError("modified_riccati: negative l");
  // x i_l(x) = sqrt(pi x/2) I_{l+1/2}(x)
  const double nu = l + 0.5;
  const double s = std::sqrt(std::numbers::pi * x / 2.0);
  const double I = std::cyl_bessel_i(nu, x), K = std::cyl_bessel_k(nu, x);
  // I' = I_{nu+1} + nu/x I ; K' = -K_{nu+1} + nu/x K
  const double dI = std::cyl_bessel_i(nu + 1.0, x) + nu / x * I;
  const double dK = -std::cyl_bessel_k(nu + 1.0, x) + nu / x * K;
  const double f = s * I;
  const double df = s * (0.5 / x * I + dI);
  // (2/pi) x k_l(x) with k_l = sqrt(pi/(2x)) K_{l+1/2}  ->  sqrt(2x/pi) K
  const double c = std::sqrt(2.0 * x / std::numbers::pi);
  const double h = c * K;
  const double dh = c * (0.5 / x * K + dK);
  return {f, h, df, dh};
}

FreePair modified_riccati_scaled(int l, double x, double x0) {
  if (x <= 30.0) {
    FreePair p = modified_riccati(l, x);
    const double e = std::exp(-x0);
    return {p.f * e, p.g / e, p.df * e, p.dg / e};
  }
  if (l < 0) throw DomainError("modified_riccati: negative l");
  // half-integer order: finite sums c_j (2x)^{-j}, c_j = (l+j)! / (j! (l-j)!)
  double sp = 0.0, sm = 0.0, dsp = 0.0, dsm = 0.0, c = 1.0, t = 1.0;
  for (int j = 0; j <= l; ++j) {
    if (j > 0) {
      c *= (l + j) * (l - j + 1.0) / j;
      t /= 2.0 * x;
    }
    const double sg = (j % 2) ? -1.0 : 1.0;
    sp += c * t;
    sm += sg * c * t;
    dsp -= j * c * t / x;
    dsm -= sg * j * c * t / x;
  }
  const double ep = std::exp(x - x0), em = std::exp(-x - x0), eg = std::exp(x0 - x);
  const double par = (l % 2) ? -1.0 : 1.0;
  return {0.5 * (ep * sm - par * em * sp), eg * sp, 0.5 * (ep * (sm + dsm) + par * em * (sp - dsp)),
          eg * (dsp - sp)};
}

cplx bessel_J(cplx nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_J: x must be positive");
  if (nu.imag() == 0.0 && nu.real() < 0.0 && nu.real() == std::floor(nu.real()))
    throw DomainError("bessel_J: negative integer order not supported by the series");
  const double h = 0.5 * x;
  cplx term = std::exp(nu * std::log(h) - log_gamma(nu + 1.0));
  cplx sum = term;
  const double q = -h * h;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k < 10000; ++k) {
    term *= q / (double(k) * (nu + double(k)));
    sum += term;
    if (std::abs(term) < 0.25 * eps * std::abs(sum) && k > h) return sum;
  }
  throw NumericalError("complex-order Bessel series did not converge");
}

ZeroEnergyCoulomb zero_energy_coulomb(int l, double beta, double r, int zsign) {
  if (!(r > 0.0)) throw DomainError("zero_energy_coulomb: r must be positive");
  if (l < 0) throw DomainError("zero_energy_coulomb: negative l");
  if (zsign == 0 || beta == 0.0) {
    const double Phi = std::pow(r, l + 1), Theta = std::pow(r, -l) / (2 * l + 1);
    return {Phi, Theta, (l + 1) * std::pow(r, l), -l * std::pow(r, -l - 1) / (2 * l + 1)};
  }
  if (!(beta > 0.0)) throw DomainError("zero_energy_coulomb: beta must be positive");
  const double nu = 2 * l + 1;
  const double fact = std::tgamma(nu + 1.0);  // (2l+1)!
  const double sbr = std::sqrt(beta * r), u = 2.0 * sbr;
  const double du = beta / sbr;  // du/dr
  // d/dr [ (u/2) C_nu(u) ] = du/dr * (1/2) [C_nu + u C_nu']
  auto deriv = [&](double C, double dC) { return du * 0.5 * (C + u * dC); };
  const double pre_phi = fact / std::pow(beta, l + 1);
  const double pre_th = std::pow(beta, l) / fact;
  if (zsign > 0) {
    const double I = std::cyl_bessel_i(nu, u), dI = std::cyl_bessel_i(nu - 1, u) - nu / u * I;
    const double K = std::cyl_bessel_k(nu, u), dK = -std::cyl_bessel_k(nu - 1, u) - nu / u * K;
    return {pre_phi * sbr * I, 2.0 * pre_th * sbr * K, pre_phi * deriv(I, dI),
            2.0 * pre_th * deriv(K, dK)};
  }
  const double J = std::cyl_bessel_j(nu, u), dJ = std::cyl_bessel_j(nu - 1, u) - nu / u * J;
  const double Y = std::cyl_neumann(nu, u), dY = std::cyl_neumann(nu - 1, u) - nu / u * Y;
  const double pi = std::numbers::pi;
  return {pre_phi * sbr * J, -pi * pre_th * sbr * Y, pre_phi * deriv(J, dJ),
          -pi * pre_th * deriv(Y, dY)};
}

}  // namespace specqm
