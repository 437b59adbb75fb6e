#pragma once
// Independent reference: radial equation u'' = (2 mu V + l(l+1)/r^2 - p^2) u
// integrated with an adaptive Runge-Kutta-Fehlberg 7(8) stepper.

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>

namespace oracle {

using State = std::array<double, 2>;

// u ~ r^{l+1} (1 + c1 r) near the origin; c1 = lim r V / (2(l+1))
inline State integrate_radial(const std::function<double(double)>& V, double rV0, int l,
                              double p2, double R, double r0 = 1e-6) {
  namespace ode = boost::numeric::odeint;
  const double c1 = rV0 / (2.0 * (l + 1));
  State y{std::pow(r0, l + 1) * (1 + c1 * r0), std::pow(r0, l) * ((l + 1) + (l + 2) * c1 * r0)};
  auto rhs = [&](const State& s, State& d, double r) {
    d[0] = s[1];
    d[1] = (V(r) + l * (l + 1) / (r * r) - p2) * s[0];
  };
  ode::integrate_adaptive(
      ode::make_controlled(1e-15, 1e-14, ode::runge_kutta_fehlberg78<State>()), rhs, y, r0, R,
      1e-4);
  return y;
}

// s-wave tan(delta) from matching to sin(p r + delta)
inline double tan_delta(const std::function<double(double)>& V, double rV0, double p,
                        double R = 40.0) {
  const State y = integrate_radial(V, rV0, 0, p * p, R);
  const double d = std::atan2(p * y[0], y[1]) - p * R;
  return std::tan(d);
}

// any l: u ~ f_l + tan(delta) g_l with Riccati f = rho j_l, g = -rho n_l
inline double tan_delta_l(const std::function<double(double)>& V, double rV0, int l, double p,
                          double R = 40.0) {
  const State y = integrate_radial(V, rV0, l, p * p, R);
  const double rho = p * R;
  const double f = rho * std::sph_bessel(l, rho), g = -rho * std::sph_neumann(l, rho);
  // (rho z_l)' = rho z_{l-1} - l z_l
  const double df = l == 0 ? std::cos(rho) : rho * std::sph_bessel(l - 1, rho) - l * std::sph_bessel(l, rho);
  const double dg = l == 0 ? -std::sin(rho)
                           : -(rho * std::sph_neumann(l - 1, rho) - l * std::sph_neumann(l, rho));
  return (p * y[0] * df - y[1] * f) / (y[1] * g - p * y[0] * dg);
}

// A = lim delta / p: zero-energy u ~ r + A
inline double scattering_length(const std::function<double(double)>& V, double rV0,
                                double R = 60.0) {
  const State y = integrate_radial(V, rV0, 0, 0.0, R);
  return y[0] / y[1] - R;
}

}  // namespace oracle
