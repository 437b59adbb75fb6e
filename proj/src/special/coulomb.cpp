// Coulomb wave functions.
//
// Positive energy: beyond the turning point F'/F comes from a Miller-type
// downward recurrence in l (F is minimal in l, and positive for l >> rho, which
// fixes its sign) and H+'/H+ = p + iq from Steed's continued fraction; the
// Wronskian then fixes the normalisation.  Inside the turning point F is summed
// from its power series and G is integrated inwards from the matching point.

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "specqm/linalg.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double turning_point(int l, double eta) {
  return std::max(0.0, eta + std::sqrt(eta * eta + l * (l + 1.0)));
}

// p + iq = (G' + iF')/(G + iF)
cplx steed_cf2(int l, double eta, double rho) {
  const cplx i(0.0, 1.0);
  const cplx a(-(eta * eta + l * (l + 1.0)), eta);  // (i eta - l)(i eta + l + 1)
  cplx an = a;
  cplx bn(2.0 * (rho - eta), 2.0);
  cplx D = 1.0 / bn;
  cplx dh = an * D;
  cplx h = dh;
  double pk = 0.0;
  for (int k = 2; k < 2000000; ++k) {
    pk += 2.0;
    an += cplx(pk, 2.0 * eta);
    bn += cplx(0.0, 2.0);
    D = 1.0 / (bn + an * D);
    dh *= bn * D - 1.0;
    h += dh;
    if (std::abs(dh) <= kEps * std::abs(h) * 0.5) return i * (1.0 - eta / rho) + i / rho * h;
  }
  throw NumericalError("Coulomb CF2 did not converge");
}

// F'_l/F_l together with sign(F_l), from downward recurrence
struct RatioSign {
  double f;
  double sign;
};

RatioSign miller_ratio(int l, double eta, double rho) {
  auto run = [&](int ltop) {
    double Fp1 = 0.0, F = 1e-280;  // F_{L+1}, F_L at L = ltop
    for (int L = ltop; L > l + 1; --L) {
      const double Ld = L;
      const double num = (2.0 * Ld + 1.0) * (eta + Ld * (Ld + 1.0) / rho) * F -
                         Ld * std::sqrt((Ld + 1.0) * (Ld + 1.0) + eta * eta) * Fp1;
      const double Fm1 = num / ((Ld + 1.0) * std::sqrt(Ld * Ld + eta * eta));
      Fp1 = F;
      F = Fm1;
      if (std::abs(F) > 1e250) {
        F *= 1e-250;
        Fp1 *= 1e-250;
      }
    }
    // now F = F_{l+1}, Fp1 = F_{l+2}; one more step to F_l
    const double Ld = l + 1.0;
    const double Fl = ((2.0 * Ld + 1.0) * (eta + Ld * (Ld + 1.0) / rho) * F -
                       Ld * std::sqrt((Ld + 1.0) * (Ld + 1.0) + eta * eta) * Fp1) /
                      ((Ld + 1.0) * std::sqrt(Ld * Ld + eta * eta));
    // (l+1) F'_l = [(l+1)^2/rho + eta] F_l - sqrt((l+1)^2 + eta^2) F_{l+1}
    const double dF = ((Ld * Ld / rho + eta) * Fl - std::sqrt(Ld * Ld + eta * eta) * F) / Ld;
    return RatioSign{dF / Fl, Fl > 0 ? 1.0 : -1.0};
  };
  int ltop = l + 2 + static_cast<int>(1.5 * rho + 2.0 * std::abs(eta)) + 60;
  RatioSign prev = run(ltop);
  for (int it = 0; it < 8; ++it) {
    ltop += 40 + ltop / 2;
    const RatioSign next = run(ltop);
    if (std::abs(next.f - prev.f) <= 1e-15 * std::abs(next.f) + 1e-300 && next.sign == prev.sign)
      return next;
    prev = next;
  }
  return prev;
}

CoulombFG outer(int l, double eta, double rho) {
  const RatioSign rs = miller_ratio(l, eta, rho);
  const cplx pq = steed_cf2(l, eta, rho);
  const double p = pq.real(), q = pq.imag();
  const double gam = (rs.f - p) / q;
  const double F = rs.sign / std::sqrt(q * (1.0 + gam * gam));
  const double G = gam * F;
  return {F, G, rs.f * F, p * G - q * F, false};
}

double coulomb_norm(int l, double eta) {
  // C_l(eta) = 2^l exp(-pi eta/2) |Gamma(l+1+i eta)| / (2l+1)!
  return std::exp(l * std::numbers::ln2 - 0.5 * std::numbers::pi * eta +
                  log_gamma(cplx(l + 1.0, eta)).real() - std::lgamma(2.0 * l + 2.0));
}

void series_F(int l, double eta, double rho, double& F, double& dF) {
  const double C = coulomb_norm(l, eta);
  double Akm2 = 0.0, Akm1 = 1.0;  // A_{-1}, A_0
  double pw = std::pow(rho, l + 1);
  double s = pw, ds = (l + 1.0) * pw / rho;
  for (int k = 1; k < 100000; ++k) {
    const double Ak = (2.0 * eta * Akm1 - Akm2) / (double(k) * (k + 2.0 * l + 1.0));
    pw *= rho;
    const double t = Ak * pw;
    s += t;
    ds += (k + l + 1.0) * t / rho;
    Akm2 = Akm1;
    Akm1 = Ak;
    if (k > 4 && std::abs(t) < 0.25 * kEps * std::abs(s) &&
        std::abs(Akm2 * pw / rho) < kEps * std::abs(s))
      break;
  }
  F = C * s;
  dF = C * ds;
}

using State = std::array<double, 2>;

}  // namespace

CoulombFG coulomb_FG(int l, double eta, double rho) {
  if (!(rho > 0.0)) throw DomainError("coulomb_FG: rho must be positive");
  if (l < 0) throw DomainError("coulomb_FG: negative l");
  const bool degraded = l > 2 || std::abs(eta) > 3.0 || rho > 50.0;
  const double rm = turning_point(l, eta) + 0.5;
  if (rho >= rm) {
    CoulombFG r = outer(l, eta, rho);
    r.degraded = degraded;
    return r;
  }
  CoulombFG r{};
  series_F(l, eta, rho, r.F, r.dF);
  // G: integrate inwards from the matching point, where G is dominant
  const CoulombFG m = outer(l, eta, rm);
  State y{m.G, m.dG};
  auto rhs = [&](const State& u, State& du, double x) {
    du[0] = u[1];
    du[1] = (l * (l + 1.0) / (x * x) + 2.0 * eta / x - 1.0) * u[0];
  };
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-15, 1e-15, ode::runge_kutta_fehlberg78<State>());
  ode::integrate_adaptive(stepper, rhs, y, rm, rho, -0.01 * (rm - rho));
  r.G = y[0];
  r.dG = y[1];
  r.degraded = degraded;
  return r;
}

FreePair neg_energy_coulomb(int l, double eta, double x) {
  if (!(x > 0.0)) throw DomainError("neg_energy_coulomb: x must be positive");
  if (l < 0) throw DomainError("neg_energy_coulomb: negative l");
  const double a = l + 1.0 + eta, b = 2.0 * l + 2.0, z = 2.0 * x;
  if (a <= 0.0 && a == std::floor(a))
    throw DomainError("neg_energy_coulomb: regular solution normalisation has a pole");
  // signed C = Gamma(a)/(2 (2l+1)!) keeps the Wronskian at +1
  const double C = std::tgamma(a) / (2.0 * std::tgamma(b));
  const double pre = std::exp((l + 1.0) * std::log(z) - x);
  const double M = kummer_M(a, b, z), dM = a / b * kummer_M(a + 1.0, b + 1.0, z);
  const double U = tricomi_U(a, b, z), dU = -a * tricomi_U(a + 1.0, b + 1.0, z);
  const double lead = (l + 1.0) / x - 1.0;
  const double f = C * pre * M, h = pre * U;
  return {f, h, f * lead + 2.0 * C * pre * dM, h * lead + 2.0 * pre * dU};
}

double neg_energy_coulomb_hlogderiv(int l, double eta, double x) {
  if (!(x > 0.0)) throw DomainError("neg_energy_coulomb: x must be positive");
  const double a = l + 1.0 + eta, b = 2.0 * l + 2.0, z = 2.0 * x;
  // z U'(a,b,z) = (a + z - b) U(a,b,z) - U(a-1,b,z)
  const double r = tricomi_U_ratio(a - 1.0, b, z);  // U(a)/U(a-1)
  const double dlnU = ((a + z - b) - 1.0 / r) / z;
  return (l + 1.0) / x - 1.0 + 2.0 * dlnU;
}

}  // namespace specqm
