#include "specqm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "specqm/linalg.hpp"
#include "specqm/roots.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

constexpr double kEuler = 0.57721566490153286061;

double wrap_pi(double d) { return std::remainder(d, 2.0 * std::numbers::pi); }

double morse_z(const PotentialModel& m) { return 2.0 * std::exp(m.d / m.a) * std::sqrt(std::abs(m.s)); }

}  // namespace

ExactPhase exact_phase(const PotentialModel& m, double xi, int l) {
  if (!(xi > 0.0)) throw DomainError("exact_phase: xi must be positive");
  if (l != 0 && m.kind != PotentialKind::CoulombPoint)
    throw DomainError("exact_phase: closed forms are s-wave only");
  double d = 0.0;
  switch (m.kind) {
    case PotentialKind::Exponential: {
      if (m.s == 0.0) break;
      const cplx nu(0.0, 2.0 * xi);
      const cplx J = bessel_J(nu, 2.0 * std::sqrt(m.s));
      d = std::arg(J) + log_gamma(1.0 + nu).imag() - xi * std::log(m.s);
      break;
    }
    case PotentialKind::Hulthen: {
      if (m.s == 0.0) break;  // the two Gamma arguments meet the pole at 0
      const cplx r = std::sqrt(cplx(m.s - xi * xi, 0.0));
      const cplx ix(0.0, xi);
      d = (log_gamma(1.0 + 2.0 * ix) + log_gamma(r - ix) + log_gamma(-r - ix)).imag();
      break;
    }
    case PotentialKind::Morse: {
      if (m.s == 0.0) break;
      const double z = morse_z(m);
      if (m.s > 0.0) {
        const cplx a(0.5 - std::sqrt(m.s), xi), b(1.0, 2.0 * xi);
        d = std::arg(kummer_M(a, b, cplx(z, 0.0)));
      } else {
        const cplx a(0.5, xi - std::sqrt(-m.s)), b(1.0, 2.0 * xi);
        d = std::arg(kummer_M(a, b, cplx(0.0, z))) - 0.5 * z;
      }
      break;
    }
    case PotentialKind::CoulombPoint: {
      // sigma_l = arg Gamma(l + 1 + i eta), eta = Z/(p bohr)
      d = log_gamma(cplx(l + 1.0, m.Z / xi)).imag();
      break;
    }
  }
  return {wrap_pi(d), std::tan(d)};
}

ExactResult exact_scattering_length(const PotentialModel& m) {
  ExactResult r{0.0, "", false};
  const double s = m.s;
  switch (m.kind) {
    case PotentialKind::Exponential: {
      r.formula = "exp: -2(gamma + log sqrt s) + pi Y0/J0";
      if (s == 0.0) break;
      if (s < 0.0) throw DomainError("exponential closed form needs s >= 0");
      const double x = 2.0 * std::sqrt(s);
      r.value = -2.0 * (kEuler + 0.5 * std::log(s)) +
                std::numbers::pi * std::cyl_neumann(0.0, x) / std::cyl_bessel_j(0.0, x);
      break;
    }
    case PotentialKind::Hulthen: {
      // -2 gamma - psi(1 + sqrt s) - psi(1 - sqrt s); vanishes at s = 0
      r.formula = "hulthen: -2 gamma - psi(1+sqrt s) - psi(1-sqrt s)";
      if (s == 0.0) break;
      if (s < 0.0) throw DomainError("Hulthen closed form needs s >= 0");
      const double q = std::sqrt(s);
      if (q == std::floor(q)) {
        // s = n^2 is the pole itself
        r.value = std::numeric_limits<double>::infinity();
        r.near_pole = true;
        return r;
      }
      r.value = -2.0 * kEuler - digamma(1.0 + q) - digamma(1.0 - q);
      break;
    }
    case PotentialKind::Morse: {
      r.formula = "morse: -2 gamma - psi(a) - log z - Gamma(a) U(a,1,z)/M(a,1,z)";
      if (s == 0.0) break;
      const double z = morse_z(m);
      if (s > 0.0) {
        // psi(a) M + Gamma(a) U is analytic at a = 0, -1, ...: the poles cancel
        auto num = [&](double a) {
          return -(digamma(a) * kummer_M(a, 1.0, z) + std::tgamma(a) * tricomi_U(a, 1.0, z));
        };
        const double a = 0.5 - std::sqrt(s), n = std::round(a);
        double N;
        if (n <= 0.0 && std::abs(a - n) < 1e-6) {
          // Richardson on symmetric means
          const double h = 1e-3;
          const double m1 = 0.5 * (num(a + h) + num(a - h)), m2 = 0.5 * (num(a + 2 * h) + num(a - 2 * h));
          N = (4.0 * m1 - m2) / 3.0;
        } else {
          N = num(a);
        }
        r.value = -2.0 * kEuler - std::log(z) + N / kummer_M(a, 1.0, z);
      } else {
        const cplx a(0.5, -std::sqrt(-s)), iz(0.0, z);
        const cplx t = digamma(a) - std::log(iz) +
                       std::exp(log_gamma(a)) * tricomi_U(a, cplx(1.0, 0.0), iz) /
                           kummer_M(a, cplx(1.0, 0.0), iz);
        r.value = -2.0 * kEuler - t.real();
      }
      break;
    }
    case PotentialKind::CoulombPoint:
      throw DomainError("no short-range scattering length for the point Coulomb model");
  }
  r.near_pole = !std::isfinite(r.value) || std::abs(r.value) > 1e6;
  return r;
}

double exact_bound_condition(const PotentialModel& m, double x, int l) {
  if (!(x > 0.0)) throw DomainError("exact_bound_condition: x must be positive");
  switch (m.kind) {
    case PotentialKind::Exponential:
      return std::cyl_bessel_j(2.0 * x, 2.0 * std::sqrt(m.s));
    case PotentialKind::Hulthen: {
      // x = (s - n^2)/(2n)  <=>  n = sqrt(x^2 + s) - x is a positive integer
      const double n = std::sqrt(x * x + m.s) - x;
      const double k = std::round(n);
      return k >= 1.0 ? n - k : n - 1.0;
    }
    case PotentialKind::Morse: {
      const double z = morse_z(m);
      if (m.s > 0.0) return kummer_M(0.5 + x - std::sqrt(m.s), 1.0 + 2.0 * x, z);
      return kummer_M(cplx(0.5 + x, -std::sqrt(-m.s)), cplx(1.0 + 2.0 * x, 0.0), cplx(0.0, z)).real();
    }
    case PotentialKind::CoulombPoint: {
      // 1/Gamma(l + 1 + Z/x) vanishes at x = |Z|/(n + l + 1)
      const double a = l + 1.0 + m.Z / x;
      if (a <= 0.0 && a == std::floor(a)) return 0.0;
      return 1.0 / std::tgamma(a);
    }
  }
  return 0.0;
}

std::vector<double> exact_bound_states(const PotentialModel& m, double lo, double hi, int l) {
  std::vector<double> out;
  if (m.kind == PotentialKind::Hulthen) {
    for (int n = 1; n * n < m.s; ++n) {
      const double x = (m.s - double(n) * n) / (2.0 * n);
      if (x > lo && x < hi) out.push_back(x);
    }
  } else if (m.kind == PotentialKind::CoulombPoint) {
    for (int n = 0; n < 100000; ++n) {
      const double x = std::abs(double(m.Z)) / (n + l + 1.0);
      if (x <= lo) break;
      if (x < hi && m.Z < 0) out.push_back(x);
    }
  } else {
    auto f = [&](double x) { return exact_bound_condition(m, x, l); };
    for (const Bracket& b : scan_brackets(f, lo, hi, 400, true))
      out.push_back(find_root(f, b.lo, b.hi, 1e-15));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

double exact_momentum_potential(const PotentialModel& m, int l, double k, double kp) {
  if (!(k > 0.0 && kp > 0.0)) throw DomainError("momenta must be positive");
  if (m.kind == PotentialKind::CoulombPoint) {
    const double x = m.bohr * (k + kp), y = m.bohr * (k - kp);
    if (y == 0.0) throw DomainError("Coulomb projection diverges at k = k'");
    const double z = (x * x + y * y) / (x * x - y * y);
    return 4.0 * m.Z * m.bohr * legendre_PQ(l, z).Q / (x * x - y * y);
  }
  if (l != 0) throw DomainError("closed-form projections are s-wave only");
  const double a = m.a, s = m.s;
  const double x = a * (k + kp), y = a * (k - kp);
  switch (m.kind) {
    case PotentialKind::Exponential:
      return -2.0 * s * a / ((1.0 + x * x) * (1.0 + y * y));
    case PotentialKind::Hulthen: {
      const double px = digamma(cplx(1.0, x)).real(), py = digamma(cplx(1.0, y)).real();
      return -2.0 * s * a * (px - py) / (x * x - y * y);
    }
    case PotentialKind::Morse: {
      const double e = std::exp(m.d / a);
      return -s * a * 4.0 * e / ((1.0 + x * x) * (1.0 + y * y)) +
             s * a * 0.25 * e * e / ((1.0 + 0.25 * x * x) * (1.0 + 0.25 * y * y));
    }
    default:
      break;
  }
  return 0.0;
}

}  // namespace specqm
