#include "specqm/qm_config.hpp"

#include <algorithm>
#include <cmath>

#include "specqm/cheb_quad.hpp"
#include "specqm/roots.hpp"
#include "specqm/solvers.hpp"
#include "specqm/special.hpp"
#include "qm_free.hpp"

namespace specqm {

namespace {

ScatteringOutput make_output(const char* method) {
  ScatteringOutput o;
  o.method = method;
  return o;
}

void set_tan(ScatteringOutput& o, double t) {
  o.tan_delta = t;
  o.delta = std::atan(t);
}

// phi(0) = 1, chi(0) = c; E2 = p^2 (scattering) or -kappa^2 (bound)
struct SchrodEnd {
  double phi, chi;
  LinearSolveReport rep;
};

SchrodEnd schrod_solve(const PotentialModel& m, double E2, const SolveConfig& cfg) {
  const double R = cfg.cutoff(m);
  const std::size_t N = cfg.N;
  if (N < 2) throw DomainError("Schroedinger solver needs N >= 2");
  const ChebGrid g(N, 0.0, R);
  const auto ops = spectral_operators(N);
  const double h = g.half_width();
  const Vector& x = g.nodes();
  Vector P(N), q(N);
  for (std::size_t i = 0; i < N; ++i) {
    P[i] = E2 - m.total(x[i]);
    q[i] = 2.0 * (cfg.l + 1.0) / x[i];
  }
  const Matrix WP = scale_cols(ops->Wminus, P), WQ = scale_cols(ops->Wminus, q);
  Matrix A(2 * N, 2 * N);
  Vector rhs(2 * N);
  const double c = m.c_constant(cfg.l);
  for (std::size_t i = 0; i < N; ++i) {
    A(i, i) = 1.0;
    A(N + i, N + i) = 1.0;
    rhs[i] = 1.0;
    rhs[N + i] = c;
    for (std::size_t j = 0; j < N; ++j) {
      A(i, N + j) -= h * ops->Wminus(i, j);
      A(N + i, j) += h * WP(i, j);
      A(N + i, N + j) += h * WQ(i, j);
    }
  }
  SchrodEnd e;
  e.rep = solve(A, rhs);
  const Vector G = cardinal_all(g, R);
  e.phi = e.chi = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    e.phi += G[j] * e.rep.solution[j];
    e.chi += G[j] * e.rep.solution[N + j];
  }
  return e;
}

double tan_from_logderiv(const FreeAt& fr, double psi, double dpsi) {
  return -(fr.f * dpsi - fr.df * psi) / (fr.g * dpsi - fr.dg * psi);
}

void check_cutoff(ScatteringOutput& o, const PotentialModel& m, double p, double R) {
  o.r_warning = std::abs(m.v(R)) / (p * p) > 1e-8;
}

}  // namespace

ScatteringOutput schrod_phase_shift(const PotentialModel& m, double p, const SolveConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("phase shift needs p > 0");
  const double R = cfg.cutoff(m);
  const SchrodEnd e = schrod_solve(m, p * p, cfg);
  const FreeAt fr = free_at(m, cfg.l, p, false, R);
  // psi = r^{l+1} phi, psi'/psi = (l+1)/R + chi/phi
  const double psi = e.phi, dpsi = (cfg.l + 1.0) / R * e.phi + e.chi;
  ScatteringOutput o = make_output("schrodinger");
  set_tan(o, tan_from_logderiv(fr, psi, dpsi));
  o.condition = e.rep.condition;
  o.residual = e.rep.residual;
  check_cutoff(o, m, p, R);
  return o;
}

ScatteringOutput schrod_scattering_length(const PotentialModel& m, const SolveConfig& cfg) {
  if (cfg.l != 0) throw DomainError("scattering length is defined for l = 0");
  const double R = cfg.cutoff(m);
  const SchrodEnd e = schrod_solve(m, 0.0, cfg);
  ScatteringOutput o = make_output("schrodinger");
  o.condition = e.rep.condition;
  o.residual = e.rep.residual;
  // (1 + L) phi = phi + R chi
  const double onepl = e.phi + R * e.chi;
  double num, den;
  if (m.has_coulomb()) {
    const int zs = m.Z > 0 ? 1 : -1;
    const ZeroEnergyCoulomb c = zero_energy_coulomb(0, m.beta(), R, zs);
    num = R * c.dPhi * e.phi - onepl * c.Phi;
    den = R * c.dTheta * e.phi - onepl * c.Theta;
  } else {
    num = -R * e.chi * R;
    den = -onepl;
  }
  o.pole = std::abs(den) <= 1e-12 * (std::abs(e.phi) + std::abs(R * e.chi)) || e.rep.singular;
  o.scattering_length = -num / den;
  return o;
}

double schrod_bound_residual(const PotentialModel& m, double kappa, const SolveConfig& cfg) {
  if (!(kappa > 0.0)) throw DomainError("bound state needs kappa > 0");
  const double R = cfg.cutoff(m);
  const SchrodEnd e = schrod_solve(m, -kappa * kappa, cfg);
  const double x = kappa * R;
  const double L = m.has_coulomb() ? neg_energy_coulomb_hlogderiv(cfg.l, m.eta(kappa), x)
                                   : [&] {
                                       const FreePair fp = modified_riccati(cfg.l, x);
                                       return fp.dg / fp.g;
                                     }();
  // the regular solution grows like exp(x); scaling by it keeps the function continuous
  const double r = e.phi * (cfg.l + 1.0 - x * L) + R * e.chi;
  return r * std::exp(-x) / (1.0 + x);
}

namespace {

ScatteringOutput root_output(const char* method, double (*fn)(const PotentialModel&, double,
                                                              const SolveConfig&),
                             const PotentialModel& m, const SolveConfig& cfg, double lo,
                             double hi) {
  // scan inside the bracket: at large kappa R the residual can flip sign through a jump
  auto f = [&](double k) { return fn(m, k, cfg); };
  double best = -1.0;
  for (const Bracket& b : scan_brackets(f, lo, hi, 40, true)) {
    const double r = find_root(f, b.lo, b.hi, 1e-14);
    if (std::abs(f(r)) <= 1e-6 * std::max(std::abs(f(b.lo)), std::abs(f(b.hi))))
      best = std::max(best, r);
  }
  if (!(best > 0.0)) throw NumericalError("no bound state in the bracket");
  ScatteringOutput o = make_output(method);
  o.bound_kappa = best;
  return o;
}

}  // namespace

ScatteringOutput schrod_bound_state(const PotentialModel& m, const SolveConfig& cfg, double lo,
                                    double hi) {
  return root_output("schrodinger", schrod_bound_residual, m, cfg, lo, hi);
}

// ---------------------------------------------------------------------------

namespace {

struct VolterraCore {
  Vector u;
  double If, Ig;  // int f v u, int g v u
  LinearSolveReport rep;
};

// u = f - (1/k) int_0^r [f(r') g(r) - g(r') f(r)] v(r') u(r') dr'
VolterraCore volterra_core(const PotentialModel& m, double k, bool bound, const SolveConfig& cfg) {
  const double R = cfg.cutoff(m);
  const ChebGrid g(cfg.N, 0.0, R);
  const Vector& x = g.nodes();
  const std::size_t N = cfg.N;
  Vector f(N), gg(N), v(N);
  for (std::size_t i = 0; i < N; ++i) {
    const FreeAt fr = free_at(m, cfg.l, k, bound, x[i]);
    f[i] = fr.f;
    gg[i] = fr.g;
    v[i] = m.v(x[i]);
  }
  Matrix K(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) K(i, j) = (f[i] * gg[j] - gg[i] * f[j]) * v[j] / k;
  VolterraCore c;
  c.rep = solve_volterra(K, f, 1.0, Direction::Lower, g);
  c.u = c.rep.solution;
  Vector a(N), b(N);
  for (std::size_t i = 0; i < N; ++i) {
    a[i] = f[i] * v[i] * c.u[i];
    b[i] = gg[i] * v[i] * c.u[i];
  }
  c.If = integrate_interval(g, a);
  c.Ig = integrate_interval(g, b);
  return c;
}

}  // namespace

ScatteringOutput volterra_phase_shift(const PotentialModel& m, double p, const SolveConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("phase shift needs p > 0");
  const VolterraCore c = volterra_core(m, p, false, cfg);
  ScatteringOutput o = make_output("volterra");
  const double den = 1.0 + c.Ig / p;
  o.pole = std::abs(den) < 1e-12;
  set_tan(o, -(c.If / p) / den);
  o.condition = c.rep.condition;
  o.residual = c.rep.residual;
  check_cutoff(o, m, p, cfg.cutoff(m));
  return o;
}

ScatteringOutput volterra_scattering_length(const PotentialModel& m, const SolveConfig& cfg) {
  if (cfg.l != 0) throw DomainError("scattering length is defined for l = 0");
  const double R = cfg.cutoff(m);
  const ChebGrid g(cfg.N, 0.0, R);
  const Vector& x = g.nodes();
  const std::size_t N = cfg.N;
  const int zs = m.Z > 0 ? 1 : (m.Z < 0 ? -1 : 0);
  Vector Phi(N), Th(N), v(N);
  for (std::size_t i = 0; i < N; ++i) {
    const ZeroEnergyCoulomb c = zero_energy_coulomb(0, m.beta(), x[i], zs);
    Phi[i] = c.Phi;
    Th[i] = c.Theta;
    v[i] = m.v(x[i]);
  }
  // phi = Phi - int_0^r [Phi(r') Theta(r) - Phi(r) Theta(r')] v phi dr'
  Matrix K(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) K(i, j) = (Phi[i] * Th[j] - Th[i] * Phi[j]) * v[j];
  const LinearSolveReport rep = solve_volterra(K, Phi, 1.0, Direction::Lower, g);
  Vector a(N), b(N);
  for (std::size_t i = 0; i < N; ++i) {
    a[i] = Phi[i] * v[i] * rep.solution[i];
    b[i] = Th[i] * v[i] * rep.solution[i];
  }
  const double num = integrate_interval(g, a), den = 1.0 + integrate_interval(g, b);
  ScatteringOutput o = make_output("volterra");
  o.pole = std::abs(den) < 1e-12 * (1.0 + std::abs(num) / R) || rep.singular;
  o.scattering_length = -num / den;
  o.condition = rep.condition;
  o.residual = rep.residual;
  return o;
}

double fredholm_determinant(const PotentialModel& m, double kappa, const SolveConfig& cfg) {
  if (!(kappa > 0.0)) throw DomainError("Fredholm determinant needs kappa > 0");
  const double R = cfg.cutoff(m);
  // one interval loses digits once exp(2 kappa R) outruns the round-off; split it
  const int parts = static_cast<int>(std::ceil(2.0 * kappa * R / 20.0));
  if (cfg.partitions.empty() && parts <= 1) {
    const VolterraCore c = volterra_core(m, kappa, true, cfg);
    return 1.0 + c.Ig / kappa;
  }
  SolveConfig pc = cfg;
  if (pc.partitions.empty())
    for (int i = 1; i < parts; ++i) pc.partitions.push_back(R * i / parts);
  const CompositeResult r = composite_solve_bound(m, kappa, pc);
  // coefficient of f~ in the global solution beyond R
  const FreeAt fr = free_at(m, cfg.l, kappa, true, R);
  return (r.dpsi_R * fr.g - r.psi_R * fr.dg) / (fr.df * fr.g - fr.f * fr.dg);
}

ScatteringOutput bound_state_from_determinant(const PotentialModel& m, const SolveConfig& cfg,
                                              double lo, double hi) {
  return root_output("volterra", fredholm_determinant, m, cfg, lo, hi);
}

// ---------------------------------------------------------------------------

ConvergenceCheck phase_shift_checked(const PotentialModel& m, double p, const SolveConfig& cfg,
                                     ConfigMethod method) {
  SolveConfig fine = cfg;
  fine.N = 2 * cfg.N;
  fine.R = 1.5 * cfg.cutoff(m);
  auto run = [&](const SolveConfig& c) {
    return method == ConfigMethod::Schrodinger ? schrod_phase_shift(m, p, c)
                                               : volterra_phase_shift(m, p, c);
  };
  ConvergenceCheck r;
  r.base = run(cfg);
  r.tan_refined = run(fine).tan_delta;
  r.difference = std::abs(r.tan_refined - r.base.tan_delta);
  return r;
}

std::vector<double> scan_bound_states(const PotentialModel& m, const SolveConfig& cfg, double lo,
                                      double hi, int n, ConfigMethod method) {
  auto fn = method == ConfigMethod::Schrodinger ? schrod_bound_residual : fredholm_determinant;
  auto f = [&](double k) { return fn(m, k, cfg); };
  std::vector<double> roots;
  for (const Bracket& b : scan_brackets(f, lo, hi, n, true)) {
    const double r = find_root(f, b.lo, b.hi, 1e-14);
    // a sign flip through a jump is not a root
    if (std::abs(f(r)) <= 1e-6 * std::max(std::abs(f(b.lo)), std::abs(f(b.hi)))) roots.push_back(r);
  }
  return roots;
}

}  // namespace specqm
