// Composite integration: [0,R] chopped into partitions, each carrying a regular
// local solution u (Volterra from the left edge) and an irregular one w (from
// the right edge); the global solution A u + B w is matched across edges.

#include <algorithm>
#include <cmath>

#include "specqm/cheb_quad.hpp"
#include "specqm/qm_config.hpp"
#include "specqm/roots.hpp"
#include "specqm/solvers.hpp"
#include "qm_free.hpp"

namespace specqm {

namespace {

struct EdgeValues {
  double u, du, w, dw;
};

struct LocalSolve {
  PartitionSolution sol;
  EdgeValues left, right;
};

LocalSolve local_solve(const PotentialModel& m, int l, double k, bool bound, std::size_t N,
                       double r0, double r1) {
  ChebGrid g(N, r0, r1);
  const auto ops = spectral_operators(N);
  const double h = g.half_width();
  const Vector& x = g.nodes();
  // bound: f~ e^{-k r0}, h~ e^{k r0} keeps f v u finite when 2 k R passes the
  // double range; every product f g, and so the kernel and the matching, is unchanged
  const double sc = bound ? std::exp(-k * r0) : 1.0;
  auto at = [&](double r) {
    FreeAt e = free_at(m, l, k, bound, r);
    if (bound && r0 > 0.0) {
      if (m.has_coulomb()) {
        e.f *= sc, e.df *= sc, e.g /= sc, e.dg /= sc;
      } else {
        const FreePair q = modified_riccati_scaled(l, k * r, r0 * k);
        e = {q.f, q.g, k * q.df, k * q.dg};
      }
    }
    return e;
  };
  Vector f(N), gg(N), df(N), dg(N), v(N);
  for (std::size_t i = 0; i < N; ++i) {
    const FreeAt fr = at(x[i]);
    f[i] = fr.f;
    gg[i] = fr.g;
    df[i] = fr.df;
    dg[i] = fr.dg;
    v[i] = m.v(x[i]);
  }
  Matrix K(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) K(i, j) = (f[i] * gg[j] - gg[i] * f[j]) * v[j] / k;
  const LinearSolveReport ru = solve_volterra(K, f, 1.0, Direction::Lower, g);
  // w = g + (1/k) int_r^{R} [f(r') g(r) - g(r') f(r)] v w dr'
  const LinearSolveReport rw = solve_volterra(K, gg, -1.0, Direction::Upper, g);
  const Vector& u = ru.solution;
  const Vector& w = rw.solution;

  Vector fvu(N), gvu(N), fvw(N), gvw(N);
  for (std::size_t i = 0; i < N; ++i) {
    fvu[i] = f[i] * v[i] * u[i];
    gvu[i] = gg[i] * v[i] * u[i];
    fvw[i] = f[i] * v[i] * w[i];
    gvw[i] = gg[i] * v[i] * w[i];
  }
  // node derivatives from the differentiated integral equations
  const Vector Fu = matvec(ops->Wminus, fvu), Gu = matvec(ops->Wminus, gvu);
  const Vector Fw = matvec(ops->Wplus, fvw), Gw = matvec(ops->Wplus, gvw);
  Vector du(N), dw(N);
  for (std::size_t i = 0; i < N; ++i) {
    du[i] = df[i] - h / k * (dg[i] * Fu[i] - df[i] * Gu[i]);
    dw[i] = dg[i] + h / k * (dg[i] * Fw[i] - df[i] * Gw[i]);
  }

  LocalSolve s{PartitionSolution{g, u, w, du, dw, 0.0, 0.0}, {}, {}};
  const double If = integrate_interval(g, fvu), Ig = integrate_interval(g, gvu);
  const double Jf = integrate_interval(g, fvw), Jg = integrate_interval(g, gvw);
  const FreeAt e1 = at(r1);
  s.right.u = e1.f - (e1.g * If - e1.f * Ig) / k;
  s.right.du = e1.df - (e1.dg * If - e1.df * Ig) / k;
  s.right.w = e1.g;
  s.right.dw = e1.dg;
  if (r0 > 0.0) {
    const FreeAt e0 = at(r0);
    s.left.u = e0.f;
    s.left.du = e0.df;
    s.left.w = e0.g + (e0.g * Jf - e0.f * Jg) / k;
    s.left.dw = e0.dg + (e0.dg * Jf - e0.df * Jg) / k;
  }
  return s;
}

std::vector<double> partition_radii(const SolveConfig& cfg, double R) {
  std::vector<double> r{0.0};
  std::vector<double> in = cfg.partitions;
  std::sort(in.begin(), in.end());
  for (double b : in) {
    if (!(b > r.back() && b < R)) throw DomainError("partition radii must lie strictly inside (0, R)");
    r.push_back(b);
  }
  r.push_back(R);
  return r;
}

CompositeResult composite_core(const PotentialModel& m, double k, bool bound,
                               const SolveConfig& cfg) {
  if (!(k > 0.0)) throw DomainError("composite solve needs a positive momentum");
  const double R = cfg.cutoff(m);
  const std::vector<double> radii = partition_radii(cfg, R);
  const std::size_t M = radii.size() - 1;
  std::vector<LocalSolve> loc;
  loc.reserve(M);
  for (std::size_t lam = 0; lam < M; ++lam)
    loc.push_back(local_solve(m, cfg.l, k, bound, cfg.N, radii[lam], radii[lam + 1]));

  double A = 1.0, B = 0.0;
  CompositeResult res;
  for (std::size_t lam = 0; lam < M; ++lam) {
    loc[lam].sol.A = A;
    loc[lam].sol.B = B;
    if (lam + 1 == M) break;
    const EdgeValues& e = loc[lam].right;
    const EdgeValues& n = loc[lam + 1].left;
    const double d = n.u * n.dw - n.du * n.w;
    if (std::abs(d) < 1e-300 || !std::isfinite(d))
      throw NumericalError("composite solve: degenerate matching determinant");
    const double a = (e.u * n.dw - e.du * n.w) / d;
    const double b = (e.w * n.dw - e.dw * n.w) / d;
    const double al = (e.du * n.u - e.u * n.du) / d;
    const double be = (e.dw * n.u - e.w * n.du) / d;
    const double An = a * A + b * B, Bn = al * A + be * B;
    A = An;
    B = Bn;
  }
  const EdgeValues& last = loc.back().right;
  res.psi_R = A * last.u + B * last.w;
  res.dpsi_R = A * last.du + B * last.dw;
  for (auto& s : loc) res.parts.push_back(std::move(s.sol));
  return res;
}

}  // namespace

CompositeResult composite_solve(const PotentialModel& m, double p, const SolveConfig& cfg) {
  CompositeResult r = composite_core(m, p, false, cfg);
  const FreeAt fr = free_at(m, cfg.l, p, false, cfg.cutoff(m));
  r.out.method = "composite";
  r.out.tan_delta = -(fr.f * r.dpsi_R - fr.df * r.psi_R) / (fr.g * r.dpsi_R - fr.dg * r.psi_R);
  r.out.delta = std::atan(r.out.tan_delta);
  return r;
}

CompositeResult composite_solve_bound(const PotentialModel& m, double kappa, const SolveConfig& cfg) {
  CompositeResult r = composite_core(m, kappa, true, cfg);
  r.out.method = "composite";
  return r;
}

double composite_bound_residual(const PotentialModel& m, double kappa, const SolveConfig& cfg) {
  const CompositeResult r = composite_solve_bound(m, kappa, cfg);
  const FreeAt fr = free_at(m, cfg.l, kappa, true, cfg.cutoff(m));
  const double res = r.psi_R * fr.dg - r.dpsi_R * fr.g;
  return res / (std::abs(r.psi_R * fr.dg) + std::abs(r.dpsi_R * fr.g));
}

ScatteringOutput composite_bound_state(const PotentialModel& m, const SolveConfig& cfg, double lo,
                                       double hi) {
  ScatteringOutput o;
  o.method = "composite";
  o.bound_kappa =
      find_root([&](double k) { return composite_bound_residual(m, k, cfg); }, lo, hi, 1e-14);
  return o;
}

double composite_wronskian_mid(const CompositeResult& r, std::size_t k) {
  if (k >= r.parts.size()) throw DomainError("partition index out of range");
  const PartitionSolution& p = r.parts[k];
  const double x = p.grid.mid();
  const double u = interpolate(p.grid, p.u, x).value, du = interpolate(p.grid, p.du, x).value;
  const double w = interpolate(p.grid, p.w, x).value, dw = interpolate(p.grid, p.dw, x).value;
  return w * du - u * dw;
}

}  // namespace specqm
