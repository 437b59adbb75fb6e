#include "specqm/qm_momentum.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "specqm/cheb_quad.hpp"
#include "specqm/roots.hpp"
#include "specqm/singular_quad.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

constexpr double kPi = std::numbers::pi;

MomentumMesh make_mesh(std::size_t N, double scale, double sigma) {
  if (N < 2) throw DomainError("momentum mesh needs N >= 2");
  if (!(sigma > 0.0)) throw DomainError("slope parameter must be positive");
  MomentumMesh m;
  m.N = N;
  m.sigma = sigma;
  m.scale = scale;
  m.t = ChebGrid(N, -1.0, 1.0).ref_nodes();
  m.w = gauss_cheb_weights(N);
  m.k.resize(N);
  for (std::size_t j = 0; j < N; ++j) m.k[j] = scale * (1.0 + m.t[j]) / (1.0 - m.t[j]);
  m.tau = (1.0 - sigma) / (1.0 + sigma);
  return m;
}

// zeta(s, q) for s > 1, q >= 1: a few direct terms, then Euler-Maclaurin.
// Returned scaled by M^s so that large s does not underflow.
double hurwitz_zeta_scaled(double s, double q, double M) {
  static constexpr double B2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                                   -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  double sum = 0.0;
  double Q = q;
  const double qmin = std::max(20.0, s + 10.0);
  while (Q < qmin) {
    sum += std::pow(Q / M, -s);
    Q += 1.0;
  }
  const double base = std::pow(Q / M, -s);  // (Q/M)^-s
  double em = base * Q / (s - 1.0) + 0.5 * base;
  double rise = s;  // s (s+1) ... (s+2j-2)
  double fact = 2.0;  // (2j)!
  double qp = base / Q;  // (Q/M)^-s Q^{-1}
  for (int j = 1; j <= 8; ++j) {
    const double term = B2k[j - 1] / fact * rise * qp;
    em += term;
    if (std::abs(term) < 1e-18 * std::abs(em)) break;
    rise *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    qp /= Q * Q;
  }
  return sum + em;
}

double riccati_f(int l, double x) {
  if (l == 0) return std::sin(x);
  return x * std::sph_bessel(static_cast<unsigned>(l), x);
}

// P_l(z) and W_{l-1}(z) = sum_{n=1}^{l} P_{n-1} P_{l-n} / n, valid at z = 1
void legendre_PW(int l, double z, double& P, double& W) {
  std::vector<double> p(l + 1);
  for (int n = 0; n <= l; ++n) p[n] = legendre_P(n, z);
  P = p[l];
  W = 0.0;
  for (int n = 1; n <= l; ++n) W += p[n - 1] * p[l - n] / n;
}

// Omega_j(t_i) for all nodes i, cached per N
std::shared_ptr<const std::vector<Vector>> node_log_weights(std::size_t N) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const std::vector<Vector>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  const Vector t = ChebGrid(N, -1.0, 1.0).ref_nodes();
  auto om = std::make_shared<std::vector<Vector>>();
  om->reserve(N);
  for (std::size_t i = 0; i < N; ++i) om->push_back(log_weights(N, t[i]));
  cache.emplace(N, om);
  return om;
}

void reject_coulomb(const PotentialModel& m) {
  if (m.has_coulomb())
    throw DomainError("momentum-space continuum with a Coulomb tail is not supported");
}

}  // namespace

MomentumMesh scattering_mesh(std::size_t N, double p, double sigma) {
  if (!(p > 0.0)) throw DomainError("scattering mesh needs p > 0");
  return make_mesh(N, p * sigma, sigma);
}

MomentumMesh bound_mesh(std::size_t N, double a, double sigma) {
  if (!(a > 0.0)) throw DomainError("bound mesh needs a > 0");
  return make_mesh(N, sigma / a, sigma);
}

double hulthen_projection_series(double s, double a, double x, double y) {
  x = std::abs(x);
  y = std::abs(y);
  const double X = x * x, Y = y * y;
  const double M = std::floor(30.0 + 2.0 * std::max(x, y));
  // direct part, smallest terms first
  double direct = 0.0;
  for (double n = M; n >= 1.0; n -= 1.0) direct += n / ((n * n + X) * (n * n + Y));
  // tail: sum_k (-1)^k e_k zeta(3+2k, M+1), e_k = sum_{i+j=k} X^i Y^j, in units of M
  const double Xs = X / (M * M), Ys = Y / (M * M);
  double e = 1.0, ypow = 1.0, tail = 0.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      ypow *= Ys;
      e = Xs * e + ypow;
    }
    const double term = (k % 2 ? -1.0 : 1.0) * e * hurwitz_zeta_scaled(3.0 + 2 * k, M + 1.0, M);
    tail += term;
    if (std::abs(term) < 1e-17 * std::abs(tail)) break;
  }
  tail /= M * M * M;
  return -2.0 * s * a * (direct + tail);
}

double potential_projection_numeric(const PotentialModel& m, int l, double k, double kp) {
  if (!(k > 0.0 && kp > 0.0)) throw DomainError("momenta must be positive");
  if (l < 0) throw DomainError("negative l");
  reject_coulomb(m);
  if (m.s == 0.0) return 0.0;
  const double a = m.a;
  const double rmax = (m.kind == PotentialKind::Morse ? std::max(m.d, 0.0) : 0.0) + 42.0 * a;
  const double h = std::min(a, kPi / (k + kp));
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    return riccati_f(l, k * r) * riccati_f(l, kp * r) * m.v(r);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double sum = 0.0;
  for (double r0 = 0.0; r0 < rmax; r0 += h) sum += GK::integrate(f, r0, std::min(r0 + h, rmax), 3, 1e-15);
  return sum / (k * kp);
}

namespace {

// int_0^inf r^2 j_l(kr) j_l(k'r) e^{-mu r} dr = -d/dmu [Q_l(z) / (2 k k')],
// z = (k^2 + k'^2 + mu^2) / (2 k k')
double exp_moment(int l, double mu, double k, double kp) {
  const double z = 1.0 + ((k - kp) * (k - kp) + mu * mu) / (2.0 * k * kp);
  return -mu * legendre_dQ(l, z) / (2.0 * k * k * kp * kp);
}

// exponential and Morse at any l, as sums of exp(-mu r) terms
double exp_family_closed(const PotentialModel& m, int l, double k, double kp) {
  const double a = m.a, c = m.s / (a * a);
  if (m.kind == PotentialKind::Exponential) return -c * exp_moment(l, 1.0 / a, k, kp);
  const double e = std::exp(m.d / a);
  return -c * (2.0 * e * exp_moment(l, 1.0 / a, k, kp) - e * e * exp_moment(l, 2.0 / a, k, kp));
}

// s-wave closed forms; k or k' may be zero here
double s_wave_closed(const PotentialModel& m, double k, double kp) {
  const double a = m.a, s = m.s;
  const double x = a * (k + kp), y = a * (k - kp);
  switch (m.kind) {
    case PotentialKind::Exponential:
      return -2.0 * s * a / ((1.0 + x * x) * (1.0 + y * y));
    case PotentialKind::Hulthen:
      return hulthen_projection_series(s, a, x, y);
    case PotentialKind::Morse: {
      // two exponentials, ranges a and a/2
      const double e = std::exp(m.d / a);
      return -4.0 * s * a * e / ((1.0 + x * x) * (1.0 + y * y)) +
             0.25 * s * a * e * e / ((1.0 + 0.25 * x * x) * (1.0 + 0.25 * y * y));
    }
    default:
      break;
  }
  throw DomainError("no closed-form projection for this model");
}

}  // namespace

double potential_projection(const PotentialModel& m, int l, double k, double kp) {
  if (!(k > 0.0 && kp > 0.0)) throw DomainError("momenta must be positive");
  if (l < 0) throw DomainError("negative l");
  if (m.kind == PotentialKind::CoulombPoint) {
    const double x = m.bohr * (k + kp), y = m.bohr * (k - kp);
    if (y == 0.0) throw DomainError("Coulomb projection diverges at k = k'");
    const double z = (k * k + kp * kp) / (2.0 * k * kp);
    return 4.0 * m.Z * m.bohr * legendre_PQ(l, z).Q / (x * x - y * y);
  }
  if (m.s == 0.0) return 0.0;
  if (l == 0) return s_wave_closed(m, k, kp);
  if (m.kind == PotentialKind::Hulthen) return potential_projection_numeric(m, l, k, kp);
  return exp_family_closed(m, l, k, kp);
}

// ---------------------------------------------------------------------------

KMatrixResult kmatrix_solve(const PotentialModel& m, int l, double p, std::size_t N, double sigma) {
  reject_coulomb(m);
  KMatrixResult r;
  r.p = p;
  r.mesh = scattering_mesh(N, p, sigma);
  const MomentumMesh& mm = r.mesh;
  const Vector omega = cauchy_weights(N, mm.tau).omega;
  const double pre = 4.0 * p * sigma * sigma * sigma / (kPi * (1.0 + sigma) * (1.0 + sigma));
  Vector G(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double q = (1.0 + mm.t[i]) / (1.0 - mm.t[i]);
    G[i] = pre * omega[i] / (1.0 - mm.t[i] * mm.tau) * q * q;
  }
  Matrix U(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) U(i, j) = U(j, i) = potential_projection(m, l, mm.k[i], mm.k[j]);
  Matrix A = scale_cols(U, G);
  for (std::size_t i = 0; i < N; ++i) A(i, i) += 1.0;
  const MatrixSolveReport ks = solve(A, U);
  r.K = ks.solution;
  Vector up(N);
  for (std::size_t i = 0; i < N; ++i) up[i] = potential_projection(m, l, mm.k[i], p);
  const LinearSolveReport hs = solve(A, up);
  r.half_shell = hs.solution;
  r.condition = hs.condition;
  r.singular = hs.singular || ks.singular;
  const Vector Gt = cardinal_all_ref(N, mm.tau);
  r.on_shell = dot(Gt, r.half_shell);
  double ny = potential_projection(m, l, p, p);
  for (std::size_t j = 0; j < N; ++j) ny -= up[j] * G[j] * r.half_shell[j];
  r.on_shell_nystrom = ny;
  r.tan_delta = -p * r.on_shell_nystrom;
  return r;
}

TMatrixResult tmatrix_from_K(const KMatrixResult& k) {
  using C = std::complex<double>;
  TMatrixResult t;
  const double p = k.p, K = k.on_shell_nystrom;
  const C den = C(1.0, p * K);
  t.singular = std::abs(den) < 1e-12;
  t.on_shell = K / den;
  t.half_shell.resize(k.half_shell.size());
  for (std::size_t i = 0; i < k.half_shell.size(); ++i)
    t.half_shell[i] = k.half_shell[i] - C(0.0, p) * k.half_shell[i] * K / den;
  const C amp = -p * t.on_shell;
  t.unitarity_residual = std::abs(amp) == 0.0 ? 0.0 : std::abs((1.0 / amp).imag() + 1.0);
  // t = e^{i delta} sin delta
  t.tan_delta = amp.imag() / amp.real();
  if (amp.real() == 0.0) t.tan_delta = 0.0;
  return t;
}

// ---------------------------------------------------------------------------

MomentumBoundProblem::MomentumBoundProblem(const PotentialModel& m, int l, std::size_t N,
                                           double sigma)
    : m_(m), l_(l), mesh_(bound_mesh(N, m.range(), sigma)), U_(N, N) {
  reject_coulomb(m);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      U_(i, j) = U_(j, i) = potential_projection(m_, l_, mesh_.k[i], mesh_.k[j]);
}

Vector MomentumBoundProblem::gamma(double kappa) const {
  if (!(kappa > 0.0)) throw DomainError("bound state needs kappa > 0");
  const double a = m_.range(), sg = mesh_.sigma;
  const double c = 4.0 * sg / (kPi * a), ka = kappa * a / sg;
  Vector G(mesh_.N);
  for (std::size_t j = 0; j < mesh_.N; ++j) {
    const double om = 1.0 - mesh_.t[j], op = 1.0 + mesh_.t[j];
    const double ratio = ka * om / op;
    G[j] = c * mesh_.w[j] / (om * om) / (1.0 + ratio * ratio);
  }
  return G;
}

Matrix MomentumBoundProblem::kernel(double kappa) const {
  const Vector G = gamma(kappa);
  Vector sq(G.size());
  for (std::size_t j = 0; j < G.size(); ++j) sq[j] = std::sqrt(G[j]);
  Matrix M = scale_rows(sq, scale_cols(U_, sq));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = -M(i, j);
  return M;
}

Vector MomentumBoundProblem::eigenvalues(double kappa) const {
  Vector ev = symmetric_eigenvalues(kernel(kappa));
  std::reverse(ev.begin(), ev.end());
  return ev;
}

double MomentumBoundProblem::det_one_minus(double kappa) const {
  Matrix A = kernel(kappa);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = (i == j ? 1.0 : 0.0) - A(i, j);
  return determinant(A);
}

BoundSpectrum bound_state_eigen(const PotentialModel& m, int l, double kappa, std::size_t N,
                                double sigma) {
  const MomentumBoundProblem bp(m, l, N, sigma);
  return {bp.eigenvalues(kappa), bp.det_one_minus(kappa)};
}

double momentum_bound_state(const PotentialModel& m, int l, std::size_t N, double sigma,
                            double kappa_lo, double kappa_hi, BoundCriterion c) {
  const MomentumBoundProblem bp(m, l, N, sigma);
  if (c == BoundCriterion::Determinant)
    return find_root([&](double k) { return bp.det_one_minus(k); }, kappa_lo, kappa_hi, 1e-14);
  return find_root([&](double k) { return bp.eigenvalues(k)[0] - 1.0; }, kappa_lo, kappa_hi, 1e-14);
}

// ---------------------------------------------------------------------------

double hydrogen_determinant(int l, double x, std::size_t N, double sigma, double Z) {
  if (l < 0 || l > 3) throw DomainError("hydrogen solver supports 0 <= l <= 3");
  if (!(x > 0.0)) throw DomainError("x must be positive");
  const MomentumMesh mm = make_mesh(N, sigma, sigma);
  const auto Om = node_log_weights(N);
  const Vector& t = mm.t;
  const Vector& xi = mm.k;
  const double c = -Z * 4.0 * sigma / kPi;
  Matrix A(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const double z = (xi[i] * xi[i] + xi[j] * xi[j]) / (2.0 * xi[i] * xi[j]);
      double P, W;
      legendre_PW(l, z, P, W);
      const double reg = mm.w[j] * (P * std::log(std::abs(1.0 - t[i] * t[j])) - W);
      const double den = (1.0 - t[j]) * (1.0 - t[j]) *
                         std::sqrt((xi[i] * xi[i] + x * x) * (xi[j] * xi[j] + x * x));
      A(i, j) = (i == j ? 1.0 : 0.0) - c * (reg - P * (*Om)[i][j]) / den;
    }
  }
  return determinant(A);
}

std::vector<double> hydrogen_bound_states(int l, std::size_t N, double sigma, double x_lo,
                                          double x_hi, double Z) {
  auto f = [&](double x) { return hydrogen_determinant(l, x, N, sigma, Z); };
  std::vector<double> roots;
  for (const Bracket& b : scan_brackets(f, x_lo, x_hi, 300, true)) {
    const double r = find_root(f, b.lo, b.hi, 1e-14);
    if (std::abs(f(r)) <= 1e-6 * std::max(std::abs(f(b.lo)), std::abs(f(b.hi)))) roots.push_back(r);
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

// ---------------------------------------------------------------------------

MomentumLength scattering_length_momentum(const PotentialModel& m, std::size_t N, double sigma) {
  reject_coulomb(m);
  const MomentumMesh mm = bound_mesh(N, m.range(), sigma);
  const double c = 4.0 * sigma / (kPi * m.range());
  Matrix U(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) U(i, j) = U(j, i) = potential_projection(m, 0, mm.k[i], mm.k[j]);
  Vector G0(N);
  for (std::size_t j = 0; j < N; ++j) G0[j] = c * mm.w[j] / ((1.0 - mm.t[j]) * (1.0 - mm.t[j]));
  Matrix A = scale_cols(U, G0);
  for (std::size_t i = 0; i < N; ++i) A(i, i) += 1.0;
  MomentumLength r;
  // K(k_i, 0) through cardinal functions at t = -1
  const Vector Gc = cardinal_all_ref(N, -1.0);
  const LinearSolveReport rc = solve(A, matvec(U, Gc));
  r.A_cardinal = -dot(Gc, rc.solution);
  // same system with the exact column U(k_i, 0)
  Vector u0(N);
  for (std::size_t i = 0; i < N; ++i) u0[i] = s_wave_closed(m, mm.k[i], 0.0);
  const LinearSolveReport rep = solve(A, u0);
  double K00 = s_wave_closed(m, 0.0, 0.0);
  for (std::size_t j = 0; j < N; ++j) K00 -= u0[j] * G0[j] * rep.solution[j];
  r.A = -K00;
  r.condition = rep.condition;
  r.pole = rep.singular;
  return r;
}

}  // namespace specqm
