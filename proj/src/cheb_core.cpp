#include "specqm/cheb_core.hpp"

#include <cmath>
#include <numbers>

namespace specqm {

double cheb_T(int n, double t) {
  if (n < 0) throw DomainError("cheb_T: negative order");
  if (n == 0) return 1.0;
  double t0 = 1.0, t1 = t;
  for (int k = 1; k < n; ++k) {
    const double t2 = 2.0 * t * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

double cheb_U(int n, double t) {
  if (n < -1) throw DomainError("cheb_U: order below -1");
  if (n == -1) return 0.0;
  double u0 = 0.0, u1 = 1.0;
  for (int k = 0; k < n; ++k) {
    const double u2 = 2.0 * t * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

ChebGrid::ChebGrid(std::size_t N, double a, double b) : a_(a), b_(b) {
  if (N == 0) throw DomainError("grid order must be positive");
  if (!(a < b)) throw DomainError("grid interval needs a < b");
  t_.resize(N);
  x_.resize(N);
  const double n = static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    // sin form of cos(pi (j+1/2)/N): exactly antisymmetric, exact zero at the centre
    t_[j] = std::sin(std::numbers::pi * (n - 1.0 - 2.0 * static_cast<double>(j)) / (2.0 * n));
    x_[j] = to_x(t_[j]);
  }
}

ChebGrid make_grid(std::size_t N, double a, double b) { return ChebGrid(N, a, b); }

double cheb_T_at_node(std::size_t N, int k, std::size_t j) {
  return std::cos(k * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(N));
}

Vector cardinal_all_ref(std::size_t N, double t) {
  Vector Tt(N);
  Tt[0] = 1.0;
  if (N > 1) Tt[1] = t;
  for (std::size_t k = 2; k < N; ++k) Tt[k] = 2.0 * t * Tt[k - 1] - Tt[k - 2];
  Vector G(N);
  const double n = static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    double s = 0.5;  // halved k=0 term, T_0 = 1 on both sides
    for (std::size_t k = 1; k < N; ++k) s += cheb_T_at_node(N, static_cast<int>(k), j) * Tt[k];
    G[j] = 2.0 * s / n;
  }
  return G;
}

Vector cardinal_all(const ChebGrid& g, double x) { return cardinal_all_ref(g.order(), g.to_t(x)); }

double cardinal(const ChebGrid& g, std::size_t j, double x) {
  const std::size_t N = g.order();
  if (j >= N) throw DomainError("cardinal: index out of range");
  const double t = g.to_t(x);
  double tkm1 = 1.0, tk = t, s = 0.5;
  for (std::size_t k = 1; k < N; ++k) {
    s += cheb_T_at_node(N, static_cast<int>(k), j) * tk;
    const double next = 2.0 * t * tk - tkm1;
    tkm1 = tk;
    tk = next;
  }
  return 2.0 * s / static_cast<double>(N);
}

SpectralCoeffs coeffs_from_values(const ChebGrid& g, const Vector& f) {
  const std::size_t N = g.order();
  if (f.size() != N) throw DomainError("coeffs_from_values: length mismatch");
  SpectralCoeffs c{Vector(N)};
  for (std::size_t k = 0; k < N; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += cheb_T_at_node(N, static_cast<int>(k), j) * f[j];
    c.c[k] = 2.0 * s / static_cast<double>(N);
  }
  return c;
}

double synthesize(const SpectralCoeffs& c, double t) {
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.c.size(); k-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c.c[k];
    b2 = b1;
    b1 = b0;
  }
  if (c.c.empty()) return 0.0;
  return t * b1 - b2 + 0.5 * c.c[0];
}

Vector values_from_coeffs(const ChebGrid& g, const SpectralCoeffs& c) {
  const std::size_t N = g.order();
  Vector f(N);
  for (std::size_t j = 0; j < N; ++j) {
    double s = 0.5 * c.c[0];
    for (std::size_t k = 1; k < c.c.size(); ++k)
      s += c.c[k] * cheb_T_at_node(N, static_cast<int>(k), j);
    f[j] = s;
  }
  return f;
}

Interpolated interpolate(const ChebGrid& g, const Vector& f, double x) {
  if (f.size() != g.order()) throw DomainError("interpolate: length mismatch");
  for (std::size_t j = 0; j < f.size(); ++j)
    if (x == g.nodes()[j]) return {f[j], false};
  const Vector G = cardinal_all(g, x);
  return {dot(G, f), x < g.a() || x > g.b()};
}

double interpolate2d(const ChebGrid& gx, const ChebGrid& gy, const Matrix& F, double x, double y) {
  if (F.rows() != gx.order() || F.cols() != gy.order())
    throw DomainError("interpolate2d: dimension mismatch");
  const Vector Gx = cardinal_all(gx, x);
  const Vector Gy = cardinal_all(gy, y);
  return dot(Gx, matvec(F, Gy));
}

Matrix diff_matrix(const ChebGrid& g) {
  const std::size_t N = g.order();
  const auto& t = g.ref_nodes();
  // U_{k-1}(t_i) table
  Matrix U(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    double u0 = 0.0, u1 = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
      U(i, k) = u1;  // U_k
      const double u2 = 2.0 * t[i] * u1 - u0;
      u0 = u1;
      u1 = u2;
    }
  }
  Matrix D(N, N);
  const double scale = 2.0 / static_cast<double>(N) / g.half_width();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      // d/dt T_k = k U_{k-1}
      for (std::size_t k = 1; k < N; ++k)
        s += static_cast<double>(k) * U(i, k - 1) * cheb_T_at_node(N, static_cast<int>(k), j);
      D(i, j) = scale * s;
    }
  return D;
}

}  // namespace specqm
