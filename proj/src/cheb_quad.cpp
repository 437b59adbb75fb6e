#include "specqm/cheb_quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace specqm {

Vector gauss_cheb_weights(std::size_t N) {
  if (N == 0) throw DomainError("weights: N must be positive");
  Vector w(N);
  const std::size_t imax = (N - 1) / 2;
  for (std::size_t j = 0; j < N; ++j) {
    double s = -0.5;  // i = 0 term, T_0/(0-1), halved
    for (std::size_t i = 1; i <= imax; ++i) {
      const double ii = static_cast<double>(i);
      s += cheb_T_at_node(N, static_cast<int>(2 * i), j) / (4.0 * ii * ii - 1.0);
    }
    w[j] = -4.0 * s / static_cast<double>(N);
  }
  return w;
}

double gauss_cheb_weighted_integral(const Vector& f) {
  if (f.empty()) throw DomainError("empty sample vector");
  double s = 0.0;
  for (double v : f) s += v;
  return std::numbers::pi * s / static_cast<double>(f.size());
}

namespace {

// Columns of S-/S+: antiderivatives of T_{k} (k = column, 0-based) evaluated at t.
// sign = -1 for S- (from -1 up to t), +1 for S+ (from t to 1).
double s_entry(int k, double t, int sign) {
  const int j = k + 1;  // 1-based column
  if (j == 1) return sign < 0 ? cheb_T(1, t) + 1.0 : 1.0 - cheb_T(1, t);
  if (j == 2) return sign < 0 ? (cheb_T(2, t) - 1.0) / 4.0 : (1.0 - cheb_T(2, t)) / 4.0;
  const double jj = j;
  const double core = cheb_T(j, t) / (2.0 * jj) - cheb_T(j - 2, t) / (2.0 * (jj - 2.0));
  if (sign < 0) return core + ((j % 2 == 0) ? 1.0 : -1.0) / (jj * (jj - 2.0));
  return -core - 1.0 / (jj * (jj - 2.0));
}

}  // namespace

SpectralOperators build_spectral_operators(std::size_t N) {
  if (N == 0) throw DomainError("operators: N must be positive");
  SpectralOperators op;
  op.N = N;
  op.w = gauss_cheb_weights(N);
  op.M = Matrix(N, N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < N; ++k) op.M(j, k) = cheb_T_at_node(N, static_cast<int>(j), k);

  // d^{-1} M folded: row 0 / N, others / (N/2)
  Matrix Md = op.M;
  const double n = static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double f = j == 0 ? 1.0 / n : 2.0 / n;
    for (std::size_t k = 0; k < N; ++k) Md(j, k) *= f;
  }

  const ChebGrid g(N, -1.0, 1.0);
  Matrix Sm(N, N), Sp(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      Sm(i, k) = s_entry(static_cast<int>(k), g.ref_nodes()[i], -1);
      Sp(i, k) = s_entry(static_cast<int>(k), g.ref_nodes()[i], +1);
    }
  op.Wminus = matmul(Sm, Md);
  op.Wplus = matmul(Sp, Md);
  return op;
}

std::shared_ptr<const SpectralOperators> spectral_operators(std::size_t N) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const SpectralOperators>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  // build outside the lock; a concurrent builder for the same N produces an identical object
  auto built = std::make_shared<const SpectralOperators>(build_spectral_operators(N));
  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(N, built);
  return it->second;
}

double integrate_interval(const ChebGrid& g, const Vector& f) {
  if (f.size() != g.order()) throw DomainError("integrate_interval: length mismatch");
  return g.half_width() * dot(spectral_operators(g.order())->w, f);
}

RationalMap::RationalMap(double s) : scale(s) {
  if (!(s > 0.0)) throw DomainError("rational map scale must be positive");
}

MappedNodes rational_map_nodes(const RationalMap& map, const ChebGrid& ref) {
  const std::size_t N = ref.order();
  const auto ops = spectral_operators(N);
  MappedNodes m{Vector(N), Vector(N), Vector(N)};
  for (std::size_t j = 0; j < N; ++j) {
    const double t = ref.ref_nodes()[j];
    m.r[j] = map.r(t);
    m.jac[j] = map.jacobian(t);
    m.weights[j] = ops->w[j] * m.jac[j];
  }
  return m;
}

}  // namespace specqm
