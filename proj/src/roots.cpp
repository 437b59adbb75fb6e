#include "specqm/roots.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>

#include "specqm/linalg.hpp"

namespace specqm {

std::vector<Bracket> scan_brackets(const std::function<double(double)>& f, double lo, double hi,
                                   int n, bool log_spaced) {
  if (!(hi > lo) || n < 1) throw DomainError("scan_brackets: bad range");
  if (log_spaced && !(lo > 0.0)) throw DomainError("scan_brackets: log spacing needs lo > 0");
  auto at = [&](int i) {
    const double u = double(i) / n;
    return log_spaced ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
  };
  std::vector<Bracket> out;
  double x0 = at(0), f0 = f(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = at(i), f1 = f(x1);
    if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) out.push_back({x0, x1});
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw DomainError("find_root: no sign change in bracket");
  auto tol = [rel_tol](double a, double b) {
    return std::abs(b - a) <= rel_tol * std::min(std::abs(a), std::abs(b));
  };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  if (iters >= 200) throw NumericalError("find_root: no convergence");
  return 0.5 * (r.first + r.second);
}

}  // namespace specqm
