#pragma once
// Bracket scanning and bracketed root refinement.

#include <functional>
#include <vector>

namespace specqm {

struct Bracket {
  double lo, hi;
};

/// sign changes of f on n+1 points between lo and hi (log spacing needs lo > 0)
std::vector<Bracket> scan_brackets(const std::function<double(double)>& f, double lo, double hi,
                                   int n, bool log_spaced = true);

/// TOMS 748 on a sign-changing bracket; throws DomainError without a sign change
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-14);

}  // namespace specqm
