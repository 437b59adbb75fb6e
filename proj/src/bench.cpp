#include "specqm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "specqm/analytic.hpp"
#include "specqm/cheb_quad.hpp"
#include "specqm/qm_config.hpp"
#include "specqm/qm_momentum.hpp"
#include "specqm/roots.hpp"
#include "specqm/singular_quad.hpp"

namespace specqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// f(i) for i < n on up to `jobs` threads; results land in index order
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  const std::size_t nt = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

PotentialModel with_strength(PotentialModel m, double s) {
  m.s = s;
  return m;
}

SolveConfig config_for(int l, std::size_t N, double R) {
  SolveConfig c;
  c.l = l;
  c.N = N;
  c.R = R;
  return c;
}

double phase_by(const PotentialModel& m, const std::string& method, int l, double p, std::size_t N,
                double R, double sigma) {
  const SolveConfig cfg = config_for(l, N, R);
  if (method == "schrodinger") return schrod_phase_shift(m, p, cfg).delta;
  if (method == "volterra") return volterra_phase_shift(m, p, cfg).delta;
  return std::atan(kmatrix_solve(m, l, p, N, sigma).tan_delta);
}

// delta reduced to (-pi/2, pi/2]
double wrap_half(double d) { return std::atan(std::tan(d)); }

bool needs_oracle(const RunSpec& s) {
  return s.task == Task::Converge || s.task == Task::Alen || s.task == Task::Bound;
}

std::string join_row(const std::vector<std::string>& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += r[i];
  }
  return out;
}

}  // namespace

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::str() const {
  std::string out = join_row(header) + '\n';
  for (const auto& r : rows) out += join_row(r) + '\n';
  return out;
}

Task parse_task(const std::string& s) {
  if (s == "phase") return Task::Phase;
  if (s == "alen") return Task::Alen;
  if (s == "bound") return Task::Bound;
  if (s == "converge") return Task::Converge;
  if (s == "hydrogen") return Task::Hydrogen;
  if (s == "weights") return Task::Weights;
  throw UsageError("unknown task '" + s + "'");
}

std::vector<std::string> parse_methods(const std::string& s) {
  if (s == "all") return {"schrodinger", "volterra", "momentum"};
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "schrodinger" && item != "volterra" && item != "momentum")
      throw UsageError("unknown method '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

std::vector<std::size_t> parse_N_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // a:b:c ranges as well as single values
    const auto c1 = item.find(':');
    try {
      if (c1 == std::string::npos) {
        out.push_back(std::stoul(item));
      } else {
        const auto c2 = item.find(':', c1 + 1);
        const std::size_t lo = std::stoul(item.substr(0, c1));
        const std::size_t step = c2 == std::string::npos ? 1 : std::stoul(item.substr(c1 + 1, c2 - c1 - 1));
        const std::size_t hi = std::stoul(item.substr(c2 == std::string::npos ? c1 + 1 : c2 + 1));
        if (step == 0) throw UsageError("zero step in N range");
        for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad N list '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty N list");
  return out;
}

Sweep parse_sweep(const std::string& s) {
  Sweep w;
  char extra;
  if (std::sscanf(s.c_str(), "%lf,%lf,%d%c", &w.min, &w.max, &w.count, &extra) != 3)
    throw UsageError("sweep must be min,max,count");
  return w;
}

void validate(const RunSpec& s) {
  if (s.methods.empty()) throw UsageError("empty method list");
  if (s.N.empty()) throw UsageError("empty N list");
  for (std::size_t i = 0; i < s.N.size(); ++i) {
    if (s.N[i] < 2) throw UsageError("N must be >= 2");
    if (i && s.N[i] <= s.N[i - 1]) throw UsageError("N list must be ascending");
  }
  if (s.l < 0) throw UsageError("l must be >= 0");
  if (!(s.sigma > 0.0)) throw UsageError("sigma must be positive");
  if (!(s.model.a > 0.0)) throw UsageError("a must be positive");
  if (s.jobs < 1) throw UsageError("jobs must be >= 1");
  if (s.sweep) {
    if (s.sweep->count < 1) throw UsageError("sweep count must be >= 1");
    if (s.sweep->count > 1 && !(s.sweep->max > s.sweep->min)) throw UsageError("sweep max must exceed min");
  }
  const bool coul = s.model.kind == PotentialKind::CoulombPoint;
  if (coul && s.task != Task::Hydrogen && s.task != Task::Weights)
    throw UsageError("the coulomb potential is only available for the hydrogen task");
  if (needs_oracle(s) && s.model.Z != 0.0 && !coul)
    throw UsageError("no closed-form reference with a Coulomb overlay");
  if ((s.task == Task::Converge || s.task == Task::Alen) && s.l != 0)
    throw UsageError("closed-form references are s-wave only");
  if (s.task == Task::Hydrogen && s.l > 3) throw UsageError("hydrogen supports l <= 3");
  if (s.task == Task::Weights) {
    if (s.N.back() > 256) throw UsageError("weights dump needs N <= 256");
    if (!(std::abs(s.z) < 1.0)) throw UsageError("z must lie in (-1, 1)");
  }
  const bool mom = std::find(s.methods.begin(), s.methods.end(), "momentum") != s.methods.end();
  if (mom && s.model.Z != 0.0 && s.task != Task::Hydrogen)
    throw UsageError("momentum method has no Coulomb continuum");
}

Sweep effective_sweep(const RunSpec& s) {
  if (s.sweep) return *s.sweep;
  switch (s.task) {
    case Task::Phase: return {0.05, 5.0, 100};
    case Task::Converge:
      return s.quantity == Quantity::Phase ? Sweep{0.05, 2.0, 100} : Sweep{0.025, 2.5, 100};
    case Task::Alen: return {0.025, 2.5, 100};
    case Task::Bound: return {0.01, 3.0, 200};
    case Task::Hydrogen: return {0.2, 1.5, 300};
    case Task::Weights: return {0.0, 0.0, 1};
  }
  return {};
}

std::vector<double> sweep_points(const Sweep& s) {
  std::vector<double> x(s.count);
  for (int i = 0; i < s.count; ++i)
    x[i] = s.count == 1 ? s.min : s.min + (s.max - s.min) * i / (s.count - 1.0);
  return x;
}

// ---------------------------------------------------------------------------

double phase_error(const PotentialModel& m, const std::string& method, std::size_t N, double R,
                   double sigma, const std::vector<double>& xi, int jobs) {
  const std::vector<double> e = parallel_map<double>(xi.size(), jobs, [&](std::size_t i) {
    const double ex = wrap_half(exact_phase(m, xi[i]).delta);
    const double d = std::remainder(phase_by(m, method, 0, xi[i] / m.a, N, R, sigma) - ex,
                                    std::numbers::pi);
    return std::abs(d) / std::abs(ex);
  });
  double sum = 0.0;
  for (double v : e) sum += v;
  return sum / xi.size();
}

double scattering_length_by(const PotentialModel& m, const std::string& method, std::size_t N,
                            double R, double sigma, bool* pole) {
  const SolveConfig cfg = config_for(0, N, R);
  double A;
  bool p;
  if (method == "schrodinger") {
    const ScatteringOutput o = schrod_scattering_length(m, cfg);
    A = o.scattering_length;
    p = o.pole;
  } else if (method == "volterra") {
    const ScatteringOutput o = volterra_scattering_length(m, cfg);
    A = o.scattering_length;
    p = o.pole;
  } else {
    const MomentumLength o = scattering_length_momentum(m, N, sigma);
    A = o.A;
    p = o.pole;
  }
  if (pole) *pole = p;
  return A;
}

double alen_error(const PotentialModel& m, const std::string& method, std::size_t N, double R,
                  double sigma, const std::vector<double>& s, int jobs) {
  const std::vector<double> e = parallel_map<double>(s.size(), jobs, [&](std::size_t i) {
    const PotentialModel mi = with_strength(m, s[i]);
    const double ex = exact_scattering_length(mi).value * m.a;
    if (!(std::abs(ex) <= 1e6 * m.a)) return kNaN;
    return std::abs(scattering_length_by(mi, method, N, R, sigma) - ex) / std::abs(ex);
  });
  double sum = 0.0;
  int n = 0;
  for (double v : e)
    if (!std::isnan(v)) {
      sum += v;
      ++n;
    }
  return n ? sum / n : kNaN;
}

std::vector<double> find_alen_poles(const PotentialModel& m, const std::string& method,
                                    std::size_t N, double smin, double smax, int n) {
  auto inv = [&](double s) { return 1.0 / scattering_length_by(with_strength(m, s), method, N, 0.0, 1.0); };
  std::vector<double> poles;
  for (const Bracket& b : scan_brackets(inv, smin, smax, n, false)) {
    const double r = find_root(inv, b.lo, b.hi, 1e-13);
    // a zero of A makes 1/A jump through infinity; only keep continuous crossings
    if (std::abs(inv(r)) <= 1e-6 * std::max(std::abs(inv(b.lo)), std::abs(inv(b.hi)))) poles.push_back(r);
  }
  return poles;
}

// ---------------------------------------------------------------------------

CsvTable run_phase(const RunSpec& spec) {
  const std::vector<double> xi = sweep_points(effective_sweep(spec));
  const PotentialModel& m = spec.model;
  const std::size_t N = spec.N.back();
  const bool exact = m.Z == 0.0 && spec.l == 0;
  CsvTable t;
  t.header = {"xi", "delta_exact", "tan_exact"};
  for (const auto& me : spec.methods) {
    t.header.push_back("delta_" + me);
    t.header.push_back("tan_" + me);
  }
  t.rows = parallel_map<std::vector<std::string>>(xi.size(), spec.jobs, [&](std::size_t i) {
    const double p = xi[i] / m.a;
    std::vector<std::string> r{fmt17(xi[i])};
    if (exact) {
      const ExactPhase e = exact_phase(m, xi[i]);
      r.push_back(fmt17(wrap_half(e.delta)));
      r.push_back(fmt17(e.tan_delta));
    } else {
      r.push_back("nan");
      r.push_back("nan");
    }
    for (const auto& me : spec.methods) {
      const double d = phase_by(m, me, spec.l, p, N, spec.R, spec.sigma);
      r.push_back(fmt17(d));
      r.push_back(fmt17(std::tan(d)));
    }
    return r;
  });
  return t;
}

CsvTable run_alen(const RunSpec& spec) {
  const std::vector<double> s = sweep_points(effective_sweep(spec));
  const std::size_t N = spec.N.back();
  CsvTable t;
  t.header = {"s", "A_exact"};
  for (const auto& me : spec.methods) {
    t.header.push_back("A_" + me);
    t.header.push_back("pole_" + me);
  }
  t.rows = parallel_map<std::vector<std::string>>(s.size(), spec.jobs, [&](std::size_t i) {
    const PotentialModel mi = with_strength(spec.model, s[i]);
    std::vector<std::string> r{fmt17(s[i]), fmt17(exact_scattering_length(mi).value * mi.a)};
    for (const auto& me : spec.methods) {
      bool pole = false;
      r.push_back(fmt17(scattering_length_by(mi, me, N, spec.R, spec.sigma, &pole)));
      r.push_back(pole ? "1" : "0");
    }
    return r;
  });
  return t;
}

CsvTable run_convergence(const RunSpec& spec) {
  const std::vector<double> pts = sweep_points(effective_sweep(spec));
  CsvTable t;
  t.header = {"N"};
  for (const auto& me : spec.methods) t.header.push_back("E_" + me);
  for (std::size_t N : spec.N) {
    std::vector<std::string> r{std::to_string(N)};
    for (const auto& me : spec.methods) {
      const double e = spec.quantity == Quantity::Phase
                           ? phase_error(spec.model, me, N, spec.R, spec.sigma, pts, spec.jobs)
                           : alen_error(spec.model, me, N, spec.R, spec.sigma, pts, spec.jobs);
      r.push_back(fmt17(e));
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

CsvTable run_bound(const RunSpec& spec) {
  const Sweep w = effective_sweep(spec);
  const PotentialModel& m = spec.model;
  const double a = m.range();
  const std::size_t N = spec.N.back();
  std::vector<double> exact;
  if (spec.l == 0) exact = exact_bound_states(m, w.min, w.max, 0);
  CsvTable t;
  t.header = {"method", "index", "x", "x_exact", "relative_error"};
  for (const auto& me : spec.methods) {
    std::vector<double> kap;
    const SolveConfig cfg = config_for(spec.l, N, spec.R);
    if (me == "schrodinger") {
      kap = scan_bound_states(m, cfg, w.min / a, w.max / a, w.count, ConfigMethod::Schrodinger);
    } else if (me == "volterra") {
      kap = scan_bound_states(m, cfg, w.min / a, w.max / a, w.count, ConfigMethod::Volterra);
    } else {
      const MomentumBoundProblem bp(m, spec.l, N, spec.sigma);
      auto f = [&](double k) { return bp.det_one_minus(k); };
      for (const Bracket& b : scan_brackets(f, w.min / a, w.max / a, w.count, true)) {
        const double r = find_root(f, b.lo, b.hi, 1e-14);
        if (std::abs(f(r)) <= 1e-6 * std::max(std::abs(f(b.lo)), std::abs(f(b.hi)))) kap.push_back(r);
      }
    }
    std::sort(kap.rbegin(), kap.rend());
    for (std::size_t i = 0; i < kap.size(); ++i) {
      const double x = kap[i] * a;
      double xe = kNaN;
      for (double e : exact)
        if (std::isnan(xe) || std::abs(e - x) < std::abs(xe - x)) xe = e;
      t.rows.push_back({me, std::to_string(i), fmt17(x), fmt17(xe), fmt17(std::abs(x - xe) / xe)});
    }
  }
  return t;
}

CsvTable run_hydrogen(const RunSpec& spec) {
  const Sweep w = effective_sweep(spec);
  const double Z = spec.model.kind == PotentialKind::CoulombPoint ? spec.model.Z : -1.0;
  if (!(Z < 0.0)) throw UsageError("hydrogen needs an attractive charge (Z < 0)");
  const std::size_t N = spec.N.back();
  CsvTable t;
  t.header = {"l", "n", "x_exact", "x", "relative_error"};
  const int lmax = spec.l > 0 ? spec.l : 3;
  const auto per_l = parallel_map<std::vector<double>>(lmax + 1, spec.jobs, [&](std::size_t l) {
    return hydrogen_bound_states(static_cast<int>(l), N, spec.sigma, w.min, w.max, Z);
  });
  for (int l = 0; l <= lmax; ++l) {
    const auto& xs = per_l[l];
    for (std::size_t n = 0; n < xs.size(); ++n) {
      const double xe = -Z / (n + l + 1.0);
      t.rows.push_back({std::to_string(l), std::to_string(n), fmt17(xe), fmt17(xs[n]),
                        fmt17(std::abs(xs[n] - xe) / xe)});
    }
  }
  return t;
}

CsvTable emit_weights(const RunSpec& spec) {
  const std::size_t N = spec.N.back();
  const auto ops = spectral_operators(N);
  const ChebGrid g(N, -1.0, 1.0);
  const Vector om = cauchy_weights(N, spec.z).omega;
  const Vector Om = log_weights(N, spec.z);
  CsvTable t;
  t.header = {"j", "t", "w", "omega", "Omega"};
  for (std::size_t k = 0; k < N; ++k) t.header.push_back("Wminus_" + std::to_string(k));
  for (std::size_t k = 0; k < N; ++k) t.header.push_back("Wplus_" + std::to_string(k));
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<std::string> r{std::to_string(j), fmt17(g.ref_nodes()[j]), fmt17(ops->w[j]),
                               fmt17(om[j]), fmt17(Om[j])};
    for (std::size_t k = 0; k < N; ++k) r.push_back(fmt17(ops->Wminus(j, k)));
    for (std::size_t k = 0; k < N; ++k) r.push_back(fmt17(ops->Wplus(j, k)));
    t.rows.push_back(std::move(r));
  }
  return t;
}

CsvTable run(const RunSpec& spec) {
  validate(spec);
  switch (spec.task) {
    case Task::Phase: return run_phase(spec);
    case Task::Alen: return run_alen(spec);
    case Task::Bound: return run_bound(spec);
    case Task::Converge: return run_convergence(spec);
    case Task::Hydrogen: return run_hydrogen(spec);
    case Task::Weights: return emit_weights(spec);
  }
  throw UsageError("unknown task");
}

}  // namespace specqm
