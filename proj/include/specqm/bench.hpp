#pragma once
// Batch driver behind the specqm command: sweeps, convergence studies,
// bound-state tables, hydrogen spectrum and a weights dump, all as CSV.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specqm/potential.hpp"

namespace specqm {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Task { Phase, Alen, Bound, Converge, Hydrogen, Weights };
enum class Quantity { Phase, Alen };

struct Sweep {
  double min = 0.0, max = 0.0;
  int count = 0;
};

struct RunSpec {
  Task task = Task::Phase;
  PotentialModel model = exponential_model(0.8);
  int l = 0;
  std::vector<std::size_t> N{64};
  double R = 0.0;  ///< <= 0: 30 a
  double sigma = 1.0;
  std::vector<std::string> methods{"volterra"};  ///< schrodinger | volterra | momentum
  std::optional<Sweep> sweep;
  Quantity quantity = Quantity::Phase;  ///< what `converge` measures
  double z = 0.0;                       ///< singular point for the weights dump
  int jobs = 1;
};

Task parse_task(const std::string& s);
/// "all" expands to the three methods
std::vector<std::string> parse_methods(const std::string& s);
std::vector<std::size_t> parse_N_list(const std::string& s);
Sweep parse_sweep(const std::string& s);

/// throws UsageError
void validate(const RunSpec& spec);
/// the sweep actually used: explicit, or the task default
Sweep effective_sweep(const RunSpec& spec);
/// inclusive linear grid
std::vector<double> sweep_points(const Sweep& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string str() const;
};
/// 17 significant digits, "nan"/"inf" spelled out
std::string fmt17(double v);

CsvTable run_phase(const RunSpec& spec);
CsvTable run_alen(const RunSpec& spec);
/// rows (N, E_method...) per the average relative error definitions
CsvTable run_convergence(const RunSpec& spec);
/// rows (method, index, x, x_exact, relative error)
CsvTable run_bound(const RunSpec& spec);
CsvTable run_hydrogen(const RunSpec& spec);
CsvTable emit_weights(const RunSpec& spec);
CsvTable run(const RunSpec& spec);

/// E(N) for phase shifts: mean |delta - delta_N| / |delta| over xi, compared mod pi
double phase_error(const PotentialModel& m, const std::string& method, std::size_t N, double R,
                   double sigma, const std::vector<double>& xi, int jobs = 1);
/// E(N) for scattering lengths over strengths s; |A| > 1e6 a excluded
double alen_error(const PotentialModel& m, const std::string& method, std::size_t N, double R,
                  double sigma, const std::vector<double>& s, int jobs = 1);
/// scattering length with the given method; pole set when the solver flags it
double scattering_length_by(const PotentialModel& m, const std::string& method, std::size_t N,
                            double R, double sigma, bool* pole = nullptr);
/// strengths in (smin, smax) where A passes through infinity, refined on 1/A
std::vector<double> find_alen_poles(const PotentialModel& m, const std::string& method,
                                    std::size_t N, double smin, double smax, int n);

}  // namespace specqm
