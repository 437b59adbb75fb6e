// specqm: CSV driver for sweeps, convergence studies and bound-state tables.
// Exit codes: 0 ok, 2 usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "specqm/bench.hpp"
#include "specqm/linalg.hpp"

using namespace specqm;

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev spectral solvers for two-body scattering and bound states"};
  std::string task, potential = "exp", Nlist = "64", method = "volterra", sweep, out, quantity = "phase";
  double s = 0.8, a = 1.0, d = 0.8668 / 0.3408, R = 0.0, sigma = 1.0, z = 0.0;
  int Z = 0, l = 0, jobs = 1;
  app.add_option("task", task, "phase | alen | bound | converge | hydrogen | weights")->required();
  app.add_option("--potential", potential, "exp | hulthen | morse | coulomb");
  app.add_option("--s", s, "strength s = 2 mu V0 a^2");
  app.add_option("--a", a, "range (Bohr radius for coulomb)");
  app.add_option("--d", d, "Morse offset");
  app.add_option("--Z", Z, "charge number; with a short-range potential adds a Coulomb tail");
  app.add_option("--l", l, "partial wave");
  app.add_option("--N", Nlist, "orders, comma list or lo:step:hi");
  app.add_option("--R", R, "configuration-space cutoff, default 30 a");
  app.add_option("--sigma", sigma, "momentum-mesh slope parameter");
  app.add_option("--method", method, "schrodinger | volterra | momentum | all, or a comma list");
  app.add_option("--sweep", sweep, "min,max,count");
  app.add_option("--quantity", quantity, "converge: phase | alen");
  app.add_option("--z", z, "weights: singular point in (-1,1)");
  app.add_option("--out", out, "output path, default stdout");
  app.add_option("--jobs", jobs, "worker threads");
  app.set_config("--config", "", "key = value file; command-line flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunSpec spec;
    spec.task = parse_task(task);
    if (potential == "exp") spec.model = exponential_model(s, a);
    else if (potential == "hulthen") spec.model = hulthen_model(s, a);
    else if (potential == "morse") spec.model = morse_model(s, a, d);
    else if (potential == "coulomb") spec.model = coulomb_model(Z == 0 ? -1 : Z, a);
    else throw UsageError("unknown potential '" + potential + "'");
    if (potential != "coulomb") spec.model.Z = Z;
    spec.l = l;
    spec.N = parse_N_list(Nlist);
    spec.R = R;
    spec.sigma = sigma;
    spec.methods = parse_methods(method);
    if (!sweep.empty()) spec.sweep = parse_sweep(sweep);
    if (quantity == "phase") spec.quantity = Quantity::Phase;
    else if (quantity == "alen") spec.quantity = Quantity::Alen;
    else throw UsageError("unknown quantity '" + quantity + "'");
    spec.z = z;
    spec.jobs = jobs;

    const CsvTable t = run(spec);
    if (out.empty()) {
      std::cout << t.str();
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw UsageError("cannot open '" + out + "'");
      f << t.str();
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
