#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "specqm/bench.hpp"

using namespace specqm;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const char* bin = std::getenv("SPECQM_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SPECQM_BIN not set");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> r;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) r.push_back(c);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("argument parsers") {
  CHECK(parse_task("converge") == Task::Converge);
  CHECK_THROWS_AS(parse_task("plot"), UsageError);
  CHECK(parse_methods("all").size() == 3);
  CHECK(parse_methods("volterra,momentum") == std::vector<std::string>{"volterra", "momentum"});
  CHECK_THROWS_AS(parse_methods(""), UsageError);
  CHECK_THROWS_AS(parse_methods("shooting"), UsageError);
  CHECK(parse_N_list("16,32,64") == std::vector<std::size_t>{16, 32, 64});
  CHECK(parse_N_list("16:8:40") == std::vector<std::size_t>{16, 24, 32, 40});
  CHECK_THROWS_AS(parse_N_list("16,x"), UsageError);
  auto s = parse_sweep("0.1,2,5");
  CHECK(s.count == 5);
  CHECK_THROWS_AS(parse_sweep("0.1,2"), UsageError);
  auto pts = sweep_points(s);
  CHECK(pts.front() == 0.1);
  CHECK(pts.back() == 2.0);
}

TEST_CASE("validation") {
  RunSpec r;
  r.N = {64, 32};
  CHECK_THROWS_AS(validate(r), UsageError);
  r.N = {1};
  CHECK_THROWS_AS(validate(r), UsageError);
  r.N = {32};
  r.sweep = Sweep{0.1, 2.0, 0};
  CHECK_THROWS_AS(validate(r), UsageError);
  r.sweep.reset();
  r.methods.clear();
  CHECK_THROWS_AS(validate(r), UsageError);
  r.methods = {"volterra"};
  r.model = coulomb_model(-1);
  CHECK_THROWS_AS(validate(r), UsageError);
  r.task = Task::Hydrogen;
  CHECK_NOTHROW(validate(r));
  r.task = Task::Weights;
  r.N = {300};
  CHECK_THROWS_AS(validate(r), UsageError);
}

TEST_CASE("formatting") {
  CHECK(fmt17(0.1) == "0.10000000000000001");
  CHECK(fmt17(std::nan("")) == "nan");
  CsvTable t{{"a", "b"}, {{"1", "2"}}};
  CHECK(t.str() == "a,b\n1,2\n");
}

TEST_CASE("convergence table") {
  RunSpec r;
  r.task = Task::Converge;
  r.N = {48};
  r.methods = parse_methods("all");
  r.sweep = Sweep{0.1, 1.0, 5};
  auto t = run(r);
  CHECK(t.header == std::vector<std::string>{"N", "E_schrodinger", "E_volterra", "E_momentum"});
  REQUIRE(t.rows.size() == 1);
  CHECK(std::stod(t.rows[0][2]) < 1e-9);

  // the error definitions drop pole-adjacent points
  const double j0 = 2.404825557695773;
  const double e = alen_error(exponential_model(1.0), "volterra", 48, 0.0, 1.0,
                              {0.5, j0 * j0 / 4, 2.0});
  CHECK(std::isfinite(e));
  CHECK(e < 1e-9);
}

TEST_CASE("cli: weights") {
  auto r = cli("weights --N 3");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "j");
  CHECK(rows[0][2] == "w");
  const double w[3] = {4.0 / 9, 10.0 / 9, 4.0 / 9};
  double sum = 0;
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(std::stod(rows[j + 1][2]) - w[j]) < 1e-15);
    sum += std::stod(rows[j + 1][2]);
  }
  CHECK(std::abs(sum - 2.0) < 1e-15);

  auto z = parse_csv(cli("weights --N 8 --z 0").out);
  for (int j = 0; j < 8; ++j)
    CHECK(std::abs(std::stod(z[j + 1][3]) + std::stod(z[8 - j][3])) < 1e-14);

  CHECK(cli("weights --N 5 --z 0.3").out == cli("weights --N 5 --z 0.3").out);
}

TEST_CASE("cli: tasks and determinism") {
  auto a = cli("phase --potential hulthen --s 0.8 --N 32 --sweep 0.1,1,4 --method all --jobs 3");
  REQUIRE(a.code == 0);
  auto b = cli("phase --potential hulthen --s 0.8 --N 32 --sweep 0.1,1,4 --method all --jobs 1");
  CHECK(a.out == b.out);
  auto rows = parse_csv(a.out);
  CHECK(rows.size() == 5);

  auto c = cli("converge --potential exp --s 0.8 --N 48 --sweep 0.1,2,10");
  REQUIRE(c.code == 0);
  auto cr = parse_csv(c.out);
  REQUIRE(cr.size() == 2);
  CHECK(cr[1][0] == "48");

  auto bd = cli("bound --potential hulthen --s 3 --method volterra,schrodinger --sweep 0.1,3,100");
  REQUIRE(bd.code == 0);
  auto br = parse_csv(bd.out);
  REQUIRE(br.size() == 3);
  CHECK(std::abs(std::stod(br[1][2]) - 1.0) < 1e-10);

  auto h = cli("hydrogen --potential coulomb --l 1 --N 48");
  REQUIRE(h.code == 0);
  CHECK(parse_csv(h.out).size() >= 3);
}

TEST_CASE("cli: config file and output") {
  const std::string cfg = "test_bench_config.ini", out = "test_bench_out.csv";
  {
    std::ofstream f(cfg);
    f << "# weights dump\nN = 4\nz = 0.5\n";
  }
  auto r = cli("weights --config " + cfg + " --out " + out);
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_csv(ss.str()).size() == 5);
  // command line wins over the file
  CHECK(parse_csv(cli("weights --config " + cfg + " --N 2").out).size() == 3);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("cli: usage errors") {
  CHECK(cli("").code == 2);
  CHECK(cli("plot").code == 2);
  CHECK(cli("phase --method shooting").code == 2);
  CHECK(cli("phase --N 64,32").code == 2);
  CHECK(cli("phase --potential coulomb").code == 2);
  CHECK(cli("phase --sweep 1,2").code == 2);
  CHECK(cli("weights --z 1.5").code == 2);
  CHECK(cli("--help").code == 0);
}
