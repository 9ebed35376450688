// times the serial and parallel exhaustive sweeps against each other
#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "latpoly/harness.hpp"
#include "latpoly/io.hpp"

using namespace latpoly;

namespace {

double run_ms(const LatticePtr& L, int arity, ProfileKind kind,
              long long budget, bool parallel, SweepResult& out) {
  auto start = std::chrono::steady_clock::now();
  out = sweep_all_tables(L, arity, kind, budget, parallel);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial versus parallel sweep timing"};
  std::string lattice_spec = "chain:3";
  int arity = 2;
  int repeat = 3;
  bool sugeno = false;
  long long budget = 1000000;
  app.add_option("--lattice", lattice_spec, "lattice file or chain:<m>|boolean:<k>|diamond");
  app.add_option("--arity", arity, "function arity");
  app.add_option("--repeat", repeat, "timing repetitions");
  app.add_flag("--sugeno", sugeno, "use the idempotent profile");
  app.add_option("--budget", budget, "max table count");
  CLI11_PARSE(app, argc, argv);

  LatticePtr L;
  if (lattice_spec == "diamond")
    L = make_diamond();
  else if (lattice_spec.rfind("chain:", 0) == 0)
    L = make_chain(std::stoi(lattice_spec.substr(6)));
  else if (lattice_spec.rfind("boolean:", 0) == 0)
    L = make_boolean(std::stoi(lattice_spec.substr(8)));
  else
    L = read_lattice_file(lattice_spec);

  const ProfileKind kind = sugeno ? ProfileKind::sugeno : ProfileKind::main;
  SweepResult serial_result, parallel_result;
  double serial_best = 1e300, parallel_best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    serial_best = std::min(
        serial_best, run_ms(L, arity, kind, budget, false, serial_result));
    parallel_best = std::min(
        parallel_best, run_ms(L, arity, kind, budget, true, parallel_result));
  }

  const bool same = serial_result.tables == parallel_result.tables &&
                    serial_result.profile_true == parallel_result.profile_true &&
                    serial_result.cond_true == parallel_result.cond_true &&
                    serial_result.disagreement_count ==
                        parallel_result.disagreement_count;
  std::cout << "lattice=" << L->name() << " arity=" << arity
            << " tables=" << serial_result.tables << "\n"
            << "serial_ms=" << serial_best << "\n"
            << "parallel_ms=" << parallel_best << "\n"
            << "speedup=" << serial_best / parallel_best << "\n"
            << "results_identical=" << (same ? "1" : "0") << "\n";
  return same ? 0 : 1;
}
