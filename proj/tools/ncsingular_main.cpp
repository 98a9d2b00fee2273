#include <iostream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ncrank/instance.hpp"

using namespace ncrank;

int main(int argc, char** argv) {
  CLI::App app{"nc-singularity test over the integers via the p-adic Val-Det descent"};
  std::string file, out;
  std::int64_t p = 2;
  int max_cycles = 0, dmax = 0, trials = 0, threads = 1;
  std::uint64_t seed = 0;
  app.add_option("file", file, "instance JSON file (int field)")->required();
  app.add_option("--p", p, "prime for the p-adic reduction (default 2)");
  app.add_option("--max-cycles", max_cycles, "inner-solve cycle budget");
  app.add_option("--certify-dmax", dmax, "largest blow-up size for inner lower bounds");
  app.add_option("--trials", trials, "random substitutions per blow-up size");
  app.add_option("--seed", seed, "seed for all randomness");
  app.add_option("--threads", threads, "worker cap for oracle trials");
  app.add_option("-o,--output", out, "result JSON path (default: stdout)");
  CLI11_PARSE(app, argc, argv);
  try {
    InstanceFile inst = load_instance(file);
    SymbolicInt a = instance_to_int(inst);
    auto factory = [=](int n) {
      SolverConfig cfg = SolverConfig::defaults(n);
      if (max_cycles > 0) cfg.max_cycles = max_cycles;
      if (dmax > 0) cfg.certify_dmax = dmax;
      if (trials > 0) cfg.trials = trials;
      cfg.seed = seed;
      cfg.threads = threads;
      return cfg;
    };
    ValDetResult res = valdet_run(std::move(a), p, sppa_gfp_solver(factory));
    auto j = ncsingular_result_json(inst, res, p);
    if (out.empty())
      std::cout << j.dump(2) << "\n";
    else
      write_json(j, out);
    return res.verdict == NcVerdict::Inconclusive ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
