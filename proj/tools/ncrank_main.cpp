#include <iostream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ncrank/instance.hpp"

using namespace ncrank;

int main(int argc, char** argv) {
  CLI::App app{"certified nc-rank of a linear symbolic matrix over GF(p)"};
  std::string file, out;
  int max_cycles = 0, dmax = 0, trials = 0, threads = 1;
  std::uint64_t seed = 0;
  app.add_option("file", file, "instance JSON file")->required();
  app.add_option("--max-cycles", max_cycles, "cycle budget before giving up");
  app.add_option("--certify-dmax", dmax, "largest blow-up size for the lower bound");
  app.add_option("--trials", trials, "random substitutions per blow-up size");
  app.add_option("--seed", seed, "seed for all randomness");
  app.add_option("--threads", threads, "worker cap for oracle trials");
  app.add_option("-o,--output", out, "result JSON path (default: stdout)");
  CLI11_PARSE(app, argc, argv);
  try {
    InstanceFile inst = load_instance(file);
    SymbolicGfp a = instance_to_gfp(inst);
    SolverConfig cfg = SolverConfig::defaults(inst.n);
    if (max_cycles > 0) cfg.max_cycles = max_cycles;
    if (dmax > 0) cfg.certify_dmax = dmax;
    if (trials > 0) cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    SolverState st = sppa_run(a, cfg);
    FrCertificate cert = mvsp_to_fr(*st.best, a);
    auto j = ncrank_result_json(inst, st, cert, cfg);
    if (out.empty())
      std::cout << j.dump(2) << "\n";
    else
      write_json(j, out);
    if (!st.certified) std::cerr << "uncertified: cycle budget exhausted\n";
    return st.certified ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
